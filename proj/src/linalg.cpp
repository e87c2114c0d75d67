#include "jackchar/linalg.hpp"

#include <algorithm>

#include "jackchar/error.hpp"

namespace jackchar {

SolveResult solve_linear(const std::vector<std::vector<Rational>>& matrix,
                         const std::vector<Rational>& rhs) {
  if (matrix.size() != rhs.size()) fail(ErrorCode::SizeMismatch, "rows vs rhs");
  size_t cols = matrix.empty() ? 0 : matrix[0].size();
  for (const auto& row : matrix)
    if (row.size() != cols) fail(ErrorCode::SizeMismatch, "ragged matrix");

  IncrementalSolver solver(static_cast<int>(cols));
  for (size_t i = 0; i < matrix.size(); ++i) {
    if (!solver.add_equation(matrix[i], rhs[i])) {
      SolveResult out;
      out.status = SolveStatus::Inconsistent;
      out.inconsistent_row = static_cast<int>(i);
      return out;
    }
  }
  SolveResult out;
  if (!solver.determined()) {
    out.status = SolveStatus::Underdetermined;
    out.free_columns = solver.free_columns();
    return out;
  }
  out.status = SolveStatus::Unique;
  out.solution = solver.solution();
  return out;
}

std::vector<Rational> interpolate_poly(const std::vector<Rational>& xs,
                                       const std::vector<Rational>& ys,
                                       int max_degree) {
  if (xs.size() != ys.size()) fail(ErrorCode::SizeMismatch, "xs vs ys");
  size_t need = static_cast<size_t>(max_degree) + 1;
  if (max_degree < 0 || xs.size() < need)
    fail(ErrorCode::SizeMismatch, "too few interpolation points");
  for (size_t i = 0; i < need; ++i)
    for (size_t j = i + 1; j < need; ++j)
      if (xs[i] == xs[j]) fail(ErrorCode::Degenerate, "repeated interpolation node");

  // Newton divided differences on the first max_degree + 1 points.
  std::vector<Rational> divided(ys.begin(), ys.begin() + need);
  for (size_t level = 1; level < need; ++level)
    for (size_t i = need - 1; i >= level; --i)
      divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);

  // Expand the Newton form into ascending monomial coefficients.
  std::vector<Rational> coeffs(need, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // product of (x - xs[0..k-1])
  for (size_t k = 0; k < need; ++k) {
    for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += divided[k] * basis[i];
    if (k + 1 < need) {
      basis.push_back(Rational(0));
      for (size_t i = basis.size() - 1; i >= 1; --i)
        basis[i] = basis[i - 1] - xs[k] * basis[i];
      basis[0] = -xs[k] * basis[0];
    }
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();

  for (size_t i = need; i < xs.size(); ++i) {
    Rational value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * xs[i] + *it;
    if (value != ys[i])
      fail(ErrorCode::DegreeExceeded,
           "verification point " + std::to_string(i) + " off the fitted polynomial");
  }
  return coeffs;
}

bool IncrementalSolver::add_equation(std::vector<Rational> coeffs, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != n_) fail(ErrorCode::SizeMismatch, "equation width");
  for (const auto& [pivot, row] : rows_) {
    if (coeffs[pivot] == 0) continue;
    Rational factor = coeffs[pivot];
    for (int j = pivot; j < n_; ++j)
      if (row.first[j] != 0) coeffs[j] -= factor * row.first[j];
    rhs -= factor * row.second;
  }
  int pivot = -1;
  for (int j = 0; j < n_; ++j)
    if (coeffs[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == -1) return rhs == 0;
  Rational lead = coeffs[pivot];
  for (int j = pivot; j < n_; ++j) coeffs[j] /= lead;
  rhs /= lead;
  rows_.emplace(pivot, std::make_pair(std::move(coeffs), std::move(rhs)));
  return true;
}

std::vector<int> IncrementalSolver::free_columns() const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (!rows_.count(j)) out.push_back(j);
  return out;
}

std::vector<Rational> IncrementalSolver::solution() const {
  if (!determined()) fail(ErrorCode::Underdetermined, "solution of non-determined system");
  std::vector<Rational> x(n_, Rational(0));
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    const auto& [pivot, row] = *it;
    Rational value = row.second;
    for (int j = pivot + 1; j < n_; ++j)
      if (row.first[j] != 0) value -= row.first[j] * x[j];
    x[pivot] = value;
  }
  return x;
}

}  // namespace jackchar
