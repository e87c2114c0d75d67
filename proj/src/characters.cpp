#include "jackchar/characters.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "jackchar/error.hpp"
#include "jackchar/linalg.hpp"

namespace jackchar {

LaurentScalar alpha_content(int x, int y) {
  return LaurentScalar::monomial(x, 1) + LaurentScalar::monomial(-y, -1);
}

LaurentScalar ch_classical(JackTable& jack, const Partition& pi, const Partition& lambda) {
  if (lambda.size() < pi.size()) return LaurentScalar();
  int padding = lambda.size() - pi.size();
  int m1 = pi.multiplicity(1);
  Rational factor = Rational(binomial(padding + m1, m1)) * Rational(pi.z_factor());
  const AlphaPoly& theta = jack.theta(pi.padded_with_ones(padding), lambda);
  // alpha = A^2 turns the alpha-degree-k coefficient into an A^{2k} term.
  LaurentScalar out;
  for (int k = 0; k <= theta.degree(); ++k)
    out += LaurentScalar::monomial(theta.coefficient(k) * factor, 2 * k);
  return out.shifted(-(pi.size() - pi.length()));
}

LaurentScalar ch_content_formula(const Partition& pi, const Partition& lambda) {
  int n = lambda.size();
  LaurentScalar gamma = gamma_as_laurent();
  // shifted content of the box (column x, row y): alpha_content + gamma
  auto shifted_content = [&](int x, int y) { return alpha_content(x, y) + gamma; };
  auto each_box = [&](const std::function<void(int, int)>& visit) {
    for (int y = 1; y <= lambda.length(); ++y)
      for (int x = 1; x <= lambda.part(y); ++x) visit(x, y);
  };

  if (pi == Partition()) return LaurentScalar::from_int(1);
  if (pi == Partition({1})) return LaurentScalar::from_int(n);
  if (pi == Partition({2})) {
    LaurentScalar total;
    each_box([&](int x, int y) { total += shifted_content(x, y).scaled(2); });
    return total;
  }
  if (pi == Partition({3})) {
    // single sum of 3 c(c + gamma) + 3/2 per box, minus 3/2 per ordered box
    // pair (n^2 of them)
    LaurentScalar total;
    each_box([&](int x, int y) {
      LaurentScalar c = shifted_content(x, y);
      total += c * (c + gamma) * LaurentScalar::from_int(3);
      total += LaurentScalar::from_rational(Rational(3, 2));
    });
    total += LaurentScalar::from_rational(Rational(-3, 2) * n * n);
    return total;
  }
  if (pi == Partition({1, 1}))
    return LaurentScalar::from_rational(Rational(n) * n - n);
  fail(ErrorCode::UnsupportedPartition,
       "no content formula for " + pi.to_string());
}

Report verify_K3(JackTable& jack, const Partition& pi, int max_size) {
  Report report;
  report.check = "kcondition-vanishing";
  report.parameters = {{"pi", pi.parts()}, {"max_size", max_size}};
  for (int n = 0; n < pi.size() && n <= max_size; ++n)
    for (const auto& lambda : partitions_of(n)) {
      LaurentScalar value = ch_classical(jack, pi, lambda);
      nlohmann::json unit = {{"lambda", lambda.parts()}, {"zero", value.is_zero()}};
      report.units.push_back(unit);
      if (!value.is_zero())
        report.violations.push_back("Ch_" + pi.to_string() + "(" + lambda.to_string() +
                                    ") = " + value.to_string() + " expected 0");
    }
  return report;
}

Report verify_K4(JackTable& jack, const Partition& pi, int max_size) {
  Report report;
  report.check = "kcondition-laurent-degree";
  report.parameters = {{"pi", pi.parts()}, {"max_size", max_size}};
  int bound = pi.size() - pi.length();
  for (int n = 0; n <= max_size; ++n)
    for (const auto& lambda : partitions_of(n)) {
      LaurentScalar value = ch_classical(jack, pi, lambda);
      auto degree = value.upper_degree();
      bool ok = !degree.has_value() || *degree <= bound;
      report.units.push_back({{"lambda", lambda.parts()},
                              {"degree", degree ? nlohmann::json(*degree) : nlohmann::json()},
                              {"bound", bound}});
      if (!ok)
        report.violations.push_back("deg_A Ch_" + pi.to_string() + "(" +
                                    lambda.to_string() + ") = " + std::to_string(*degree) +
                                    " > " + std::to_string(bound));
    }
  return report;
}

namespace {

// Exponent vectors e with sum(e) <= degree, m coordinates.
void enumerate_exponents(int m, int degree, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == m) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    current.push_back(e);
    enumerate_exponents(m, degree - e, current, out);
    current.pop_back();
  }
}

Partition partition_from_rows(const std::vector<int>& rows) {
  std::vector<int> parts;
  for (int r : rows)
    if (r > 0) parts.push_back(r);
  return Partition(std::move(parts));
}

// p_pi(x_1..x_m) expanded as exponent vector -> coefficient.
std::map<std::vector<int>, Rational> powersum_monomials(const Partition& pi, int m) {
  std::map<std::vector<int>, Rational> acc{{std::vector<int>(m, 0), Rational(1)}};
  for (int k : pi.parts()) {
    std::map<std::vector<int>, Rational> next;
    for (const auto& [e, c] : acc)
      for (int j = 0; j < m; ++j) {
        std::vector<int> e2 = e;
        e2[j] += k;
        next[e2] += c;
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

Report verify_K2(JackTable& jack, const Partition& pi, int m) {
  Report report;
  report.check = "kcondition-row-polynomial";
  report.parameters = {{"pi", pi.parts()}, {"rows", m}};
  int degree = pi.size();

  std::vector<std::vector<int>> exponents;
  std::vector<int> scratch;
  enumerate_exponents(m, degree, scratch, exponents);

  // lattice point u -> diagram rows lambda_j = u_j + ... + u_m
  auto rows_of = [&](const std::vector<int>& u) {
    std::vector<int> rows(m, 0);
    for (int j = m - 1; j >= 0; --j) rows[j] = u[j] + (j + 1 < m ? rows[j + 1] : 0);
    return rows;
  };

  std::vector<std::vector<int>> fit_points = exponents;  // sum(u) <= degree
  std::vector<std::vector<int>> holdout;
  {
    std::vector<std::vector<int>> all;
    std::vector<int> tmp;
    enumerate_exponents(m, degree + 1, tmp, all);
    for (const auto& u : all) {
      int total = 0;
      for (int v : u) total += v;
      if (total == degree + 1) holdout.push_back(u);
    }
  }

  // Evaluate Ch at every fit point and collect the A-exponent support.
  std::vector<LaurentScalar> values;
  std::set<int> support;
  for (const auto& u : fit_points) {
    values.push_back(ch_classical(jack, pi, partition_from_rows(rows_of(u))));
    for (const auto& [exp, c] : values.back().coefficients()) support.insert(exp);
  }
  int top_shift = pi.size() - pi.length();
  support.insert(top_shift);

  // One exact solve per A-exponent; the matrix (monomials evaluated on the
  // lattice) is shared and nonsingular by unisolvence of the simplex lattice.
  std::vector<std::vector<Rational>> matrix;
  for (const auto& u : fit_points) {
    std::vector<int> rows = rows_of(u);
    std::vector<Rational> line;
    for (const auto& e : exponents) {
      Rational v = 1;
      for (int j = 0; j < m; ++j)
        for (int t = 0; t < e[j]; ++t) v *= rows[j];
      line.push_back(v);
    }
    matrix.push_back(std::move(line));
  }
  std::vector<LaurentScalar> coeffs(exponents.size());
  for (int k : support) {
    std::vector<Rational> rhs;
    for (const auto& value : values) rhs.push_back(value.coefficient_at(k));
    SolveResult solved = solve_linear(matrix, rhs);
    if (solved.status != SolveStatus::Unique)
      fail(ErrorCode::FitFailure, "simplex lattice fit has no unique solution");
    for (size_t i = 0; i < exponents.size(); ++i)
      coeffs[i] += LaurentScalar::monomial(solved.solution[i], k);
  }

  // Held-out shell must reproduce from the fit.
  for (const auto& u : holdout) {
    std::vector<int> rows = rows_of(u);
    LaurentScalar predicted;
    for (size_t i = 0; i < exponents.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      Rational v = 1;
      for (int j = 0; j < m; ++j)
        for (int t = 0; t < exponents[i][j]; ++t) v *= rows[j];
      predicted += coeffs[i].scaled(v);
    }
    LaurentScalar actual = ch_classical(jack, pi, partition_from_rows(rows));
    report.units.push_back({{"rows", rows}, {"held_out", true},
                            {"match", predicted == actual}});
    if (!(predicted == actual))
      report.violations.push_back("degree-" + std::to_string(degree) +
                                  " fit fails at rows " + partition_from_rows(rows).to_string());
  }

  // Top homogeneous part must be A^{|pi|-len(pi)} p_pi.
  auto expected_top = powersum_monomials(pi, m);
  bool top_ok = true;
  for (size_t i = 0; i < exponents.size(); ++i) {
    int total = 0;
    for (int e : exponents[i]) total += e;
    if (total != degree) continue;
    auto it = expected_top.find(exponents[i]);
    LaurentScalar expect =
        it == expected_top.end()
            ? LaurentScalar()
            : LaurentScalar::monomial(it->second, top_shift);
    if (!(coeffs[i] == expect)) top_ok = false;
  }
  report.units.push_back({{"top_part", top_ok}});
  if (!top_ok)
    report.violations.push_back("top homogeneous part differs from A^" +
                                std::to_string(top_shift) + " p_" + pi.to_string());
  return report;
}

}  // namespace jackchar
