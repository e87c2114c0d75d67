#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jackchar/rational.hpp"

namespace jackchar {

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::Unique;
  std::vector<Rational> solution;   // valid when status == Unique
  std::vector<int> free_columns;    // witness when Underdetermined
  int inconsistent_row = -1;        // witness when Inconsistent (input row index)
};

// Exact Gaussian elimination for matrix * x = rhs. Rows may outnumber
// unknowns; redundant consistent rows are fine.
SolveResult solve_linear(const std::vector<std::vector<Rational>>& matrix,
                         const std::vector<Rational>& rhs);

// Fits a polynomial of degree <= max_degree through the first max_degree + 1
// points and checks the rest reproduce exactly (DEGREE_EXCEEDED otherwise).
// xs must be pairwise distinct; returns ascending coefficients.
std::vector<Rational> interpolate_poly(const std::vector<Rational>& xs,
                                       const std::vector<Rational>& ys,
                                       int max_degree);

// Row-echelon accumulator for exact linear systems fed one equation at a
// time. Equations that reduce to 0 = 0 are dropped; 0 = c is inconsistency.
class IncrementalSolver {
 public:
  explicit IncrementalSolver(int num_unknowns) : n_(num_unknowns) {}

  // Returns false exactly when the equation contradicts the current system;
  // the solver is left unchanged in that case.
  bool add_equation(std::vector<Rational> coeffs, Rational rhs);

  int rank() const { return static_cast<int>(rows_.size()); }
  bool determined() const { return rank() == n_; }
  std::vector<int> free_columns() const;

  // Requires determined(); back-substitutes to the unique solution.
  std::vector<Rational> solution() const;

 private:
  int n_;
  // pivot column -> (row with pivot coefficient 1, rhs)
  std::map<int, std::pair<std::vector<Rational>, Rational>> rows_;
};

}  // namespace jackchar
