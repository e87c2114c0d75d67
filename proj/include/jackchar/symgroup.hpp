#pragma once

#include <map>
#include <vector>

#include "jackchar/ch_expansion.hpp"
#include "jackchar/partition.hpp"
#include "jackchar/rational.hpp"
#include "jackchar/report.hpp"

namespace jackchar {

// One-line form: index i (0-based) holds the image of i+1, values in {1..n}.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);

// (p after q): applies q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);

// Cycle type as a partition of n, fixed points included.
Partition cycle_type(const Permutation& p);

// Element of the rational group algebra of S_n: permutation -> nonzero
// coefficient. Fixed rank; all keys are permutations of {1..n}.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  Rational coefficient(const Permutation& p) const;

  // += coeff * p; the term is removed when the total cancels. RANK_MISMATCH
  // unless p permutes exactly {1..n}.
  void add_term(const Permutation& p, const Rational& coeff);

  bool operator==(const GroupAlgebraElement& other) const = default;

 private:
  int n_;
  std::map<Permutation, Rational> terms_;
};

// Sum over injective fillings of the boxes of pi by distinct elements of
// {1..n} of the permutation whose cycles are the rows; the coefficient of a
// permutation counts its fillings. RANK_TOO_SMALL when n < |pi|, RANK_BUDGET
// when n > 8.
GroupAlgebraElement class_indicator(const Partition& pi, int n);

// Bilinear extension of permutation composition. RANK_MISMATCH on different
// ranks.
GroupAlgebraElement convolve(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b);

// Checks the rank-n projection of the product rule: with g^mu the structure
// coefficients of Ch_pi Ch_sigma as polynomials in delta,
//   convolve(A_pi, A_sigma) = sum_mu g^mu(0) * A_mu
// compared term by term in the group algebra. The indicators A_mu are
// linearly dependent at fixed rank, so no expansion in them is attempted.
// Requires |pi| + |sigma| <= n <= 8.
Report verify_delta_zero(Expander& expander, const Partition& pi,
                         const Partition& sigma, int n);

// verify_delta_zero over every unordered pair of nonempty partitions with
// |pi| + |sigma| <= max_size, at every rank from |pi| + |sigma| to max_rank.
Report scan_delta_zero(Expander& expander, int max_size, int max_rank);

}  // namespace jackchar
