#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jackchar/ch_expansion.hpp"
#include "jackchar/laurent.hpp"
#include "jackchar/partition.hpp"
#include "jackchar/report.hpp"

namespace jackchar {

// u-coordinates of the profile corners of lambda drawn with box width A and
// height 1/A, listed in ascending order: minima sit at addable rows
// (u = A lambda_i - (i-1)/A, including the slot below the last row at
// -len(lambda)/A), maxima at removable rows (u = A lambda_i - i/A). The two
// lists strictly interlace: x_1 < y_1 < x_2 < ... < x_m.
struct CornerData {
  std::vector<LaurentScalar> minima;
  std::vector<LaurentScalar> maxima;
};

CornerData corner_coordinates(const Partition& lambda);

// Probability measure supported on the profile minima. Weights sum to 1.
struct TransitionMeasure {
  // (coordinate, weight) with coordinates ascending.
  std::vector<std::pair<LaurentScalar, LaurentRational>> atoms;
};

// Atom at x_i carries weight prod_j (x_i - y_j) / prod_{j != i} (x_i - x_j).
// DEGENERATE if a denominator vanishes identically; that cannot happen for
// the corner data of a valid diagram and signals an internal error.
TransitionMeasure transition_measure(const Partition& lambda);

// M_j = sum_i w_i x_i^j for j = 0..up_to. Each entry must cancel to a
// Laurent polynomial in A; NON_POLYNOMIAL otherwise.
std::vector<LaurentScalar> moments(const TransitionMeasure& measure, int up_to);

// Free cumulant R_k(lambda) of the transition measure, inverted from the
// moment formula M_n = sum over noncrossing partitions nu of [n] of
// prod_{blocks b} R_{|b|}. Memoized per diagram. The measure must be
// centered: a nonzero M_1 raises NORMALIZATION_FAILURE instead of being
// absorbed into the recursion.
LaurentScalar free_cumulant(int k, const Partition& lambda);

// gamma^{gamma_power} * prod_i R_{k_i}; the multiset of indices k_i (each
// >= 2) is stored as a Partition. The order places the display sequence
// first: graded degree descending, then gamma power ascending, then indices
// lexicographically descending.
struct KLMonomial {
  int gamma_power = 0;
  Partition indices;

  // Graded degree: gamma has degree 1 and R_k has degree k.
  int grade() const { return gamma_power + indices.size(); }

  // Coefficient-free factor string: "R3*R2^2*g^2"; "1" for the empty monomial.
  std::string to_string() const;

  bool operator==(const KLMonomial& other) const = default;
  bool operator<(const KLMonomial& other) const {
    if (grade() != other.grade()) return grade() > other.grade();
    if (gamma_power != other.gamma_power) return gamma_power < other.gamma_power;
    return other.indices < indices;
  }
};

// Polynomial in gamma and the free cumulants R_2, R_3, ...: monomial ->
// nonzero rational coefficient, iterated in display order.
class KLPolynomial {
 public:
  KLPolynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::map<KLMonomial, Rational>& terms() const { return terms_; }

  // += coeff * monomial; the term is removed when the total cancels.
  void add_term(const KLMonomial& monomial, const Rational& coeff);

  // Max grade over the support; -1 when zero.
  int degree() const;

  // Substitutes gamma = -A + 1/A and R_k = free_cumulant(k, lambda).
  LaurentScalar evaluate(const Partition& lambda) const;

  // Display-ordered terms joined with " + " / " - ", unit coefficients
  // omitted: "R4 + 3*R3*g + 2*R2*g^2 + R2". "0" when zero.
  std::string to_string() const;

  // List of {gamma_power, cumulant_indices, coeff} in display order; coeff
  // is a decimal string.
  nlohmann::json to_json() const;

  bool operator==(const KLPolynomial& other) const = default;

 private:
  std::map<KLMonomial, Rational> terms_;
};

// Writes F as a polynomial in gamma and R_2, R_3, ... with graded degree at
// most degree_bound, by exact linear algebra on evaluations. Consumes every
// |lambda| <= degree_bound (one equation per A-exponent), widening one size
// at a time up to degree_bound + 4 while the system stays underdetermined
// (UNDERDETERMINED beyond that; INCONSISTENT when an equation contradicts),
// then re-evaluates the result on the two sizes after the last consumed one
// (VERIFY_FAILURE on mismatch). parity, when given, keeps only monomials
// whose grade matches it mod 2; the held-out verification still checks the
// full F, so a wrong hint cannot pass silently.
KLPolynomial kerov_lassalle_solve(
    const std::function<LaurentScalar(const Partition&)>& evaluator,
    int degree_bound, std::optional<int> parity = std::nullopt);

// Transition-measure weights sum to exactly 1 on every |lambda| <= max_size.
Report verify_weight_normalization(int max_size);

// R_1(lambda) = 0 and R_2(lambda) = |lambda| on every |lambda| <= max_size.
Report verify_cumulant_anchors(int max_size);

// Expands Ch_k for k <= max_row and the signed cumulants
// (-1)^{l-1} kappa_dot(Ch_{k_1}, ..., Ch_{k_l}) over single-row tuples with
// l >= 2 and k_1 + ... + k_l <= max_row, and checks that every coefficient
// is a non-negative integer. Multi-row characters stay out of scope: their
// expansions genuinely carry negative terms.
Report scan_kerov_lassalle_positivity(Expander& expander, int max_row);

}  // namespace jackchar
