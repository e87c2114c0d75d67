#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "jackchar/cache.hpp"
#include "jackchar/characters.hpp"
#include "jackchar/poly.hpp"

namespace jackchar {

// Element of the function algebra written in the filtered basis
// {gamma^p Ch_mu}: partition mu -> polynomial in gamma. The filtration
// degree of gamma^p Ch_mu is p + |mu| + len(mu).
class ChExpansion {
 public:
  ChExpansion() = default;
  static ChExpansion ch(const Partition& mu);
  static ChExpansion constant(const Rational& value);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, GammaPoly>& terms() const { return terms_; }
  GammaPoly gamma_poly(const Partition& mu) const;

  // += poly * Ch_mu
  void add_term(const Partition& mu, const GammaPoly& poly);

  ChExpansion& operator+=(const ChExpansion& other);
  ChExpansion& operator-=(const ChExpansion& other);
  ChExpansion operator+(const ChExpansion& other) const;
  ChExpansion operator-(const ChExpansion& other) const;
  ChExpansion operator-() const;
  ChExpansion scaled(const Rational& factor) const;
  ChExpansion scaled_by_gamma_power(int p) const;

  // Max of p + |mu| + len(mu) over the support; -1 when zero.
  int degree() const;

  LaurentScalar evaluate(JackTable& jack, const Partition& lambda) const;

  std::string serialize() const;
  static std::optional<ChExpansion> deserialize(const std::string& payload);

  bool operator==(const ChExpansion& other) const = default;

 private:
  std::map<Partition, GammaPoly> terms_;
};

// Bilinear extension of (gamma^p Ch_pi) . (gamma^q Ch_sigma) =
// gamma^{p+q} Ch_{pi sigma} (concatenated index).
ChExpansion disjoint_multiply(const ChExpansion& a, const ChExpansion& b);

// Writes lambda-functions in the {gamma^p Ch_mu} basis by exact linear
// algebra on evaluations; multiplies expansions through memoized pairwise
// Ch products.
class Expander {
 public:
  explicit Expander(JackTable& jack, CacheStore cache = CacheStore())
      : jack_(jack), cache_(std::move(cache)) {}

  JackTable& jack() { return jack_; }

  // Expands F with filtration degree bound degree_bound. Consumes
  // evaluations on every |lambda| <= degree_bound (one equation per
  // A-exponent), block-solving size by size, then re-evaluates the result on
  // the two sizes after the last consumed one (VERIFY_FAILURE on mismatch).
  // Underdetermined blocks consume further sizes one at a time up to
  // degree_bound + 4 (UNDERDETERMINED beyond); an equation outside the span
  // raises INCONSISTENT. parity, when given, keeps only basis elements whose
  // filtration degree matches it mod 2 (sound for functions with uniform
  // A-support parity; the held-out verification still checks the full F).
  ChExpansion expand(const std::function<LaurentScalar(const Partition&)>& evaluator,
                     int degree_bound, std::optional<int> parity = std::nullopt);

  // Pointwise product Ch_pi * Ch_sigma (memoized in memory and on disk).
  const ChExpansion& product(const Partition& pi, const Partition& sigma);

  // Pointwise product of expansions, bilinear over product().
  ChExpansion multiply(const ChExpansion& a, const ChExpansion& b);

  // g^mu_{pi,sigma}: coefficients of Ch_pi Ch_sigma as polynomials in
  // delta = -gamma.
  std::map<Partition, DeltaPoly> structure_coefficients(const Partition& pi,
                                                        const Partition& sigma);

 private:
  JackTable& jack_;
  CacheStore cache_;
  std::map<std::pair<Partition, Partition>, ChExpansion> products_;
};

// The concatenation term of every pointwise product carries coefficient 1:
// scanned over nonempty pairs with |pi| + |sigma| <= max_size.
Report verify_leading_coefficient(Expander& expander, int max_size);

}  // namespace jackchar
