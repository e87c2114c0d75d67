#pragma once

#include <map>
#include <optional>
#include <string>

#include "jackchar/rational.hpp"

namespace jackchar {

// Element of Q[A, A^-1]: sparse exponent -> nonzero coefficient map.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  static LaurentScalar from_rational(const Rational& value);
  static LaurentScalar from_int(long value) { return from_rational(Rational(value)); }
  // c * A^exp
  static LaurentScalar monomial(const Rational& coeff, int exp);
  static LaurentScalar variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Rational>& coefficients() const { return coeffs_; }

  Rational coefficient_at(int exp) const;
  // Max (min) exponent with nonzero coefficient; nullopt encodes -infinity
  // for the zero polynomial.
  std::optional<int> upper_degree() const;
  std::optional<int> lower_degree() const;

  LaurentScalar& operator+=(const LaurentScalar& other);
  LaurentScalar& operator-=(const LaurentScalar& other);
  LaurentScalar operator+(const LaurentScalar& other) const;
  LaurentScalar operator-(const LaurentScalar& other) const;
  LaurentScalar operator-() const;
  LaurentScalar operator*(const LaurentScalar& other) const;
  LaurentScalar& operator*=(const LaurentScalar& other);
  LaurentScalar scaled(const Rational& factor) const;
  LaurentScalar shifted(int exp_offset) const;
  LaurentScalar pow(int exponent) const;  // exponent >= 0

  // Evaluate at a nonzero rational point.
  Rational evaluate(const Rational& a) const;

  // Terms "c*A^k" joined by " + ", exponents descending; "0" when zero.
  std::string to_string() const;

  bool operator==(const LaurentScalar& other) const = default;
  bool operator<(const LaurentScalar& other) const { return coeffs_ < other.coeffs_; }

 private:
  std::map<int, Rational> coeffs_;
};

// gamma := -A + 1/A
LaurentScalar gamma_as_laurent();
// delta := -gamma = A - 1/A
LaurentScalar delta_as_laurent();

inline std::optional<int> laurent_upper_degree(const LaurentScalar& f) {
  return f.upper_degree();
}
inline Rational coefficient_at(const LaurentScalar& f, int k) {
  return f.coefficient_at(k);
}

// Quotient of Laurent polynomials, kept reduced via polynomial gcd. Internal
// helper for transition-measure weights; not part of the public CLI surface.
class LaurentRational {
 public:
  LaurentRational() : num_(), den_(LaurentScalar::from_int(1)) {}
  LaurentRational(LaurentScalar num, LaurentScalar den);
  static LaurentRational from_laurent(const LaurentScalar& v) {
    return LaurentRational(v, LaurentScalar::from_int(1));
  }

  bool is_zero() const { return num_.is_zero(); }
  const LaurentScalar& numerator() const { return num_; }
  const LaurentScalar& denominator() const { return den_; }

  LaurentRational operator+(const LaurentRational& other) const;
  LaurentRational operator-(const LaurentRational& other) const;
  LaurentRational operator*(const LaurentRational& other) const;
  LaurentRational operator/(const LaurentRational& other) const;  // Degenerate on /0

  // Exact value when the denominator divides the numerator.
  std::optional<LaurentScalar> as_laurent() const;

  bool operator==(const LaurentRational& other) const;

 private:
  void reduce();
  LaurentScalar num_, den_;
};

}  // namespace jackchar
