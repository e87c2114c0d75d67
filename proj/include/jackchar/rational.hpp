#pragma once

#include <gmpxx.h>

#include <string>

#include "jackchar/error.hpp"

namespace jackchar {

using Integer = mpz_class;
// Canonical form maintained by gmp: denominator > 0, gcd(|num|, den) = 1.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    fail(ErrorCode::Degenerate, "bad rational: " + text);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

inline Integer factorial(long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return result;
}

}  // namespace jackchar
