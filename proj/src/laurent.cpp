#include "jackchar/laurent.hpp"

#include <algorithm>
#include <vector>

#include "jackchar/error.hpp"

namespace jackchar {

LaurentScalar LaurentScalar::from_rational(const Rational& value) {
  LaurentScalar out;
  if (value != 0) out.coeffs_[0] = value;
  return out;
}

LaurentScalar LaurentScalar::monomial(const Rational& coeff, int exp) {
  LaurentScalar out;
  if (coeff != 0) out.coeffs_[exp] = coeff;
  return out;
}

Rational LaurentScalar::coefficient_at(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentScalar::upper_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

std::optional<int> LaurentScalar::lower_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
  for (const auto& [exp, c] : other.coeffs_) {
    Rational& slot = coeffs_[exp];
    slot += c;
    if (slot == 0) coeffs_.erase(exp);
  }
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) {
  for (const auto& [exp, c] : other.coeffs_) {
    Rational& slot = coeffs_[exp];
    slot -= c;
    if (slot == 0) coeffs_.erase(exp);
  }
  return *this;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& other) const {
  LaurentScalar out = *this;
  out += other;
  return out;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& other) const {
  LaurentScalar out = *this;
  out -= other;
  return out;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar out;
  for (const auto& [exp, c] : coeffs_) out.coeffs_[exp] = -c;
  return out;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& other) const {
  LaurentScalar out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : other.coeffs_) {
      Rational& slot = out.coeffs_[e1 + e2];
      slot += c1 * c2;
    }
  for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
    it = (it->second == 0) ? out.coeffs_.erase(it) : std::next(it);
  return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) {
  *this = *this * other;
  return *this;
}

LaurentScalar LaurentScalar::scaled(const Rational& factor) const {
  LaurentScalar out;
  if (factor == 0) return out;
  for (const auto& [exp, c] : coeffs_) out.coeffs_[exp] = c * factor;
  return out;
}

LaurentScalar LaurentScalar::shifted(int exp_offset) const {
  LaurentScalar out;
  for (const auto& [exp, c] : coeffs_) out.coeffs_[exp + exp_offset] = c;
  return out;
}

LaurentScalar LaurentScalar::pow(int exponent) const {
  LaurentScalar out = from_int(1);
  for (int i = 0; i < exponent; ++i) out *= *this;
  return out;
}

Rational LaurentScalar::evaluate(const Rational& a) const {
  if (a == 0) fail(ErrorCode::Degenerate, "Laurent evaluation at 0");
  Rational out = 0;
  for (const auto& [exp, c] : coeffs_) {
    Rational power = 1;
    Rational base = exp >= 0 ? a : Rational(1) / a;
    for (int i = 0; i < std::abs(exp); ++i) power *= base;
    out += c * power;
  }
  return out;
}

std::string LaurentScalar::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += jackchar::to_string(it->second) + "*A^" + std::to_string(it->first);
  }
  return out;
}

LaurentScalar gamma_as_laurent() {
  LaurentScalar g = LaurentScalar::monomial(-1, 1);
  g += LaurentScalar::monomial(1, -1);
  return g;
}

LaurentScalar delta_as_laurent() { return -gamma_as_laurent(); }

namespace {

// Dense polynomial over Q, ascending coefficients, used for exact division
// and gcd after clearing the A^min shift.
using Dense = std::vector<Rational>;

Dense to_dense(const LaurentScalar& f, int shift) {
  Dense out;
  for (const auto& [exp, c] : f.coefficients()) {
    int idx = exp - shift;
    if (idx >= static_cast<int>(out.size())) out.resize(idx + 1, Rational(0));
    out[idx] = c;
  }
  return out;
}

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero), in place quotient optional.
Dense poly_mod(Dense a, const Dense& b) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    Rational factor = a.back() / b[db];
    int offset = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) a[offset + i] -= factor * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool poly_divides(const Dense& b, const Dense& a, Dense* quotient) {
  Dense rem = a;
  trim(rem);
  Dense q(rem.size(), Rational(0));
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(rem.size()) - 1 >= db) {
    Rational factor = rem.back() / b[db];
    int offset = static_cast<int>(rem.size()) - 1 - db;
    q[offset] = factor;
    for (int i = 0; i <= db; ++i) rem[offset + i] -= factor * b[i];
    trim(rem);
    if (rem.empty()) break;
  }
  if (!rem.empty()) return false;
  if (quotient) {
    trim(q);
    *quotient = q;
  }
  return true;
}

Dense poly_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (Rational& c : a) c /= lead;
  }
  return a;
}

LaurentScalar from_dense(const Dense& p, int shift) {
  LaurentScalar out;
  for (size_t i = 0; i < p.size(); ++i)
    out += LaurentScalar::monomial(p[i], static_cast<int>(i) + shift);
  return out;
}

}  // namespace

LaurentRational::LaurentRational(LaurentScalar num, LaurentScalar den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::Degenerate, "zero denominator");
  reduce();
}

void LaurentRational::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentScalar::from_int(1);
    return;
  }
  int nlow = *num_.lower_degree();
  int dlow = *den_.lower_degree();
  Dense n = to_dense(num_, nlow);
  Dense d = to_dense(den_, dlow);
  Dense g = poly_gcd(n, d);
  if (g.size() > 1) {
    Dense nq, dq;
    poly_divides(g, n, &nq);
    poly_divides(g, d, &dq);
    n = nq;
    d = dq;
  }
  // Normalize: denominator leading coefficient 1, A-shift carried by the
  // numerator only.
  Rational lead = d.back();
  for (Rational& c : n) c /= lead;
  for (Rational& c : d) c /= lead;
  num_ = from_dense(n, nlow - dlow);
  den_ = from_dense(d, 0);
}

LaurentRational LaurentRational::operator+(const LaurentRational& other) const {
  return LaurentRational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

LaurentRational LaurentRational::operator-(const LaurentRational& other) const {
  return LaurentRational(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

LaurentRational LaurentRational::operator*(const LaurentRational& other) const {
  return LaurentRational(num_ * other.num_, den_ * other.den_);
}

LaurentRational LaurentRational::operator/(const LaurentRational& other) const {
  if (other.num_.is_zero()) fail(ErrorCode::Degenerate, "division by zero");
  return LaurentRational(num_ * other.den_, den_ * other.num_);
}

std::optional<LaurentScalar> LaurentRational::as_laurent() const {
  if (num_.is_zero()) return LaurentScalar();
  int nlow = *num_.lower_degree();
  int dlow = *den_.lower_degree();
  Dense n = to_dense(num_, nlow);
  Dense d = to_dense(den_, dlow);
  Dense q;
  if (!poly_divides(d, n, &q)) return std::nullopt;
  return from_dense(q, nlow - dlow);
}

bool LaurentRational::operator==(const LaurentRational& other) const {
  return (num_ * other.den_) == (other.num_ * den_);
}

}  // namespace jackchar
