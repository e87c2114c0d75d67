#pragma once

#include <string>
#include <vector>

#include "jackchar/laurent.hpp"
#include "jackchar/rational.hpp"

namespace jackchar {

// Dense univariate polynomial over Q, coefficients ascending by exponent.
// The tag keeps polynomials in different formal variables apart at compile
// time (alpha, gamma, delta).
template <typename Tag>
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }

  static Poly variable() {
    Poly out;
    out.coeffs_ = {Rational(0), Rational(1)};
    return out;
  }

  static Poly from_coefficients(std::vector<Rational> ascending) {
    Poly out;
    out.coeffs_ = std::move(ascending);
    out.trim();
    return out;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Poly& operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  Poly operator+(const Poly& other) const {
    Poly out = *this;
    out += other;
    return out;
  }

  Poly operator-(const Poly& other) const {
    Poly out = *this;
    out -= other;
    return out;
  }

  Poly operator-() const {
    Poly out = *this;
    for (Rational& c : out.coeffs_) c = -c;
    return out;
  }

  Poly operator*(const Poly& other) const {
    Poly out;
    if (is_zero() || other.is_zero()) return out;
    out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
      for (size_t j = 0; j < other.coeffs_.size(); ++j)
        out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    out.trim();
    return out;
  }

  Poly& operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
  }

  Poly scaled(const Rational& factor) const {
    Poly out;
    if (factor == 0) return out;
    out.coeffs_ = coeffs_;
    for (Rational& c : out.coeffs_) c *= factor;
    return out;
  }

  Rational evaluate(const Rational& x) const {
    Rational out = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
    return out;
  }

  LaurentScalar substitute(const LaurentScalar& x) const {
    LaurentScalar out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      out = out * x + LaurentScalar::from_rational(*it);
    return out;
  }

  std::string to_string(const std::string& symbol) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string body;
      if (k == 0) {
        body = jackchar::to_string(mag);
      } else {
        std::string power = k == 1 ? symbol : symbol + "^" + std::to_string(k);
        body = (mag == 1) ? power : jackchar::to_string(mag) + "*" + power;
      }
      out += body;
    }
    return out;
  }

  bool operator==(const Poly&) const = default;
  auto operator<=>(const Poly& other) const { return coeffs_ <=> other.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

struct AlphaTag {};
struct GammaTag {};
struct DeltaTag {};

using AlphaPoly = Poly<AlphaTag>;
using GammaPoly = Poly<GammaTag>;
using DeltaPoly = Poly<DeltaTag>;

// gamma = -delta, so the coefficient of the p-th power flips sign for odd p.
inline DeltaPoly gamma_to_delta(const GammaPoly& f) {
  std::vector<Rational> coeffs(f.degree() + 1);
  for (int k = 0; k <= f.degree(); ++k)
    coeffs[k] = (k % 2 == 0) ? f.coefficient(k) : Rational(-f.coefficient(k));
  return DeltaPoly::from_coefficients(std::move(coeffs));
}

inline GammaPoly delta_to_gamma(const DeltaPoly& f) {
  std::vector<Rational> coeffs(f.degree() + 1);
  for (int k = 0; k <= f.degree(); ++k)
    coeffs[k] = (k % 2 == 0) ? f.coefficient(k) : Rational(-f.coefficient(k));
  return GammaPoly::from_coefficients(std::move(coeffs));
}

// Evaluate a polynomial in gamma at gamma = -A + 1/A.
inline LaurentScalar substitute_gamma(const GammaPoly& f) {
  return f.substitute(gamma_as_laurent());
}

}  // namespace jackchar
