#include <doctest.h>

#include "jackchar/error.hpp"
#include "jackchar/laurent.hpp"
#include "jackchar/poly.hpp"

using jackchar::DeltaPoly;
using jackchar::Error;
using jackchar::GammaPoly;
using jackchar::LaurentRational;
using jackchar::LaurentScalar;
using jackchar::Rational;

TEST_CASE("laurent scalar arithmetic") {
  LaurentScalar g = jackchar::gamma_as_laurent();
  CHECK(g.coefficient_at(1) == -1);
  CHECK(g.coefficient_at(-1) == 1);
  CHECK(g.coefficient_at(0) == 0);

  LaurentScalar g2 = g * g;
  CHECK(g2.coefficient_at(2) == 1);
  CHECK(g2.coefficient_at(0) == -2);
  CHECK(g2.coefficient_at(-2) == 1);
  CHECK(g2.upper_degree() == 2);
  CHECK(g2.lower_degree() == -2);

  CHECK(jackchar::delta_as_laurent() == -g);
  CHECK((g - g).is_zero());
  CHECK_FALSE(LaurentScalar(g - g).upper_degree().has_value());

  LaurentScalar a = LaurentScalar::variable();
  CHECK(a.pow(3).coefficient_at(3) == 1);
  CHECK(a.shifted(-4) == LaurentScalar::monomial(1, -3));
  CHECK(g.scaled(Rational(3, 2)).coefficient_at(1) == Rational(-3, 2));
  CHECK(g.evaluate(2) == Rational(-3, 2));
  CHECK(g.evaluate(Rational(1, 2)) == Rational(3, 2));
  CHECK_THROWS_AS(g.evaluate(0), Error);
}

TEST_CASE("cancellation drops stored zeros") {
  LaurentScalar x = LaurentScalar::variable() + LaurentScalar::from_int(1);
  x -= LaurentScalar::variable();
  CHECK(x.coefficients().size() == 1);
  x -= LaurentScalar::from_int(1);
  CHECK(x.is_zero());
  CHECK(x.coefficients().empty());
  CHECK(LaurentScalar::monomial(0, 5).is_zero());
}

TEST_CASE("laurent scalar rendering") {
  CHECK(LaurentScalar().to_string() == "0");
  CHECK(LaurentScalar::from_int(5).to_string() == "5*A^0");
  CHECK(jackchar::gamma_as_laurent().to_string() == "-1*A^1 + 1*A^-1");
  LaurentScalar mixed = LaurentScalar::monomial(Rational(1, 2), 3) +
                        LaurentScalar::monomial(-2, 0) + LaurentScalar::monomial(1, -2);
  CHECK(mixed.to_string() == "1/2*A^3 + -2*A^0 + 1*A^-2");
}

TEST_CASE("laurent rational reduction and exact division") {
  LaurentScalar a = LaurentScalar::variable();
  LaurentScalar num = a.pow(2) - LaurentScalar::monomial(1, -2);
  LaurentScalar den = a - LaurentScalar::monomial(1, -1);
  LaurentRational q(num, den);
  auto whole = q.as_laurent();
  REQUIRE(whole.has_value());
  CHECK(*whole == a + LaurentScalar::monomial(1, -1));

  LaurentRational third(LaurentScalar::from_int(1), a - LaurentScalar::from_int(1));
  CHECK_FALSE(third.as_laurent().has_value());

  LaurentRational sum = third + LaurentRational(LaurentScalar::from_int(1),
                                                a + LaurentScalar::from_int(1));
  LaurentRational expect(a.scaled(2), a.pow(2) - LaurentScalar::from_int(1));
  CHECK(sum == expect);

  CHECK_THROWS_AS(third / LaurentRational(), Error);
  CHECK_THROWS_AS(LaurentRational(a, LaurentScalar()), Error);

  LaurentRational round_trip = LaurentRational::from_laurent(jackchar::gamma_as_laurent());
  CHECK(*round_trip.as_laurent() == jackchar::gamma_as_laurent());
  CHECK((round_trip - round_trip).is_zero());
}

TEST_CASE("laurent rational arithmetic identities") {
  LaurentScalar a = LaurentScalar::variable();
  LaurentRational x(a, a.pow(2) + LaurentScalar::from_int(1));
  LaurentRational one = LaurentRational::from_laurent(LaurentScalar::from_int(1));
  CHECK(x / x == one);
  CHECK((x - x).is_zero());
  CHECK(x * LaurentRational() == LaurentRational());
  CHECK(x + LaurentRational() == x);
}

TEST_CASE("poly arithmetic and evaluation") {
  GammaPoly g = GammaPoly::variable();
  GammaPoly f = g * g.scaled(6) + GammaPoly(Rational(3));  // 6g^2 + 3
  CHECK(f.degree() == 2);
  CHECK(f.coefficient(2) == 6);
  CHECK(f.coefficient(1) == 0);
  CHECK(f.coefficient(0) == 3);
  CHECK(f.evaluate(2) == 27);
  CHECK((f - f).is_zero());
  CHECK((f - f).degree() == -1);

  DeltaPoly d = jackchar::gamma_to_delta(f);
  CHECK(d.coefficient(2) == 6);
  CHECK(d.coefficient(0) == 3);
  GammaPoly odd = g.scaled(5);
  CHECK(jackchar::gamma_to_delta(odd).coefficient(1) == -5);
  CHECK(jackchar::delta_to_gamma(jackchar::gamma_to_delta(f)) == f);
}

TEST_CASE("poly rendering") {
  DeltaPoly d = jackchar::gamma_to_delta(GammaPoly::variable() * GammaPoly::variable())
                    .scaled(6) +
                DeltaPoly(Rational(3));
  CHECK(d.to_string("d") == "6*d^2 + 3");
  CHECK(DeltaPoly().to_string("d") == "0");
  CHECK(DeltaPoly(Rational(-2)).to_string("d") == "-2");
  DeltaPoly mixed = DeltaPoly::from_coefficients({Rational(-2), Rational(0), Rational(1)});
  CHECK(mixed.to_string("d") == "d^2 - 2");
  DeltaPoly minus = DeltaPoly::from_coefficients({Rational(0), Rational(-1)});
  CHECK(minus.to_string("d") == "-d");
}

TEST_CASE("gamma substitution") {
  GammaPoly g = GammaPoly::variable();
  CHECK(jackchar::substitute_gamma(g) == jackchar::gamma_as_laurent());
  LaurentScalar g2 = jackchar::substitute_gamma(g * g);
  CHECK(g2.coefficient_at(2) == 1);
  CHECK(g2.coefficient_at(0) == -2);
  CHECK(g2.coefficient_at(-2) == 1);
  CHECK(jackchar::substitute_gamma(GammaPoly(Rational(7))) ==
        LaurentScalar::from_int(7));
}
