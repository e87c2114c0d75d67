#include "jackchar/characters.hpp"

#include <doctest.h>

#include "jackchar/error.hpp"

using jackchar::Error;
using jackchar::JackTable;
using jackchar::LaurentScalar;
using jackchar::Partition;
using jackchar::Rational;

TEST_CASE("alpha content") {
  LaurentScalar c = jackchar::alpha_content(3, 2);
  CHECK(c.coefficient_at(1) == 3);
  CHECK(c.coefficient_at(-1) == -2);
  CHECK(jackchar::alpha_content(1, 1) + jackchar::gamma_as_laurent() ==
        LaurentScalar());
}

TEST_CASE("classical character values") {
  JackTable jack;
  // one-box cases
  CHECK(jackchar::ch_classical(jack, Partition(), Partition({3})) ==
        LaurentScalar::from_int(1));
  CHECK(jackchar::ch_classical(jack, Partition({1}), Partition({2, 1})) ==
        LaurentScalar::from_int(3));
  CHECK(jackchar::ch_classical(jack, Partition({2}), Partition({2})) ==
        LaurentScalar::monomial(2, 1));
  CHECK(jackchar::ch_classical(jack, Partition({2}), Partition({1, 1})) ==
        LaurentScalar::monomial(-2, -1));
  CHECK(jackchar::ch_classical(jack, Partition({3}), Partition({3})) ==
        LaurentScalar::monomial(6, 2));
  CHECK(jackchar::ch_classical(jack, Partition({3}), Partition({2})).is_zero());
  CHECK(jackchar::ch_classical(jack, Partition({2, 2}), Partition({1, 1, 1})).is_zero());
}

TEST_CASE("two row closed form for Ch_2") {
  JackTable jack;
  // Ch_2((x,y)) = A(x^2 - x + y^2 - y) - 2y/A for x >= y >= 1
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= x; ++y) {
      std::vector<int> parts{x, y};
      LaurentScalar expect =
          LaurentScalar::monomial(Rational(x) * x - x + Rational(y) * y - y, 1) +
          LaurentScalar::monomial(Rational(-2) * y, -1);
      CHECK(jackchar::ch_classical(jack, Partition({2}), Partition(parts)) == expect);
    }
}

TEST_CASE("content formulas match the classical construction") {
  JackTable jack;
  std::vector<Partition> pis = {Partition(), Partition({1}), Partition({2}),
                                Partition({3}), Partition({1, 1})};
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : jackchar::partitions_of(n))
      for (const auto& pi : pis)
        CHECK(jackchar::ch_content_formula(pi, lambda) ==
              jackchar::ch_classical(jack, pi, lambda));
  CHECK_THROWS_WITH_AS(jackchar::ch_content_formula(Partition({4}), Partition({4})),
                       doctest::Contains("UNSUPPORTED_PARTITION"), Error);
}

TEST_CASE("character symmetry under conjugation sign") {
  JackTable jack;
  // Ch_2 changes sign under A -> -1/A on conjugate diagrams: spot check
  // Ch_2((2)) = 2A against Ch_2((1,1)) = -2/A.
  LaurentScalar row = jackchar::ch_classical(jack, Partition({2}), Partition({2}));
  LaurentScalar col = jackchar::ch_classical(jack, Partition({2}), Partition({1, 1}));
  CHECK(row.coefficient_at(1) == -col.coefficient_at(-1));
}

TEST_CASE("K3 vanishing scan") {
  JackTable jack;
  for (const Partition& pi :
       {Partition({3}), Partition({2, 1}), Partition({2, 2}), Partition({1, 1, 1})}) {
    auto report = jackchar::verify_K3(jack, pi, 8);
    CHECK(report.pass());
    CHECK_FALSE(report.units.empty());
  }
}

TEST_CASE("K4 laurent degree scan") {
  JackTable jack;
  for (const Partition& pi :
       {Partition({1}), Partition({3}), Partition({2, 1}), Partition({2, 2})}) {
    auto report = jackchar::verify_K4(jack, pi, 7);
    CHECK(report.pass());
  }
}

TEST_CASE("K2 polynomiality in row coordinates") {
  JackTable jack;
  for (const Partition& pi : {Partition({1}), Partition({2}), Partition({3}),
                              Partition({1, 1}), Partition({2, 1})}) {
    for (int m = 1; m <= 2; ++m) {
      auto report = jackchar::verify_K2(jack, pi, m);
      CHECK(report.pass());
      if (!report.pass())
        for (const auto& v : report.violations) MESSAGE(v);
    }
  }
}
