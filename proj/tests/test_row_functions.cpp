#include <doctest.h>

#include <vector>

#include "jackchar/cache.hpp"
#include "jackchar/ch_expansion.hpp"
#include "jackchar/characters.hpp"
#include "jackchar/cumulants.hpp"
#include "jackchar/error.hpp"
#include "jackchar/jack.hpp"
#include "jackchar/row_functions.hpp"

using jackchar::ArityKernel;
using jackchar::CacheStore;
using jackchar::ch_classical;
using jackchar::ch_kernel;
using jackchar::delta_operator;
using jackchar::DiagramFunction;
using jackchar::Error;
using jackchar::Expander;
using jackchar::iterated_delta;
using jackchar::JackTable;
using jackchar::kappa_dot;
using jackchar::LaurentScalar;
using jackchar::Partition;
using jackchar::partitions_up_to;
using jackchar::Rational;
using jackchar::Report;
using jackchar::RowKernel;
using jackchar::row_degree_probe;
using jackchar::scan_vanishing;
using jackchar::separate_product;
using jackchar::sym_extension;
using jackchar::verify_connected_components;
using jackchar::verify_cool_vanishing;
using jackchar::verify_kernel_cumulant_formula;
using jackchar::verify_small_degree_killed;
using jackchar::verify_vanishing_kappa_row;
using jackchar::verify_Z3;
using jackchar::ZeroVariant;

namespace {

Partition parse(const std::string& text) { return Partition::parse(text); }

LaurentScalar lint(long v) { return LaurentScalar::from_int(v); }

LaurentScalar mono(long c, int e) { return LaurentScalar::monomial(Rational(c), e); }

// f_1(x) = A x^2, f_2(x, y) = (A - 1/A) x y, all other orders zero. Values
// of order r have upper degree 1 <= (6 - 1) - 2r for r <= 2, so the function
// has degree exactly 5.
RowKernel mixed_degree_kernel() {
  return RowKernel::from_values([](const Partition& x) {
    if (x.length() == 1) {
      long v = x.parts()[0];
      return mono(v * v, 1);
    }
    if (x.length() == 2) {
      long p = static_cast<long>(x.parts()[0]) * x.parts()[1];
      return mono(p, 1) - mono(p, -1);
    }
    return LaurentScalar();
  });
}

}  // namespace

TEST_CASE("character kernels invert to the expected orders") {
  JackTable jack(CacheStore(), 8);

  SUBCASE("single box") {
    RowKernel k = ch_kernel(jack, parse("[1]"), 6, 6);
    CHECK(k.value(parse("[]")) == lint(0));
    for (int x = 1; x <= 5; ++x) CHECK(k.value(Partition({x})) == lint(x));
    CHECK(k.value(parse("[2,1]")).is_zero());
    CHECK(k.value(parse("[3,3]")).is_zero());
    CHECK(k.value(parse("[1,1,1]")).is_zero());
    CHECK(k.evaluate(parse("[3,1]")) == lint(4));
    CHECK(k.evaluate(parse("[]")).is_zero());
  }

  SUBCASE("two single boxes") {
    RowKernel k = ch_kernel(jack, parse("[1,1]"), 6, 6);
    for (int x = 1; x <= 4; ++x) CHECK(k.value(Partition({x})) == lint(1L * x * x - x));
    CHECK(k.value(parse("[2,1]")) == lint(4));
    CHECK(k.value(parse("[2,2]")) == lint(8));
    CHECK(k.value(parse("[3,1]")) == lint(6));
    CHECK(k.value(parse("[2,1,1]")).is_zero());
    CHECK(k.evaluate(parse("[2,1]")) == lint(6));
  }

  SUBCASE("one two-cycle") {
    RowKernel k = ch_kernel(jack, parse("[2]"), 6, 6);
    for (int x = 1; x <= 4; ++x) CHECK(k.value(Partition({x})) == mono(1L * x * x - x, 1));
    CHECK(k.value(parse("[2,1]")) == mono(-2, -1));
    CHECK(k.value(parse("[3,1]")) == mono(-2, -1));
    CHECK(k.value(parse("[2,2]")) == mono(-4, -1));
    CHECK(k.value(parse("[2,1,1]")).is_zero());
    CHECK(k.value(parse("[1,1,1]")).is_zero());
  }

  SUBCASE("subset sums reproduce the characters") {
    for (const char* name : {"[1]", "[2]", "[1,1]", "[3]", "[2,1]"}) {
      RowKernel k = ch_kernel(jack, parse(name), 6, 6);
      for (const Partition& lambda : partitions_up_to(6))
        CHECK(k.evaluate(lambda) == ch_classical(jack, parse(name), lambda));
    }
  }
}

TEST_CASE("kernel guards") {
  JackTable jack(CacheStore(), 8);

  SUBCASE("order and entry budgets") {
    RowKernel k = ch_kernel(jack, parse("[1]"), 2, 3);
    CHECK_THROWS_WITH_AS(k.value(parse("[1,1,1]")), doctest::Contains("BUDGET_EXCEEDED"), Error);
    CHECK_THROWS_WITH_AS(k.value(parse("[4]")), doctest::Contains("BUDGET_EXCEEDED"), Error);
    CHECK_THROWS_WITH_AS(k.evaluate(parse("[4]")), doctest::Contains("BUDGET_EXCEEDED"), Error);
  }

  SUBCASE("unstable sources are caught on evaluation") {
    int calls = 0;
    RowKernel k = RowKernel::from_function(
        [calls](const Partition&) mutable { return lint(calls++); }, 4, 4);
    CHECK_THROWS_WITH_AS(k.evaluate(parse("[1]")), doctest::Contains("RECONSTRUCTION_MISMATCH"),
                         Error);
  }
}

TEST_CASE("separate products") {
  JackTable jack(CacheStore(), 8);
  RowKernel one = ch_kernel(jack, parse("[1]"), 5, 5);
  RowKernel two = ch_kernel(jack, parse("[2]"), 5, 5);
  RowKernel pair = ch_kernel(jack, parse("[1,1]"), 5, 5);

  SUBCASE("tensor of two single-box kernels") {
    RowKernel prod = separate_product(one, one);
    CHECK(prod.value(parse("[3,1]")) == lint(6));
    CHECK(prod.value(parse("[2]")).is_zero());
    CHECK(prod.evaluate(parse("[3,1]")) == lint(6));
    CHECK(prod.evaluate(parse("[3]")).is_zero());
  }

  SUBCASE("vanishing threshold adds") {
    RowKernel prod = separate_product(two, two);
    CHECK(prod.evaluate(parse("[2]")).is_zero());
    CHECK(prod.evaluate(parse("[2,1]")).is_zero());
    CHECK(prod.evaluate(parse("[1,1,1]")).is_zero());
  }

  SUBCASE("unit is neutral") {
    RowKernel prod = separate_product(two, RowKernel::unit());
    for (const Partition& x : partitions_up_to(4)) {
      CHECK(prod.value(x) == two.value(x));
      CHECK(prod.evaluate(x) == two.evaluate(x));
    }
  }

  SUBCASE("commutative and associative on probes") {
    RowKernel ab = separate_product(one, two);
    RowKernel ba = separate_product(two, one);
    RowKernel left = separate_product(separate_product(one, two), pair);
    RowKernel right = separate_product(one, separate_product(two, pair));
    for (const Partition& x : partitions_up_to(4)) {
      CHECK(ab.value(x) == ba.value(x));
      CHECK(left.value(x) == right.value(x));
    }
  }

  SUBCASE("difference kernels subtract order-wise") {
    RowKernel diff = two - one;
    for (const Partition& x : partitions_up_to(4))
      CHECK(diff.value(x) == two.value(x) - one.value(x));
    RowKernel zero = two - two;
    CHECK(zero.evaluate(parse("[3,2]")).is_zero());
  }
}

TEST_CASE("symmetric extension and differences") {
  JackTable jack(CacheStore(), 8);
  DiagramFunction ch1 = [&jack](const Partition& lambda) {
    return ch_classical(jack, parse("[1]"), lambda);
  };
  DiagramFunction ch2 = [&jack](const Partition& lambda) {
    return ch_classical(jack, parse("[2]"), lambda);
  };

  SUBCASE("sorting and zero rows") {
    CHECK(sym_extension(ch1, {1, 3}) == lint(4));
    CHECK(sym_extension(ch1, {}) == lint(0));
    CHECK(sym_extension(ch2, {0, 2}) == mono(2, 1));
    DiagramFunction one = [](const Partition&) { return lint(1); };
    CHECK(sym_extension(one, {}) == lint(1));
    CHECK_THROWS_WITH_AS(sym_extension(ch1, {2, -1}), doctest::Contains("SIZE_MISMATCH"), Error);
  }

  SUBCASE("first differences") {
    auto d0 = delta_operator(ch1, 0);
    auto d1 = delta_operator(ch1, 1);
    CHECK(d0({2, 1}) == lint(1));
    CHECK(d1({2, 1}) == lint(1));
    CHECK(d1({1, 1, 0}) == lint(1));
    auto d2 = delta_operator(ch2, 0);
    CHECK(d2({1}) == mono(2, 1));
    CHECK_THROWS_WITH_AS(d0({}), doctest::Contains("SIZE_MISMATCH"), Error);
  }

  SUBCASE("iterated differences match composed ones") {
    auto outer = delta_operator([&jack](const Partition& lambda) {
      return ch_classical(jack, parse("[2]"), lambda);
    }, 0);
    // compose by hand: bump coordinate 1, then apply the coordinate-0 delta
    std::vector<int> base = {2, 1};
    std::vector<int> bumped = {2, 2};
    LaurentScalar composed = (outer(bumped) - outer(base));
    CHECK(iterated_delta(ch2, 2, {2, 1}) == composed);
    CHECK(iterated_delta(ch2, 2, {1, 2}) == composed);
    CHECK(iterated_delta(ch1, 2, {3, 1}).is_zero());
    CHECK(iterated_delta(ch1, 0, {}) == lint(0));
  }
}

TEST_CASE("degree probes") {
  JackTable jack(CacheStore(), 8);
  CHECK(row_degree_probe(ch_kernel(jack, parse("[1]"), 2, 3), 2, 3) == 2);
  CHECK(row_degree_probe(ch_kernel(jack, parse("[2]"), 2, 3), 2, 3) == 3);
  CHECK(row_degree_probe(RowKernel::unit(), 3, 4) == 0);
  CHECK(row_degree_probe(RowKernel(), 3, 4) == 0);
  CHECK(row_degree_probe(mixed_degree_kernel(), 3, 4) == 5);
}

TEST_CASE("difference coefficient families") {
  SUBCASE("vanishing for small degree") {
    Report report = verify_small_degree_killed(mixed_degree_kernel(), 6, 3, 6);
    CHECK(report.pass());
    CHECK(!report.units.empty());
  }

  SUBCASE("degree at the threshold is detected") {
    Report report = verify_small_degree_killed(mixed_degree_kernel(), 5, 3, 6);
    CHECK(!report.pass());
  }

  SUBCASE("cumulant of two two-cycles") {
    JackTable jack(CacheStore(), 10);
    Expander expander(jack);
    jackchar::ChExpansion kappa = kappa_dot(expander, {parse("[2]"), parse("[2]")});
    DiagramFunction f = [&](const Partition& lambda) { return kappa.evaluate(jack, lambda); };
    Report first = verify_Z3(f, 2, 2, ZeroVariant::Original);
    CHECK(first.pass());
    Report second = verify_Z3(f, 2, 1, ZeroVariant::Alternative);
    CHECK(second.pass());
    CHECK(!second.units.empty());
  }

  SUBCASE("linear character stays clean") {
    JackTable jack(CacheStore(), 8);
    DiagramFunction ch1 = [&jack](const Partition& lambda) {
      return ch_classical(jack, parse("[1]"), lambda);
    };
    Report report = verify_Z3(ch1, 2, 1, ZeroVariant::Alternative);
    CHECK(report.pass());
    CHECK(!report.units.empty());
  }

  SUBCASE("empty family is vacuously clean") {
    DiagramFunction one = [](const Partition&) { return lint(1); };
    Report report = verify_Z3(one, 0, 1, ZeroVariant::Original);
    CHECK(report.pass());
    CHECK(report.units.empty());
  }

  SUBCASE("constants violate the zero-exponent family") {
    DiagramFunction one = [](const Partition&) { return lint(1); };
    Report report = verify_Z3(one, 0, 0, ZeroVariant::Alternative);
    CHECK(!report.pass());
    CHECK(report.units.size() == 1);
  }
}

TEST_CASE("separate cumulants vanish below the size threshold") {
  JackTable jack(CacheStore(), 8);

  SUBCASE("single argument") {
    Report report = verify_vanishing_kappa_row(jack, {parse("[3]")});
    CHECK(report.pass());
    CHECK(report.units.size() == 4);  // diagrams of size 0..2
  }

  SUBCASE("pairs") {
    CHECK(verify_vanishing_kappa_row(jack, {parse("[2]"), parse("[2]")}).pass());
    CHECK(verify_vanishing_kappa_row(jack, {parse("[2]"), parse("[1]")}).pass());
  }

  SUBCASE("scan over small multisets") {
    Report report = scan_vanishing(jack, 4, 3);
    CHECK(report.pass());
    CHECK(!report.units.empty());
  }
}

TEST_CASE("separate products of character kernels inherit vanishing") {
  JackTable jack(CacheStore(), 8);
  Report report = verify_cool_vanishing(jack, 5);
  CHECK(report.pass());
  CHECK(!report.units.empty());
}

TEST_CASE("kernel cumulants match the connected index sum") {
  ArityKernel linear{1, [](const std::vector<int>& x) { return lint(x[0]); }};
  ArityKernel square{1, [](const std::vector<int>& x) { return mono(1L * x[0] * x[0], 1); }};
  ArityKernel pair_sum{2, [](const std::vector<int>& x) { return lint(x[0] + x[1]); }};
  ArityKernel constant{0, [](const std::vector<int>&) { return lint(3); }};
  std::vector<ArityKernel> pool = {linear, square, pair_sum, constant};

  CHECK(verify_kernel_cumulant_formula(pool, {0}, 5).pass());
  CHECK(verify_kernel_cumulant_formula(pool, {0, 0}, 5).pass());
  CHECK(verify_kernel_cumulant_formula(pool, {0, 0, 0}, 4).pass());
  CHECK(verify_kernel_cumulant_formula(pool, {0, 1}, 5).pass());
  CHECK(verify_kernel_cumulant_formula(pool, {0, 2}, 5).pass());
  CHECK(verify_kernel_cumulant_formula(pool, {1, 2, 0}, 4).pass());
  CHECK(verify_kernel_cumulant_formula(pool, {3, 0}, 4).pass());
}

TEST_CASE("union bound over subset families") {
  Report exhaustive = verify_connected_components(3, 3, 100);
  CHECK(exhaustive.pass());
  CHECK(exhaustive.units.size() == 3);
  for (const auto& unit : exhaustive.units) CHECK(unit.at("mode") == "exhaustive");

  Report sampled = verify_connected_components(4, 4, 300);
  CHECK(sampled.pass());
  CHECK(sampled.units.back().at("mode") == "sampled");
}
