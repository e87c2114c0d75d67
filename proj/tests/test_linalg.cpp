#include "jackchar/linalg.hpp"

#include <doctest.h>

#include "jackchar/error.hpp"

using jackchar::Error;
using jackchar::IncrementalSolver;
using jackchar::Rational;
using jackchar::SolveStatus;

namespace {
Rational r(long n, long d = 1) { return jackchar::rational(n, d); }
}  // namespace

TEST_CASE("solve_linear unique solution") {
  std::vector<std::vector<Rational>> m = {
      {r(2), r(1), r(-1)}, {r(-3), r(-1), r(2)}, {r(-2), r(1), r(2)}};
  std::vector<Rational> rhs = {r(8), r(-11), r(-3)};
  auto result = jackchar::solve_linear(m, rhs);
  REQUIRE(result.status == SolveStatus::Unique);
  CHECK(result.solution == std::vector<Rational>{r(2), r(3), r(-1)});

  SUBCASE("redundant consistent rows are fine") {
    m.push_back({r(4), r(2), r(-2)});
    rhs.push_back(r(16));
    auto again = jackchar::solve_linear(m, rhs);
    REQUIRE(again.status == SolveStatus::Unique);
    CHECK(again.solution == result.solution);
  }
}

TEST_CASE("solve_linear fractional coefficients stay exact") {
  std::vector<std::vector<Rational>> m = {{r(1, 3), r(1, 7)}, {r(1, 2), r(-1, 5)}};
  std::vector<Rational> rhs = {r(1), r(0)};
  auto result = jackchar::solve_linear(m, rhs);
  REQUIRE(result.status == SolveStatus::Unique);
  CHECK(m[0][0] * result.solution[0] + m[0][1] * result.solution[1] == rhs[0]);
  CHECK(m[1][0] * result.solution[0] + m[1][1] * result.solution[1] == rhs[1]);
}

TEST_CASE("solve_linear witnesses") {
  SUBCASE("underdetermined reports free columns") {
    std::vector<std::vector<Rational>> m = {{r(1), r(2), r(0)}, {r(0), r(0), r(1)}};
    auto result = jackchar::solve_linear(m, {r(3), r(4)});
    REQUIRE(result.status == SolveStatus::Underdetermined);
    CHECK(result.free_columns == std::vector<int>{1});
  }
  SUBCASE("inconsistent reports the offending row") {
    std::vector<std::vector<Rational>> m = {{r(1), r(1)}, {r(2), r(2)}, {r(0), r(1)}};
    auto result = jackchar::solve_linear(m, {r(1), r(3), r(0)});
    REQUIRE(result.status == SolveStatus::Inconsistent);
    CHECK(result.inconsistent_row == 1);
  }
  SUBCASE("ragged input is rejected") {
    CHECK_THROWS_WITH_AS(jackchar::solve_linear({{r(1)}, {r(1), r(2)}}, {r(1), r(2)}),
                         doctest::Contains("SIZE_MISMATCH"), Error);
    CHECK_THROWS_WITH_AS(jackchar::solve_linear({{r(1)}}, {r(1), r(2)}),
                         doctest::Contains("SIZE_MISMATCH"), Error);
  }
}

TEST_CASE("interpolate_poly fits and verifies") {
  // f(x) = x^2/2 - 3 sampled at 1..5, degree bound 2
  std::vector<Rational> xs, ys;
  for (int x = 1; x <= 5; ++x) {
    xs.push_back(r(x));
    ys.push_back(r(x * x, 2) - r(3));
  }
  auto coeffs = jackchar::interpolate_poly(xs, ys, 2);
  REQUIRE(coeffs.size() == 3);
  CHECK(coeffs[0] == r(-3));
  CHECK(coeffs[1] == r(0));
  CHECK(coeffs[2] == r(1, 2));

  SUBCASE("degree drop is trimmed") {
    auto flat = jackchar::interpolate_poly({r(1), r(2), r(3)}, {r(7), r(7), r(7)}, 2);
    CHECK(flat == std::vector<Rational>{r(7)});
    CHECK(jackchar::interpolate_poly({r(1), r(2)}, {r(0), r(0)}, 1).empty());
  }
}

TEST_CASE("interpolate_poly error cases") {
  std::vector<Rational> xs, ys;
  for (int x = 0; x <= 4; ++x) {
    xs.push_back(r(x));
    ys.push_back(r(x * x * x));  // cubic data
  }
  CHECK_THROWS_WITH_AS(jackchar::interpolate_poly(xs, ys, 2),
                       doctest::Contains("DEGREE_EXCEEDED"), Error);
  CHECK_THROWS_WITH_AS(jackchar::interpolate_poly({r(1), r(2)}, {r(1), r(2)}, 2),
                       doctest::Contains("SIZE_MISMATCH"), Error);
  CHECK_THROWS_WITH_AS(jackchar::interpolate_poly({r(1), r(1)}, {r(1), r(2)}, 1),
                       doctest::Contains("DEGENERATE"), Error);
}

TEST_CASE("incremental solver") {
  IncrementalSolver solver(3);
  CHECK(solver.add_equation({r(1), r(1), r(0)}, r(3)));
  CHECK(solver.rank() == 1);
  CHECK(solver.add_equation({r(2), r(2), r(0)}, r(6)));  // dependent, dropped
  CHECK(solver.rank() == 1);
  CHECK_FALSE(solver.determined());
  CHECK(solver.free_columns() == std::vector<int>{1, 2});

  CHECK_FALSE(solver.add_equation({r(3), r(3), r(0)}, r(10)));  // contradiction
  CHECK(solver.rank() == 1);  // rejected row leaves the system unchanged

  CHECK(solver.add_equation({r(0), r(1), r(1)}, r(5)));
  CHECK(solver.add_equation({r(0), r(0), r(2)}, r(8)));
  REQUIRE(solver.determined());
  CHECK(solver.solution() == std::vector<Rational>{r(2), r(1), r(4)});
}
