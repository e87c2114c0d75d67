#include "jackchar/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "jackchar/error.hpp"
#include "oracles.hpp"

using jackchar::Error;
using jackchar::ErrorCode;
using jackchar::Integer;
using jackchar::Partition;

TEST_CASE("partition construction sorts and validates") {
  Partition p({1, 3, 2});
  CHECK(p.parts() == std::vector<int>{3, 2, 1});
  CHECK(p.size() == 6);
  CHECK(p.length() == 3);
  CHECK_FALSE(p.empty());
  CHECK(Partition().empty());
  CHECK(Partition().size() == 0);

  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK_THROWS_AS(Partition({-1}), Error);
}

TEST_CASE("partition parse and to_string round trip") {
  for (const char* text : {"[]", "[1]", "[3,2]", "[4,4,1,1,1]"}) {
    Partition p = Partition::parse(text);
    CHECK(p.to_string() == text);
  }
  CHECK(Partition::parse("[2, 3 ,1]").to_string() == "[3,2,1]");

  for (const char* bad : {"", "3,2", "[3,a]", "[0]", "[-2]", "[3,]", "[", "[]x"}) {
    CHECK_THROWS_WITH_AS(Partition::parse(bad), doctest::Contains("UNSUPPORTED_PARTITION"),
                         Error);
  }
}

TEST_CASE("part access and multiplicities") {
  Partition p({4, 2, 2, 1});
  CHECK(p.part(1) == 4);
  CHECK(p.part(3) == 2);
  CHECK(p.part(4) == 1);
  CHECK(p.part(5) == 0);
  CHECK(p.part(100) == 0);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.multiplicity(3) == 0);
}

TEST_CASE("z factor") {
  CHECK(Partition().z_factor() == 1);
  CHECK(Partition({3}).z_factor() == 3);
  CHECK(Partition({1, 1, 1}).z_factor() == 6);
  CHECK(Partition({2, 1, 1}).z_factor() == 4);
  CHECK(Partition({3, 3}).z_factor() == 18);
  CHECK(Partition({2, 2, 1}).z_factor() == 8);
}

TEST_CASE("dominance order") {
  CHECK(Partition({3, 1}).dominates(Partition({2, 2})));
  CHECK(Partition({2, 2}).dominates(Partition({2, 1, 1})));
  CHECK_FALSE(Partition({2, 1, 1}).dominates(Partition({2, 2})));
  CHECK(Partition({2, 2}).dominates(Partition({2, 2})));
  SUBCASE("incomparable pair") {
    CHECK_FALSE(Partition({3, 1, 1, 1}).dominates(Partition({2, 2, 2})));
    CHECK_FALSE(Partition({2, 2, 2}).dominates(Partition({3, 1, 1, 1})));
  }
  CHECK_THROWS_WITH_AS(Partition({2}).dominates(Partition({1})),
                       doctest::Contains("SIZE_MISMATCH"), Error);
}

TEST_CASE("concat, padding, removal") {
  CHECK(Partition({3, 1}).concat(Partition({2, 1})) == Partition({3, 2, 1, 1}));
  CHECK(Partition({3, 1}).concat(Partition()) == Partition({3, 1}));
  CHECK(Partition({2}).padded_with_ones(3) == Partition({2, 1, 1, 1}));
  CHECK(Partition({2}).padded_with_ones(0) == Partition({2}));
  CHECK(Partition({2, 1, 1}).with_value_removed(1) == Partition({2, 1}));
  CHECK(Partition({2, 1}).with_value_removed(2) == Partition({1}));
  CHECK_THROWS_AS(Partition({2}).with_value_removed(3), Error);
}

TEST_CASE("total order groups by size") {
  CHECK(Partition({1, 1}) < Partition({2}));
  CHECK(Partition({2, 1}) < Partition({3}));
  CHECK(Partition({2}) < Partition({1, 1, 1}));
  CHECK_FALSE(Partition({2}) < Partition({2}));
}

TEST_CASE("partitions_of enumerates each partition once") {
  for (int n = 0; n <= 12; ++n) {
    auto all = jackchar::partitions_of(n);
    CHECK(Integer(all.size()) == oracle::partition_count(n));
    std::set<std::vector<int>> seen;
    for (const auto& p : all) {
      CHECK(p.size() == n);
      seen.insert(p.parts());
    }
    CHECK(seen.size() == all.size());
  }
  auto five = jackchar::partitions_of(5);
  CHECK(five.front() == Partition({5}));
  CHECK(five.back() == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("partitions_of order extends dominance") {
  for (int n = 2; n <= 8; ++n) {
    auto all = jackchar::partitions_of(n);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j)
        CHECK_FALSE((all[j].dominates(all[i]) && !(all[j] == all[i])));
  }
}

TEST_CASE("bounded enumerations") {
  auto upto = jackchar::partitions_up_to(4);
  Integer expect = 0;
  for (int n = 0; n <= 4; ++n) expect += oracle::partition_count(n);
  CHECK(Integer(upto.size()) == expect);

  auto bounded = jackchar::partitions_bounded(4, 2);
  for (const auto& p : bounded) {
    CHECK(p.size() <= 4);
    CHECK(p.length() <= 2);
  }
  std::set<std::vector<int>> seen;
  for (const auto& p : bounded) seen.insert(p.parts());
  // by conjugation, partitions of m with at most 2 rows = partitions of m
  // into parts of size at most 2
  CHECK(seen.size() == 9);
}
