#include "jackchar/set_partition.hpp"

#include <doctest.h>

#include <set>

#include "oracles.hpp"

using jackchar::Integer;
using jackchar::SetPartition;

TEST_CASE("set partition counts match Bell numbers") {
  for (int n = 0; n <= 8; ++n) {
    auto all = jackchar::set_partitions(n);
    CHECK(Integer(all.size()) == oracle::bell_number(n));
    std::set<SetPartition> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
  }
  CHECK(jackchar::set_partitions(0) == std::vector<SetPartition>{{}});
}

TEST_CASE("blocks are canonical") {
  for (const auto& part : jackchar::set_partitions(6)) {
    std::set<int> covered;
    int previous_min = -1;
    for (const auto& block : part) {
      REQUIRE_FALSE(block.empty());
      for (size_t i = 1; i < block.size(); ++i) CHECK(block[i - 1] < block[i]);
      CHECK(block.front() > previous_min);
      previous_min = block.front();
      covered.insert(block.begin(), block.end());
    }
    CHECK(covered.size() == 6);
    CHECK(*covered.begin() == 0);
    CHECK(*covered.rbegin() == 5);
  }
}

TEST_CASE("noncrossing recognition") {
  CHECK(jackchar::is_noncrossing({{0, 2}, {1, 3}}) == false);
  CHECK(jackchar::is_noncrossing({{0, 3}, {1, 2}}) == true);
  CHECK(jackchar::is_noncrossing({{0, 1, 2, 3}}) == true);
  CHECK(jackchar::is_noncrossing({{0}, {1}, {2}}) == true);
  CHECK(jackchar::is_noncrossing({{0, 2, 4}, {1, 5}, {3}}) == false);
}

TEST_CASE("noncrossing counts match Catalan numbers") {
  for (int n = 0; n <= 8; ++n) {
    auto nc = jackchar::noncrossing_partitions(n);
    CHECK(Integer(nc.size()) == oracle::catalan(n));
    for (const auto& part : nc) CHECK(jackchar::is_noncrossing(part));
  }
}

TEST_CASE("mobius weights") {
  CHECK(jackchar::mobius_to_top(1) == 1);
  CHECK(jackchar::mobius_to_top(2) == -1);
  CHECK(jackchar::mobius_to_top(3) == 2);
  CHECK(jackchar::mobius_to_top(4) == -6);

  // over the whole lattice the mobius function to the top sums to zero
  for (int n = 2; n <= 7; ++n) {
    jackchar::Rational total = 0;
    for (const auto& part : jackchar::set_partitions(n))
      total += jackchar::mobius_to_top(static_cast<int>(part.size()));
    CHECK(total == 0);
  }
}
