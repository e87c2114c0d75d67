#pragma once

#include <vector>

#include "jackchar/rational.hpp"

namespace jackchar {

// Partition of {0..n-1}: blocks sorted ascending inside, blocks ordered by
// their smallest element.
using SetPartition = std::vector<std::vector<int>>;

// All set partitions of {0..n-1}, enumerated via restricted growth strings;
// deterministic order, first entry is the single-block partition of [n] when
// n >= 1 (RGS 00..0).
std::vector<SetPartition> set_partitions(int n);

bool is_noncrossing(const SetPartition& sp);

std::vector<SetPartition> noncrossing_partitions(int n);

// Moebius function of the set-partition lattice from nu to the one-block
// partition: depends only on the block count b of nu.
Rational mobius_to_top(int blocks);

}  // namespace jackchar
