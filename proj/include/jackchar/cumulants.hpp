#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jackchar/ch_expansion.hpp"
#include "jackchar/set_partition.hpp"

namespace jackchar {

// Partition cumulants of an indexed family with respect to an arbitrary
// commutative product: the unique solution of
//   moment(S) = sum over set partitions nu of S of prod_{b in nu} cumulant(b)
// for every nonempty subset S. Subsets are sorted index lists into the
// family; products fold blocks in order of their smallest element.
template <typename Value>
class CumulantEngine {
 public:
  CumulantEngine(std::function<Value(const std::vector<int>&)> moment,
                 std::function<Value(const Value&, const Value&)> multiply)
      : moment_(std::move(moment)), multiply_(std::move(multiply)) {}

  const Value& cumulant(std::vector<int> subset) {
    auto it = memo_.find(subset);
    if (it != memo_.end()) return it->second;
    Value total = moment_(subset);
    int k = static_cast<int>(subset.size());
    for (const SetPartition& shape : set_partitions(k)) {
      if (shape.size() <= 1) continue;  // the one-block term is the unknown
      bool first = true;
      Value prod{};
      for (const std::vector<int>& block : shape) {
        std::vector<int> mapped;
        mapped.reserve(block.size());
        for (int i : block) mapped.push_back(subset[i]);
        const Value& factor = cumulant(mapped);
        prod = first ? factor : multiply_(prod, factor);
        first = false;
      }
      total = total - prod;
    }
    return memo_.emplace(std::move(subset), std::move(total)).first->second;
  }

 private:
  std::function<Value(const std::vector<int>&)> moment_;
  std::function<Value(const Value&, const Value&)> multiply_;
  std::map<std::vector<int>, Value> memo_;
};

// Conditional cumulant of Ch_{pi_1},...,Ch_{pi_l}: moments are the
// characters of concatenated indices, the product is pointwise.
ChExpansion kappa_dot(Expander& expander, const std::vector<Partition>& pis);

// The mirrored cumulant: moments are pointwise products, the product is the
// disjoint one. For two arguments it is the negative of kappa_dot.
ChExpansion kappa_dot_reverse(Expander& expander, const std::vector<Partition>& pis);

// kappa_dot on arbitrary members of the function algebra: moments are
// disjoint products of the selected slots, cumulant products pointwise.
// Agrees with kappa_dot on tuples of plain characters and is linear in each
// slot.
ChExpansion kappa_dot_general(Expander& expander, const std::vector<ChExpansion>& args);

// Cumulants compose across a commuting triangle of expectations:
//   kappa_dot^row(Ch_{pi_1}, ..., Ch_{pi_l})
//     = sum over set partitions nu of [l] of
//       kappa^row(kappa_dot(blocks of nu)).
// Both sides are compared on every diagram with |lambda| <= sum |pi_i| + 2:
// the left side's moments are kernels of concatenated characters, the right
// side's outer moments are kernels of pointwise products of the per-block
// dot cumulants; all cumulant products are separate products.
Report verify_brillinger(Expander& expander, const std::vector<Partition>& pis);

// Multisets (non-decreasing tuples) of nonempty partitions with total size
// <= max_size and between min_parts and max_parts entries.
void for_each_multiset(int max_size, int min_parts, int max_parts,
                       const std::function<void(const std::vector<Partition>&)>& fn);

// Space-joined partition names, e.g. "[2,1] [1]".
std::string tuple_name(const std::vector<Partition>& pis);

// Filtration degree bound for conditional cumulants:
//   deg kappa_dot(Ch_{pi_1},...,Ch_{pi_l}) <= sum (|pi_i| + len(pi_i)) - 2(l-1).
// Scans every multiset of l <= max_parts nonempty partitions with total size
// <= max_size.
Report verify_main_theorem(Expander& expander, int max_size, int max_parts);

// Conjectured positivity: (-1)^{l-1} kappa_dot expanded over {Ch_sigma} has
// coefficients in delta with nonnegative integer entries. Scans every
// multiset with l >= 2 and total size <= max_size.
Report scan_steroids(Expander& expander, int max_size);

// The cumulant recursion on formal moments resolves to the Moebius sum
//   cumulant([l]) = sum over set partitions nu of mobius(|nu|) prod m(b),
// whose coefficients sum to zero for l >= 2. Checked for 2 <= l <= max_parts.
Report check_coefficient_sum_zero(int max_parts);

// Runs the coefficient-vanishing check verify_Z3 on
// F = kappa_dot(Ch_{pi_1}, ..., Ch_{pi_l}) at the parameter schedule of the
// inductive degree-bound argument: for every multiset of l >= 2 nonempty
// partitions with total size <= max_size and every j in {0, ..., l-2}, with
//   n = sum |pi_i| - j - 2,   r = sum len(pi_i) - j,
// once at (n, r) in the original variant when j = 0 (alternative otherwise)
// and once at (n, r - 1) in the alternative variant. Applications with
// n < 0 are outside the check's domain and are recorded as skipped units.
Report verify_z3_prescribed(Expander& expander, int max_size);

}  // namespace jackchar
