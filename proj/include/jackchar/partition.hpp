#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jackchar/rational.hpp"

namespace jackchar {

// Integer partition: weakly decreasing positive parts. Doubles as a Young
// diagram (rows) and as a finite multiset of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // "[3,2]" or "[]".
  static Partition parse(const std::string& text);
  std::string to_string() const;

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-indexed row length; 0 beyond the last row.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  int multiplicity(int value) const;

  // z_pi = prod_i i^{m_i} m_i!
  Integer z_factor() const;

  Partition concat(const Partition& other) const;
  Partition padded_with_ones(int count) const;
  Partition with_value_removed(int value) const;

  // Dominance order; both partitions must have equal size.
  bool dominates(const Partition& other) const;

  // Total order: by size, then lexicographically on the part vectors.
  // Used for deterministic map keys and output ordering.
  bool operator<(const Partition& other) const {
    if (size_ != other.size_) return size_ < other.size_;
    return parts_ < other.parts_;
  }
  bool operator==(const Partition& other) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
// This order is a linear extension of dominance (larger in dominance first).
std::vector<Partition> partitions_of(int n);

// Sizes 0..n, each size block in partitions_of order.
std::vector<Partition> partitions_up_to(int n);

// Partitions of every size 0..max_size with at most max_parts parts.
std::vector<Partition> partitions_bounded(int max_size, int max_parts);

}  // namespace jackchar
