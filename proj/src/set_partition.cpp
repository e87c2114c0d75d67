#include "jackchar/set_partition.hpp"

#include <algorithm>
#include <functional>

namespace jackchar {

std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  if (n <= 0) {
    out.push_back({});
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(n, 0);
  auto emit = [&]() {
    int blocks = 1 + *std::max_element(a.begin(), a.end());
    SetPartition sp(blocks);
    for (int i = 0; i < n; ++i) sp[a[i]].push_back(i);
    out.push_back(std::move(sp));
  };
  std::function<void(int, int)> rec = [&](int i, int max_label) {
    if (i == n) {
      emit();
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      a[i] = label;
      rec(i + 1, std::max(max_label, label));
    }
  };
  a[0] = 0;
  rec(1, 0);
  return out;
}

bool is_noncrossing(const SetPartition& sp) {
  int n = 0;
  for (const auto& block : sp) n += static_cast<int>(block.size());
  std::vector<int> label(n, -1);
  for (size_t b = 0; b < sp.size(); ++b)
    for (int x : sp[b]) label[x] = static_cast<int>(b);
  // Crossing: a < b < c < d with label(a)=label(c) != label(b)=label(d).
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b])
            return false;
  return true;
}

std::vector<SetPartition> noncrossing_partitions(int n) {
  std::vector<SetPartition> out;
  for (auto& sp : set_partitions(n))
    if (is_noncrossing(sp)) out.push_back(std::move(sp));
  return out;
}

Rational mobius_to_top(int blocks) {
  Rational sign = (blocks % 2 == 1) ? 1 : -1;
  return sign * Rational(factorial(blocks - 1));
}

}  // namespace jackchar
