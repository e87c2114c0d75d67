#include "oracles.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Integer partition_count(int n) {
  if (n < 0) return 0;
  // table[k][m] = partitions of m into parts <= k, built bottom-up
  std::vector<Integer> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) ways[m] += ways[m - part];
  return ways[n];
}

Integer bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: negative");
  std::vector<Integer> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const Integer& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

Integer catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative");
  Integer value;
  mpz_bin_uiui(value.get_mpz_t(), 2 * n, n);
  return value / (n + 1);
}

namespace {

Integer mn_recurse(const std::set<int>& beta, const std::vector<int>& pi, size_t next) {
  if (next == pi.size()) {
    // an empty shape has beta-set {0, 1, ..., m-1}
    int expect = 0;
    for (int b : beta)
      if (b != expect++) return 0;
    return 1;
  }
  int k = pi[next];
  Integer total = 0;
  for (int b : beta) {
    if (b < k || beta.count(b - k)) continue;
    int crossings = 0;
    for (int a : beta)
      if (a > b - k && a < b) ++crossings;
    std::set<int> reduced = beta;
    reduced.erase(b);
    reduced.insert(b - k);
    Integer sub = mn_recurse(reduced, pi, next + 1);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

Integer sym_character(const std::vector<int>& lambda, const std::vector<int>& pi) {
  int total_lambda = std::accumulate(lambda.begin(), lambda.end(), 0);
  int total_pi = std::accumulate(pi.begin(), pi.end(), 0);
  if (total_lambda != total_pi) throw std::invalid_argument("sym_character: size mismatch");
  std::set<int> beta;
  int rows = static_cast<int>(lambda.size());
  for (int i = 0; i < rows; ++i) beta.insert(lambda[i] + (rows - 1 - i));
  return mn_recurse(beta, pi, 0);
}

Integer hook_product(const std::vector<int>& lambda) {
  std::vector<int> conjugate;
  for (int i = static_cast<int>(lambda.size()) - 1; i >= 0; --i)
    while (static_cast<int>(conjugate.size()) < lambda[i]) conjugate.push_back(i + 1);
  Integer product = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      product *= lambda[i] - j + conjugate[j] - static_cast<int>(i) - 1;
  return product;
}

}  // namespace oracle
