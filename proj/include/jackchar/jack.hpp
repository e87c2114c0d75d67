#pragma once

#include <map>
#include <vector>

#include "jackchar/cache.hpp"
#include "jackchar/partition.hpp"
#include "jackchar/poly.hpp"

namespace jackchar {

// Tables of normalized Jack characters theta_pi(lambda): the coefficient of
// p_pi in the integral-form Jack polynomial J_lambda, normalized so
// theta_{1^n}(lambda) = 1. Each entry is a polynomial in alpha of degree at
// most n = |lambda|.
//
// Construction: Gram-Schmidt over the monomial basis in dominance order
// under <p_lam, p_mu> = delta * z_lam * alpha^{len(lam)}, run exactly at the
// integer points alpha = 1..n+2; the first n+1 points pin each coefficient
// by interpolation and the last one must reproduce (DEGREE_EXCEEDED
// otherwise). A vanishing p_{1^n} coefficient would make the normalization
// meaningless (NORMALIZATION_FAILURE).
class JackTable {
 public:
  explicit JackTable(CacheStore cache = CacheStore(), int budget = 10)
      : cache_(std::move(cache)), budget_(budget) {}

  int budget() const { return budget_; }
  void set_budget(int budget) { budget_ = budget; }

  // theta_pi(lambda); requires |pi| == |lambda| and |lambda| <= budget.
  const AlphaPoly& theta(const Partition& pi, const Partition& lambda);

  // All nonzero p-coefficients of J_lambda, keyed by the p index partition.
  std::map<Partition, AlphaPoly> jack_in_p_basis(const Partition& lambda);

  // Precompute (or load from cache) the tables for every size 0..n.
  void warm(int n);

  // theta[lambda index][pi index] over partitions_of(n) order. The serial
  // and parallel builders produce identical tables; parallelism is across
  // the independent alpha sample points.
  static std::vector<std::vector<AlphaPoly>> build_table(int n, bool parallel);

 private:
  const std::vector<std::vector<AlphaPoly>>& table(int n);

  CacheStore cache_;
  int budget_;
  std::map<int, std::vector<std::vector<AlphaPoly>>> tables_;
};

}  // namespace jackchar
