#include "jackchar/row_functions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <utility>

#include "jackchar/characters.hpp"
#include "jackchar/cumulants.hpp"
#include "jackchar/error.hpp"

namespace jackchar {

namespace {

// Subset enumeration below walks bitmasks, so cap the number of positions.
constexpr int kMaxMaskBits = 20;

void check_mask_width(int count, const char* what) {
  if (count > kMaxMaskBits)
    fail(ErrorCode::BudgetExceeded,
         std::string(what) + " with " + std::to_string(count) + " positions exceeds the subset enumeration cap");
}

std::vector<int> masked_entries(const std::vector<int>& parts, unsigned mask) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    if ((mask >> i) & 1u) out.push_back(parts[i]);
  return out;
}

}  // namespace

struct RowKernel::State {
  DiagramFunction source;  // set only for kernels recovered from a function
  DiagramFunction direct;  // set only for kernels with prescribed values
  int max_rows = 0;
  int max_entry = 0;
  mutable std::map<Partition, LaurentScalar> memo;
  mutable std::mutex mutex;
};

RowKernel::RowKernel() {
  auto state = std::make_shared<State>();
  state->direct = [](const Partition&) { return LaurentScalar(); };
  state->max_rows = kMaxMaskBits;
  state->max_entry = std::numeric_limits<int>::max();
  state_ = std::move(state);
}

RowKernel RowKernel::from_function(DiagramFunction source, int max_rows, int max_entry) {
  auto state = std::make_shared<State>();
  state->source = std::move(source);
  state->max_rows = std::min(max_rows, kMaxMaskBits);
  state->max_entry = max_entry;
  return RowKernel(std::move(state));
}

RowKernel RowKernel::from_values(DiagramFunction values) {
  auto state = std::make_shared<State>();
  state->direct = std::move(values);
  state->max_rows = kMaxMaskBits;
  state->max_entry = std::numeric_limits<int>::max();
  return RowKernel(std::move(state));
}

RowKernel RowKernel::unit() {
  return from_values([](const Partition& entries) {
    return entries.empty() ? LaurentScalar::from_int(1) : LaurentScalar();
  });
}

bool RowKernel::has_source() const { return static_cast<bool>(state_->source); }

const LaurentScalar& RowKernel::value(const Partition& entries) const {
  const State& state = *state_;
  if (entries.length() > state.max_rows ||
      (!entries.empty() && entries.parts().front() > state.max_entry))
    fail(ErrorCode::BudgetExceeded,
         "kernel value " + entries.to_string() + " outside the order/entry budget");
  {
    std::lock_guard<std::mutex> lock(state.mutex);
    auto it = state.memo.find(entries);
    if (it != state.memo.end()) return it->second;
  }
  LaurentScalar result;
  if (state.direct) {
    result = state.direct(entries);
  } else {
    // Triangular inversion: subtract every proper index subset's value from
    // the source evaluation. Positions with equal entries are separate
    // summands, hence the bitmask walk rather than a multiset walk.
    result = state.source(entries);
    const std::vector<int>& parts = entries.parts();
    int len = entries.length();
    unsigned full = (1u << len) - 1u;
    for (unsigned mask = 0; mask < full; ++mask)
      result -= value(Partition(masked_entries(parts, mask)));
  }
  std::lock_guard<std::mutex> lock(state.mutex);
  return state.memo.emplace(entries, std::move(result)).first->second;
}

LaurentScalar RowKernel::evaluate(const Partition& lambda) const {
  check_mask_width(lambda.length(), "diagram");
  const std::vector<int>& parts = lambda.parts();
  int len = lambda.length();
  LaurentScalar total;
  for (unsigned mask = 0; mask < (1u << len); ++mask)
    total += value(Partition(masked_entries(parts, mask)));
  if (state_->source) {
    LaurentScalar expected = state_->source(lambda);
    if (!(total == expected))
      fail(ErrorCode::ReconstructionMismatch,
           "kernel subset sum at " + lambda.to_string() + " gives " + total.to_string() +
               " but the source gives " + expected.to_string());
  }
  return total;
}

RowKernel RowKernel::operator-(const RowKernel& other) const {
  RowKernel left = *this;
  RowKernel right = other;
  return from_values([left, right](const Partition& entries) {
    return left.value(entries) - right.value(entries);
  });
}

RowKernel ch_kernel(JackTable& jack, const Partition& pi, int max_rows, int max_entry) {
  return RowKernel::from_function(
      [&jack, pi](const Partition& lambda) { return ch_classical(jack, pi, lambda); },
      max_rows, max_entry);
}

RowKernel separate_product(const RowKernel& f, const RowKernel& g) {
  return RowKernel::from_values([f, g](const Partition& entries) {
    check_mask_width(entries.length(), "separate product order");
    const std::vector<int>& parts = entries.parts();
    int len = entries.length();
    LaurentScalar total;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      unsigned complement = ((1u << len) - 1u) & ~mask;
      total += f.value(Partition(masked_entries(parts, mask))) *
               g.value(Partition(masked_entries(parts, complement)));
    }
    return total;
  });
}

LaurentScalar sym_extension(const DiagramFunction& f, const std::vector<int>& coords) {
  std::vector<int> sorted = coords;
  for (int c : sorted)
    if (c < 0) fail(ErrorCode::SizeMismatch, "negative coordinate in a symmetric extension");
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
  return f(Partition(std::move(sorted)));
}

std::function<LaurentScalar(const std::vector<int>&)> delta_operator(DiagramFunction f, int j) {
  return [f = std::move(f), j](const std::vector<int>& coords) {
    if (j < 0 || j >= static_cast<int>(coords.size()))
      fail(ErrorCode::SizeMismatch, "difference coordinate outside the tuple");
    std::vector<int> bumped = coords;
    ++bumped[j];
    return sym_extension(f, bumped) - sym_extension(f, coords);
  };
}

LaurentScalar iterated_delta(const DiagramFunction& f, int k, std::vector<int> coords) {
  check_mask_width(k, "difference tuple");
  if (static_cast<int>(coords.size()) < k) coords.resize(k, 0);
  LaurentScalar total;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> bumped = coords;
    int ones = 0;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1u) {
        ++bumped[i];
        ++ones;
      }
    LaurentScalar term = sym_extension(f, bumped);
    if ((k - ones) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

namespace {

void for_each_entry_multiset(int max_rows, int max_entry,
                             const std::function<void(const Partition&)>& fn) {
  std::vector<int> entries;
  std::function<void(int)> walk = [&](int cap) {
    fn(Partition(entries));
    if (static_cast<int>(entries.size()) == max_rows) return;
    for (int next = cap; next >= 1; --next) {
      entries.push_back(next);
      walk(next);
      entries.pop_back();
    }
  };
  walk(max_entry);
}

}  // namespace

int row_degree_probe(const RowKernel& kernel, int max_rows, int max_entry) {
  int best = 0;
  for_each_entry_multiset(max_rows, max_entry, [&](const Partition& entries) {
    const LaurentScalar& value = kernel.value(entries);
    std::optional<int> upper = value.upper_degree();
    if (upper) best = std::max(best, *upper + 2 * entries.length());
  });
  return best;
}

Report verify_Z3(const DiagramFunction& f, int n, int r, ZeroVariant variant) {
  bool original = variant == ZeroVariant::Original;
  if (n < 0 || r < (original ? 1 : 0))
    fail(ErrorCode::SizeMismatch, "inadmissible difference-family parameters");
  Report report;
  report.check = "z3-coefficient-vanishing";
  report.parameters = {{"n", n}, {"r", r}, {"variant", original ? "original" : "alternative"}};
  for (int k = r; 2 * k <= n + r; ++k) {
    int size_bound = n + r - 2 * k - (original && k == r ? 1 : 0);
    if (size_bound < 0) continue;
    for (const Partition& lambda : partitions_bounded(size_bound, k)) {
      std::vector<int> coords = lambda.parts();
      coords.resize(k, 0);
      LaurentScalar value = iterated_delta(f, k, coords);
      Rational coeff = value.coefficient_at(n + r - 2 * k);
      report.units.push_back({{"k", k},
                              {"lambda", lambda.to_string()},
                              {"coefficient", to_string(coeff)}});
      if (coeff != 0)
        report.violations.push_back("coefficient of A^" + std::to_string(n + r - 2 * k) +
                                    " at k=" + std::to_string(k) + ", lambda=" +
                                    lambda.to_string() + " is " + to_string(coeff));
    }
  }
  return report;
}

Report verify_small_degree_killed(const RowKernel& kernel, int d, int max_k, int max_size) {
  Report report;
  report.check = "small-degree-difference-vanishing";
  report.parameters = {{"d", d}, {"max_k", max_k}, {"max_size", max_size}};
  DiagramFunction f = [&kernel](const Partition& lambda) { return kernel.evaluate(lambda); };
  for (int k = 0; k <= max_k; ++k) {
    for (const Partition& lambda : partitions_up_to(max_size)) {
      LaurentScalar value = iterated_delta(f, k, lambda.parts());
      Rational coeff = value.coefficient_at(d - 2 * k);
      report.units.push_back({{"k", k},
                              {"lambda", lambda.to_string()},
                              {"coefficient", to_string(coeff)}});
      if (coeff != 0)
        report.violations.push_back("coefficient of A^" + std::to_string(d - 2 * k) +
                                    " at k=" + std::to_string(k) + ", lambda=" +
                                    lambda.to_string() + " is " + to_string(coeff));
    }
  }
  return report;
}

namespace {

RowKernel kappa_row_of_characters(JackTable& jack, const std::vector<Partition>& pis,
                                  int max_rows, int max_entry) {
  CumulantEngine<RowKernel> engine(
      [&jack, &pis, max_rows, max_entry](const std::vector<int>& subset) {
        Partition concat;
        for (int i : subset) concat = concat.concat(pis[i]);
        return ch_kernel(jack, concat, max_rows, max_entry);
      },
      [](const RowKernel& a, const RowKernel& b) { return separate_product(a, b); });
  std::vector<int> all(pis.size());
  for (int i = 0; i < static_cast<int>(pis.size()); ++i) all[i] = i;
  return engine.cumulant(std::move(all));
}

}  // namespace

Report verify_vanishing_kappa_row(JackTable& jack, const std::vector<Partition>& pis) {
  if (pis.empty()) fail(ErrorCode::SizeMismatch, "vanishing check needs at least one argument");
  int total = 0;
  for (const Partition& pi : pis) total += pi.size();
  Report report;
  report.check = "separate-cumulant-vanishing";
  report.parameters = {{"tuple", tuple_name(pis)}, {"threshold", total}};
  RowKernel kernel = kappa_row_of_characters(jack, pis, total, total);
  for (const Partition& lambda : partitions_up_to(total - 1)) {
    LaurentScalar value = kernel.evaluate(lambda);
    report.units.push_back({{"lambda", lambda.to_string()}, {"value", value.to_string()}});
    if (!value.is_zero())
      report.violations.push_back("separate cumulant of " + tuple_name(pis) + " at " +
                                  lambda.to_string() + " is " + value.to_string());
  }
  return report;
}

Report scan_vanishing(JackTable& jack, int max_size, int max_parts) {
  Report report;
  report.check = "separate-cumulant-vanishing";
  report.parameters = {{"max_size", max_size}, {"max_parts", max_parts}};
  for_each_multiset(max_size, 1, max_parts, [&](const std::vector<Partition>& pis) {
    Report one = verify_vanishing_kappa_row(jack, pis);
    report.units.push_back({{"tuple", tuple_name(pis)},
                            {"probes", static_cast<int>(one.units.size())}});
    report.violations.insert(report.violations.end(), one.violations.begin(),
                             one.violations.end());
  });
  return report;
}

Report verify_cool_vanishing(JackTable& jack, int max_size) {
  Report report;
  report.check = "separate-product-vanishing";
  report.parameters = {{"max_size", max_size}};
  auto nonempty = partitions_up_to(max_size);
  for (const Partition& pi : nonempty) {
    if (pi.empty()) continue;
    for (const Partition& sigma : nonempty) {
      if (sigma.empty() || sigma < pi) continue;
      int threshold = pi.size() + sigma.size();
      if (threshold > max_size) continue;
      RowKernel product = separate_product(ch_kernel(jack, pi, max_size, max_size),
                                           ch_kernel(jack, sigma, max_size, max_size));
      int probes = 0;
      for (const Partition& lambda : partitions_up_to(threshold - 1)) {
        LaurentScalar value = product.evaluate(lambda);
        ++probes;
        if (!value.is_zero())
          report.violations.push_back("separate product of kernels " + pi.to_string() + ", " +
                                      sigma.to_string() + " at " + lambda.to_string() + " is " +
                                      value.to_string());
      }
      report.units.push_back({{"pi", pi.to_string()},
                              {"sigma", sigma.to_string()},
                              {"probes", probes}});
    }
  }
  return report;
}

namespace {

bool masks_connected(const std::vector<unsigned>& masks) {
  int n = static_cast<int>(masks.size());
  std::vector<bool> reached(n, false);
  std::vector<int> queue = {0};
  reached[0] = true;
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (int b = 0; b < n; ++b)
      if (!reached[b] && (masks[a] & masks[b]) != 0u) {
        reached[b] = true;
        queue.push_back(b);
      }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

int mask_component_count(const std::vector<unsigned>& masks) {
  int n = static_cast<int>(masks.size());
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  std::function<int(int)> find = [&](int a) { return root[a] == a ? a : root[a] = find(root[a]); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((masks[a] & masks[b]) != 0u) root[find(a)] = find(b);
  int components = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++components;
  return components;
}

LaurentScalar connected_index_sum(const std::vector<const ArityKernel*>& factors,
                                  const Partition& lambda) {
  check_mask_width(lambda.length(), "diagram");
  const std::vector<int>& rows = lambda.parts();
  int len = lambda.length();
  // Row index subsets of the prescribed arities, one per factor; masks with
  // the wrong popcount are skipped up front.
  std::vector<std::vector<unsigned>> choices(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) {
    int arity = factors[i]->arity;
    for (unsigned mask = 0; mask < (1u << len); ++mask)
      if (std::popcount(mask) == arity) choices[i].push_back(mask);
  }
  LaurentScalar total;
  std::vector<unsigned> picked(factors.size(), 0u);
  std::function<void(size_t)> walk = [&](size_t i) {
    if (i == factors.size()) {
      if (!masks_connected(picked)) return;
      LaurentScalar term = LaurentScalar::from_int(1);
      for (size_t j = 0; j < factors.size(); ++j)
        term *= factors[j]->values(masked_entries(rows, picked[j]));
      total += term;
      return;
    }
    for (unsigned mask : choices[i]) {
      picked[i] = mask;
      walk(i + 1);
    }
  };
  walk(0);
  return total;
}

}  // namespace

Report verify_kernel_cumulant_formula(const std::vector<ArityKernel>& pool,
                                      const std::vector<int>& tuple, int max_probe_size) {
  if (tuple.empty()) fail(ErrorCode::SizeMismatch, "kernel cumulant needs at least one argument");
  for (int t : tuple)
    if (t < 0 || t >= static_cast<int>(pool.size()))
      fail(ErrorCode::SizeMismatch, "tuple entry outside the kernel pool");
  std::vector<RowKernel> pool_kernels;
  pool_kernels.reserve(pool.size());
  for (const ArityKernel& entry : pool)
    pool_kernels.push_back(RowKernel::from_values([entry](const Partition& x) {
      return x.length() == entry.arity ? entry.values(x.parts()) : LaurentScalar();
    }));

  CumulantEngine<RowKernel> engine(
      [&](const std::vector<int>& subset) {
        std::vector<RowKernel> chosen;
        for (int p : subset) chosen.push_back(pool_kernels[tuple[p]]);
        return RowKernel::from_function(
            [chosen](const Partition& lambda) {
              LaurentScalar out = LaurentScalar::from_int(1);
              for (const RowKernel& kernel : chosen) out *= kernel.evaluate(lambda);
              return out;
            },
            max_probe_size, max_probe_size);
      },
      [](const RowKernel& a, const RowKernel& b) { return separate_product(a, b); });
  std::vector<int> all(tuple.size());
  for (int i = 0; i < static_cast<int>(tuple.size()); ++i) all[i] = i;
  RowKernel recursive = engine.cumulant(std::move(all));

  std::vector<const ArityKernel*> factors;
  for (int t : tuple) factors.push_back(&pool[t]);

  Report report;
  report.check = "kernel-cumulant-connected-sum";
  report.parameters = {{"arguments", static_cast<int>(tuple.size())},
                       {"max_probe_size", max_probe_size}};
  for (const Partition& lambda : partitions_up_to(max_probe_size)) {
    LaurentScalar lhs = recursive.evaluate(lambda);
    LaurentScalar rhs = connected_index_sum(factors, lambda);
    report.units.push_back({{"lambda", lambda.to_string()}, {"value", rhs.to_string()}});
    if (!(lhs == rhs))
      report.violations.push_back("at " + lambda.to_string() + " the cumulant recursion gives " +
                                  lhs.to_string() + " but the connected sum gives " +
                                  rhs.to_string());
  }
  return report;
}

Report verify_connected_components(int max_sets, int ground_size, int samples) {
  if (ground_size < 1 || ground_size > 16 || max_sets < 1)
    fail(ErrorCode::SizeMismatch, "inadmissible family budgets");
  Report report;
  report.check = "union-bound-components";
  report.parameters = {{"max_sets", max_sets}, {"ground_size", ground_size}, {"samples", samples}};
  unsigned subsets = 1u << ground_size;
  auto check_family = [&](const std::vector<unsigned>& family) {
    int n = static_cast<int>(family.size());
    unsigned all = 0;
    int size_sum = 0;
    for (unsigned mask : family) {
      all |= mask;
      size_sum += std::popcount(mask);
    }
    int bound = size_sum + mask_component_count(family) - n;
    if (std::popcount(all) > bound) {
      std::ostringstream text;
      text << "family of " << n << " subsets with union " << std::popcount(all)
           << " exceeds the bound " << bound;
      report.violations.push_back(text.str());
    }
  };
  for (int n = 1; n <= max_sets; ++n) {
    double exhaustive_count = std::pow(static_cast<double>(subsets), n);
    long families = 0;
    if (exhaustive_count <= 4096.0) {
      std::vector<unsigned> family(n, 0u);
      std::function<void(int)> walk = [&](int i) {
        if (i == n) {
          check_family(family);
          ++families;
          return;
        }
        for (unsigned mask = 0; mask < subsets; ++mask) {
          family[i] = mask;
          walk(i + 1);
        }
      };
      walk(0);
      report.units.push_back({{"sets", n}, {"families", families}, {"mode", "exhaustive"}});
    } else {
      std::mt19937 rng(12345u + static_cast<unsigned>(n));
      std::uniform_int_distribution<unsigned> pick(0u, subsets - 1u);
      for (int s = 0; s < samples; ++s) {
        std::vector<unsigned> family(n);
        for (unsigned& mask : family) mask = pick(rng);
        check_family(family);
        ++families;
      }
      report.units.push_back({{"sets", n}, {"families", families}, {"mode", "sampled"}});
    }
  }
  return report;
}

}  // namespace jackchar
