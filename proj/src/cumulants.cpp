#include "jackchar/cumulants.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "jackchar/error.hpp"
#include "jackchar/row_functions.hpp"

namespace jackchar {

namespace {

std::vector<int> full_index_set(std::size_t count) {
  std::vector<int> all(count);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

// Emitted as non-decreasing sequences in partition order.
void for_each_multiset(int max_size, int min_parts, int max_parts,
                       const std::function<void(const std::vector<Partition>&)>& fn) {
  std::vector<Partition> pool;
  for (const Partition& pi : partitions_up_to(max_size))
    if (!pi.empty()) pool.push_back(pi);
  std::sort(pool.begin(), pool.end());

  std::vector<Partition> current;
  std::function<void(std::size_t, int)> recurse = [&](std::size_t start, int budget) {
    int parts = static_cast<int>(current.size());
    if (parts >= min_parts) fn(current);
    if (parts == max_parts) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool[i].size() > budget) continue;
      current.push_back(pool[i]);
      recurse(i, budget - pool[i].size());
      current.pop_back();
    }
  };
  recurse(0, max_size);
}

std::string tuple_name(const std::vector<Partition>& pis) {
  std::string out;
  for (const Partition& pi : pis) {
    if (!out.empty()) out += " ";
    out += pi.to_string();
  }
  return out;
}

namespace {

int degree_bound_for(const std::vector<Partition>& pis) {
  int bound = 0;
  for (const Partition& pi : pis) bound += pi.size() + pi.length();
  return bound - 2 * (static_cast<int>(pis.size()) - 1);
}

// Formal span of products of moment symbols, keyed by the sorted multiset of
// argument subsets.
struct Formal {
  std::map<std::vector<std::vector<int>>, Rational> terms;

  Formal operator-(const Formal& other) const {
    Formal out = *this;
    for (const auto& [key, coeff] : other.terms) {
      Rational& slot = out.terms[key];
      slot -= coeff;
      if (slot == 0) out.terms.erase(key);
    }
    return out;
  }
};

Formal formal_moment(const std::vector<int>& subset) {
  Formal out;
  out.terms.emplace(std::vector<std::vector<int>>{subset}, Rational(1));
  return out;
}

Formal formal_multiply(const Formal& a, const Formal& b) {
  Formal out;
  for (const auto& [key_a, coeff_a] : a.terms)
    for (const auto& [key_b, coeff_b] : b.terms) {
      std::vector<std::vector<int>> key = key_a;
      key.insert(key.end(), key_b.begin(), key_b.end());
      std::sort(key.begin(), key.end());
      Rational& slot = out.terms[key];
      slot += coeff_a * coeff_b;
      if (slot == 0) out.terms.erase(key);
    }
  return out;
}

}  // namespace

ChExpansion kappa_dot(Expander& expander, const std::vector<Partition>& pis) {
  if (pis.empty()) fail(ErrorCode::SizeMismatch, "cumulant needs at least one argument");
  CumulantEngine<ChExpansion> engine(
      [&](const std::vector<int>& subset) {
        Partition concat;
        for (int i : subset) concat = concat.concat(pis[i]);
        return ChExpansion::ch(concat);
      },
      [&](const ChExpansion& a, const ChExpansion& b) { return expander.multiply(a, b); });
  return engine.cumulant(full_index_set(pis.size()));
}

ChExpansion kappa_dot_reverse(Expander& expander, const std::vector<Partition>& pis) {
  if (pis.empty()) fail(ErrorCode::SizeMismatch, "cumulant needs at least one argument");
  CumulantEngine<ChExpansion> engine(
      [&](const std::vector<int>& subset) {
        ChExpansion prod = ChExpansion::constant(Rational(1));
        for (int i : subset) prod = expander.multiply(prod, ChExpansion::ch(pis[i]));
        return prod;
      },
      [](const ChExpansion& a, const ChExpansion& b) { return disjoint_multiply(a, b); });
  return engine.cumulant(full_index_set(pis.size()));
}

Report verify_main_theorem(Expander& expander, int max_size, int max_parts) {
  Report report;
  report.check = "main-theorem-degree-bound";
  report.parameters = {{"max_size", max_size}, {"max_parts", max_parts}};
  for_each_multiset(max_size, 1, max_parts, [&](const std::vector<Partition>& pis) {
    ChExpansion kappa = kappa_dot(expander, pis);
    int degree = kappa.degree();
    int bound = degree_bound_for(pis);
    report.units.push_back(
        {{"parts", tuple_name(pis)}, {"degree", degree}, {"bound", bound}});
    if (degree > bound)
      report.violations.push_back("degree " + std::to_string(degree) + " exceeds bound " +
                                  std::to_string(bound) + " for " + tuple_name(pis));
  });
  return report;
}

Report scan_steroids(Expander& expander, int max_size) {
  Report report;
  report.check = "steroids-positivity";
  report.parameters = {{"max_size", max_size}};
  for_each_multiset(max_size, 2, max_size, [&](const std::vector<Partition>& pis) {
    ChExpansion kappa = kappa_dot(expander, pis);
    if (pis.size() % 2 == 0) kappa = -kappa;
    for (const auto& [sigma, poly] : kappa.terms()) {
      DeltaPoly delta = gamma_to_delta(poly);
      for (int k = 0; k <= delta.degree(); ++k) {
        const Rational& coeff = delta.coefficient(k);
        if (coeff < 0 || !is_integer(coeff))
          report.violations.push_back("coefficient " + to_string(coeff) + " of delta^" +
                                      std::to_string(k) + " Ch_" + sigma.to_string() +
                                      " in " + tuple_name(pis));
      }
    }
    report.units.push_back(
        {{"parts", tuple_name(pis)}, {"terms", kappa.terms().size()}});
  });
  return report;
}

Report check_coefficient_sum_zero(int max_parts) {
  Report report;
  report.check = "cumulant-coefficient-sum";
  report.parameters = {{"max_parts", max_parts}};
  for (int l = 2; l <= max_parts; ++l) {
    CumulantEngine<Formal> engine(formal_moment, formal_multiply);
    Formal kappa = engine.cumulant(full_index_set(l));

    Rational sum(0);
    for (const auto& [key, coeff] : kappa.terms) sum += coeff;

    std::size_t expected_terms = set_partitions(l).size();
    bool shape_ok = kappa.terms.size() == expected_terms;
    bool mobius_ok = true;
    for (const SetPartition& nu : set_partitions(l)) {
      std::vector<std::vector<int>> key = nu;
      std::sort(key.begin(), key.end());
      auto it = kappa.terms.find(key);
      if (it == kappa.terms.end() ||
          it->second != mobius_to_top(static_cast<int>(nu.size()))) {
        mobius_ok = false;
        break;
      }
    }

    report.units.push_back({{"parts", l},
                            {"terms", kappa.terms.size()},
                            {"coefficient_sum", to_string(sum)}});
    if (sum != 0)
      report.violations.push_back("coefficient sum " + to_string(sum) + " for l=" +
                                  std::to_string(l));
    if (!shape_ok || !mobius_ok)
      report.violations.push_back("cumulant expansion deviates from the Moebius sum for l=" +
                                  std::to_string(l));
  }
  return report;
}

ChExpansion kappa_dot_general(Expander& expander, const std::vector<ChExpansion>& args) {
  if (args.empty()) fail(ErrorCode::SizeMismatch, "cumulant needs at least one argument");
  CumulantEngine<ChExpansion> engine(
      [&](const std::vector<int>& subset) {
        ChExpansion prod = ChExpansion::constant(Rational(1));
        for (int i : subset) prod = disjoint_multiply(prod, args[i]);
        return prod;
      },
      [&](const ChExpansion& a, const ChExpansion& b) { return expander.multiply(a, b); });
  return engine.cumulant(full_index_set(args.size()));
}

Report verify_brillinger(Expander& expander, const std::vector<Partition>& pis) {
  if (pis.empty()) fail(ErrorCode::SizeMismatch, "cumulant needs at least one argument");
  JackTable& jack = expander.jack();
  int total = 0;
  for (const Partition& pi : pis) total += pi.size();
  int l = static_cast<int>(pis.size());
  int max_rows = total + 2;
  int max_entry = total + 2;

  CumulantEngine<RowKernel> left_engine(
      [&](const std::vector<int>& subset) {
        Partition concat;
        for (int i : subset) concat = concat.concat(pis[i]);
        return ch_kernel(jack, concat, max_rows, max_entry);
      },
      [](const RowKernel& a, const RowKernel& b) { return separate_product(a, b); });
  RowKernel left = left_engine.cumulant(full_index_set(pis.size()));

  // One kernel per set partition: the row cumulant of the per-block dot
  // cumulants, whose moments are pointwise products of block values.
  std::vector<RowKernel> by_shape;
  for (const SetPartition& shape : set_partitions(l)) {
    std::vector<ChExpansion> blocks;
    for (const std::vector<int>& block : shape) {
      std::vector<Partition> sub;
      for (int i : block) sub.push_back(pis[i]);
      blocks.push_back(kappa_dot(expander, sub));
    }
    CumulantEngine<RowKernel> vertical(
        [&blocks, &jack, max_rows, max_entry](const std::vector<int>& subset) {
          std::vector<ChExpansion> chosen;
          for (int b : subset) chosen.push_back(blocks[b]);
          return RowKernel::from_function(
              [chosen, &jack](const Partition& lambda) {
                LaurentScalar out = LaurentScalar::from_int(1);
                for (const ChExpansion& factor : chosen) out *= factor.evaluate(jack, lambda);
                return out;
              },
              max_rows, max_entry);
        },
        [](const RowKernel& a, const RowKernel& b) { return separate_product(a, b); });
    by_shape.push_back(vertical.cumulant(full_index_set(blocks.size())));
  }

  Report report;
  report.check = "cumulant-composition";
  report.parameters = {{"tuple", tuple_name(pis)}, {"max_probe_size", total + 2}};
  for (const Partition& lambda : partitions_up_to(total + 2)) {
    LaurentScalar lhs = left.evaluate(lambda);
    LaurentScalar rhs;
    for (const RowKernel& kernel : by_shape) rhs += kernel.evaluate(lambda);
    report.units.push_back({{"lambda", lambda.to_string()}, {"value", lhs.to_string()}});
    if (!(lhs == rhs))
      report.violations.push_back("composition mismatch for " + tuple_name(pis) + " at " +
                                  lambda.to_string() + ": " + lhs.to_string() + " vs " +
                                  rhs.to_string());
  }
  return report;
}

Report verify_z3_prescribed(Expander& expander, int max_size) {
  Report report;
  report.check = "z3-prescribed-applications";
  report.parameters = {{"max_size", max_size}};
  for_each_multiset(max_size, 2, max_size, [&](const std::vector<Partition>& pis) {
    int total_size = 0;
    int total_len = 0;
    for (const Partition& pi : pis) {
      total_size += pi.size();
      total_len += pi.length();
    }
    ChExpansion kappa = kappa_dot(expander, pis);
    DiagramFunction f = [&kappa, &expander](const Partition& lambda) {
      return kappa.evaluate(expander.jack(), lambda);
    };
    int l = static_cast<int>(pis.size());
    for (int j = 0; j + 2 <= l; ++j) {
      int n = total_size - j - 2;
      int r = total_len - j;
      auto run = [&](const char* application, int rr, ZeroVariant variant) {
        nlohmann::json unit = {{"tuple", tuple_name(pis)},
                               {"j", j},
                               {"application", application},
                               {"n", n},
                               {"r", rr},
                               {"variant", variant == ZeroVariant::Original ? "original"
                                                                            : "alternative"}};
        if (n < 0 || rr < (variant == ZeroVariant::Original ? 1 : 0)) {
          unit["skipped"] = "outside the check's domain";
          report.units.push_back(unit);
          return;
        }
        Report one = verify_Z3(f, n, rr, variant);
        unit["checks"] = one.units.size();
        report.units.push_back(unit);
        for (const std::string& violation : one.violations)
          report.violations.push_back(tuple_name(pis) + " j=" + std::to_string(j) + " " +
                                      application + " application: " + violation);
      };
      run("first", r, j == 0 ? ZeroVariant::Original : ZeroVariant::Alternative);
      run("second", r - 1, ZeroVariant::Alternative);
    }
  });
  return report;
}

}  // namespace jackchar
