#include "jackchar/symgroup.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "jackchar/cumulants.hpp"
#include "jackchar/error.hpp"

namespace jackchar {

namespace {

constexpr int kRankBudget = 8;

std::string perm_to_string(const Permutation& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    fail(ErrorCode::RankMismatch, "composing permutations of different ranks");
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i] - 1];
  return out;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int length = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(p[j] - 1);
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition(std::move(lengths));
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& coeff) {
  if (static_cast<int>(p.size()) != n_)
    fail(ErrorCode::RankMismatch, "permutation length differs from rank " +
                                      std::to_string(n_));
  std::vector<bool> seen(n_, false);
  for (int value : p) {
    if (value < 1 || value > n_ || seen[value - 1])
      fail(ErrorCode::RankMismatch,
           perm_to_string(p) + " is not a permutation of rank " +
               std::to_string(n_));
    seen[value - 1] = true;
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

namespace {

// Walks injective fillings of the boxes (row-major); at each leaf the rows
// act as the cycles of one permutation.
void enumerate_fillings(const std::vector<int>& rows, int n,
                        std::vector<int>& filling, std::size_t position,
                        unsigned used, GroupAlgebraElement& out) {
  if (position == filling.size()) {
    Permutation perm = identity_permutation(n);
    std::size_t box = 0;
    for (int length : rows) {
      for (int j = 0; j < length; ++j) {
        int from = filling[box + static_cast<std::size_t>(j)];
        int to = filling[box + static_cast<std::size_t>((j + 1) % length)];
        perm[from - 1] = to;
      }
      box += static_cast<std::size_t>(length);
    }
    out.add_term(perm, Rational(1));
    return;
  }
  for (int value = 1; value <= n; ++value) {
    unsigned bit = 1u << (value - 1);
    if (used & bit) continue;
    filling[position] = value;
    enumerate_fillings(rows, n, filling, position + 1, used | bit, out);
  }
}

}  // namespace

GroupAlgebraElement class_indicator(const Partition& pi, int n) {
  if (n > kRankBudget)
    fail(ErrorCode::RankBudget, "rank " + std::to_string(n) + " above budget " +
                                    std::to_string(kRankBudget));
  if (n < pi.size())
    fail(ErrorCode::RankTooSmall, "rank " + std::to_string(n) +
                                      " below box count of " + pi.to_string());
  GroupAlgebraElement out(n);
  std::vector<int> filling(static_cast<std::size_t>(pi.size()));
  enumerate_fillings(pi.parts(), n, filling, 0, 0u, out);
  return out;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b) {
  if (a.rank() != b.rank())
    fail(ErrorCode::RankMismatch, "convolving ranks " +
                                      std::to_string(a.rank()) + " and " +
                                      std::to_string(b.rank()));
  GroupAlgebraElement out(a.rank());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) out.add_term(compose(p, q), cp * cq);
  return out;
}

Report verify_delta_zero(Expander& expander, const Partition& pi,
                         const Partition& sigma, int n) {
  if (n > kRankBudget)
    fail(ErrorCode::RankBudget, "rank " + std::to_string(n) + " above budget " +
                                    std::to_string(kRankBudget));
  if (n < pi.size() + sigma.size())
    fail(ErrorCode::RankTooSmall,
         "rank " + std::to_string(n) + " below |pi| + |sigma| for " +
             pi.to_string() + ", " + sigma.to_string());

  Report report;
  report.check = "delta-zero-structure";
  report.parameters = {{"pi", pi.to_string()},
                       {"sigma", sigma.to_string()},
                       {"rank", n}};
  const std::string context = "A" + pi.to_string() + " A" + sigma.to_string() +
                              " at rank " + std::to_string(n);

  GroupAlgebraElement expected(n);
  for (const auto& [mu, poly] : expander.structure_coefficients(pi, sigma)) {
    Rational g0 = poly.coefficient(0);
    report.units.push_back({{"mu", mu.to_string()}, {"g0", g0.get_str()}});
    if (g0 == 0) continue;
    GroupAlgebraElement indicator = class_indicator(mu, n);
    for (const auto& [perm, coeff] : indicator.terms())
      expected.add_term(perm, coeff * g0);
  }

  GroupAlgebraElement product =
      convolve(class_indicator(pi, n), class_indicator(sigma, n));

  for (const auto& [perm, coeff] : product.terms())
    if (expected.coefficient(perm) != coeff)
      report.violations.push_back(
          context + ": coefficient of " + perm_to_string(perm) + " is " +
          coeff.get_str() + ", structure side gives " +
          expected.coefficient(perm).get_str());
  for (const auto& [perm, coeff] : expected.terms())
    if (product.coefficient(perm) == 0)
      report.violations.push_back(context + ": coefficient of " +
                                  perm_to_string(perm) +
                                  " is 0, structure side gives " +
                                  coeff.get_str());
  return report;
}

Report scan_delta_zero(Expander& expander, int max_size, int max_rank) {
  Report report;
  report.check = "delta-zero-structure-scan";
  report.parameters = {{"max_size", max_size}, {"max_rank", max_rank}};
  for_each_multiset(max_size, 2, 2, [&](const std::vector<Partition>& pair) {
    for (int n = pair[0].size() + pair[1].size(); n <= max_rank; ++n) {
      Report inner = verify_delta_zero(expander, pair[0], pair[1], n);
      report.units.push_back({{"pi", pair[0].to_string()},
                              {"sigma", pair[1].to_string()},
                              {"rank", n},
                              {"targets", inner.units.size()}});
      report.violations.insert(report.violations.end(),
                               inner.violations.begin(),
                               inner.violations.end());
    }
  });
  return report;
}

}  // namespace jackchar
