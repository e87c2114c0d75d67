#include "jackchar/powersum_basis.hpp"

#include <algorithm>
#include <mutex>

namespace jackchar {

namespace {

PowersumTables build_tables(int n) {
  PowersumTables t;
  t.n = n;
  t.parts = partitions_of(n);
  int P = static_cast<int>(t.parts.size());
  for (int i = 0; i < P; ++i) t.index[t.parts[i]] = i;

  // p_pi in the monomial basis, one power sum factor at a time.
  // Multiplying m_mu by p_k: for each distinct part u of mu (including 0),
  // move one u to u + k; the coefficient picks up the multiplicity of u + k
  // in the result.
  t.p_in_m.resize(P);
  for (int r = 0; r < P; ++r) {
    std::map<Partition, Integer> current{{Partition(), Integer(1)}};
    for (int k : t.parts[r].parts()) {
      std::map<Partition, Integer> next;
      for (const auto& [mu, c] : current) {
        std::vector<int> distinct = mu.parts();
        distinct.push_back(0);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int u : distinct) {
          std::vector<int> parts =
              (u > 0) ? mu.with_value_removed(u).parts() : mu.parts();
          parts.push_back(u + k);
          Partition nu(std::move(parts));
          next[nu] += c * nu.multiplicity(u + k);
        }
      }
      current = std::move(next);
    }
    for (const auto& [mu, c] : current) t.p_in_m[r][t.index.at(mu)] = c;
  }

  // m_lambda in the p basis by forward substitution: the support property
  // above makes row r depend only on rows c < r.
  t.m_in_p.assign(P, std::vector<Rational>(P, Rational(0)));
  for (int r = 0; r < P; ++r) {
    std::vector<Rational> acc(P, Rational(0));
    acc[r] = 1;  // p_{parts[r]}
    for (const auto& [c, coef] : t.p_in_m[r]) {
      if (c == r) continue;
      Rational f(coef);
      for (int j = 0; j < P; ++j)
        if (t.m_in_p[c][j] != 0) acc[j] -= f * t.m_in_p[c][j];
    }
    Rational diag(t.p_in_m[r].at(r));
    for (int j = 0; j < P; ++j)
      if (acc[j] != 0) acc[j] /= diag;
    t.m_in_p[r] = std::move(acc);
  }
  return t;
}

}  // namespace

const PowersumTables& powersum_tables(int n) {
  static std::mutex mutex;
  static std::map<int, PowersumTables> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, build_tables(n)).first;
  return it->second;
}

}  // namespace jackchar
