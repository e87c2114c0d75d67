#include "jackchar/jack.hpp"

#include <exception>
#include <sstream>
#include <utility>

#include "jackchar/error.hpp"
#include "jackchar/linalg.hpp"
#include "jackchar/parallel.hpp"
#include "jackchar/powersum_basis.hpp"

namespace jackchar {

namespace {

// theta samples at one alpha: theta[lambda index][pi index] over
// partitions_of(n) order.
std::vector<std::vector<Rational>> theta_samples_at(int n, long alpha) {
  const PowersumTables& t = powersum_tables(n);
  int P = static_cast<int>(t.parts.size());

  // Inner product weights in the p basis: z_pi * alpha^{len(pi)}.
  std::vector<Integer> w(P);
  for (int i = 0; i < P; ++i) {
    Integer a = 1;
    for (int q = 0; q < t.parts[i].length(); ++q) a *= alpha;
    w[i] = t.parts[i].z_factor() * a;
  }

  // Gram-Schmidt in ascending dominance (index P-1 down to 0). Vectors are
  // p-basis integer arrays with an irrelevant overall scale; content
  // reduction keeps entries small.
  std::vector<std::vector<Integer>> vecs(P);
  std::vector<Integer> norms(P);
  for (int step = P - 1; step >= 0; --step) {
    Integer den = 1;
    for (int j = 0; j < P; ++j)
      den = lcm(den, Integer(t.m_in_p[step][j].get_den()));
    std::vector<Integer> u(P);
    for (int j = 0; j < P; ++j)
      u[j] = Integer(t.m_in_p[step][j].get_num()) *
             (den / Integer(t.m_in_p[step][j].get_den()));

    for (int prev = P - 1; prev > step; --prev) {
      const auto& v = vecs[prev];
      Integer dot = 0;
      for (int k = 0; k < P; ++k)
        if (u[k] != 0 && v[k] != 0) dot += w[k] * u[k] * v[k];
      if (dot == 0) continue;
      Integer g = gcd(dot, norms[prev]);
      Integer dot_r = dot / g, norm_r = norms[prev] / g;
      Integer content = 0;
      for (int k = 0; k < P; ++k) {
        u[k] = u[k] * norm_r - dot_r * v[k];
        if (u[k] != 0) content = gcd(content, u[k]);
      }
      if (content > 1)
        for (int k = 0; k < P; ++k) u[k] /= content;
    }
    Integer norm = 0;
    for (int k = 0; k < P; ++k)
      if (u[k] != 0) norm += w[k] * u[k] * u[k];
    vecs[step] = std::move(u);
    norms[step] = std::move(norm);
  }

  int ones_index = P - 1;  // partition [1^n] comes last
  std::vector<std::vector<Rational>> theta(P, std::vector<Rational>(P));
  for (int lam = 0; lam < P; ++lam) {
    const Integer& scale = vecs[lam][ones_index];
    if (scale == 0)
      fail(ErrorCode::NormalizationFailure,
           "p_{1^n} coefficient vanished for lambda=" + t.parts[lam].to_string() +
               " at alpha=" + std::to_string(alpha));
    for (int pi = 0; pi < P; ++pi) {
      Rational r(vecs[lam][pi], scale);
      r.canonicalize();
      theta[lam][pi] = std::move(r);
    }
  }
  return theta;
}

std::string serialize_table(int n, const std::vector<std::vector<AlphaPoly>>& table) {
  std::ostringstream out;
  out << n << ' ' << table.size() << '\n';
  for (const auto& row : table)
    for (const AlphaPoly& poly : row) {
      out << poly.degree();
      for (int k = 0; k <= poly.degree(); ++k)
        out << ' ' << to_string(poly.coefficient(k));
      out << '\n';
    }
  return out.str();
}

bool deserialize_table(const std::string& payload, int n,
                       std::vector<std::vector<AlphaPoly>>* table) {
  std::istringstream in(payload);
  int stored_n = -1;
  size_t P = 0;
  if (!(in >> stored_n >> P) || stored_n != n) return false;
  if (P != partitions_of(n).size()) return false;
  table->assign(P, std::vector<AlphaPoly>(P));
  std::string token;
  for (size_t i = 0; i < P; ++i)
    for (size_t j = 0; j < P; ++j) {
      int degree;
      if (!(in >> degree) || degree < -1 || degree > n) return false;
      std::vector<Rational> coeffs(degree + 1);
      for (int k = 0; k <= degree; ++k) {
        if (!(in >> token)) return false;
        try {
          coeffs[k] = parse_rational(token);
        } catch (const Error&) {
          return false;
        }
      }
      if (degree >= 0 && coeffs.back() == 0) return false;
      (*table)[i][j] = AlphaPoly::from_coefficients(std::move(coeffs));
    }
  in >> std::ws;
  return in.eof();
}

}  // namespace

std::vector<std::vector<AlphaPoly>> JackTable::build_table(int n, bool parallel) {
  powersum_tables(n);  // shared tables ready before any worker needs them
  int samples = n + 2;  // n+1 to interpolate degree <= n, one to verify
  std::vector<std::vector<std::vector<Rational>>> per_alpha(samples);
  std::vector<std::exception_ptr> errors(samples);
  auto job = [&](int s) {
    try {
      per_alpha[s] = theta_samples_at(n, s + 1);
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  if (parallel)
    parallel_for(samples, job);
  else
    serial_for(samples, job);
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);

  int P = static_cast<int>(partitions_of(n).size());
  std::vector<Rational> xs(samples);
  for (int s = 0; s < samples; ++s) xs[s] = s + 1;
  std::vector<std::vector<AlphaPoly>> table(P, std::vector<AlphaPoly>(P));
  std::vector<Rational> ys(samples);
  for (int lam = 0; lam < P; ++lam)
    for (int pi = 0; pi < P; ++pi) {
      for (int s = 0; s < samples; ++s) ys[s] = per_alpha[s][lam][pi];
      table[lam][pi] = AlphaPoly::from_coefficients(interpolate_poly(xs, ys, n));
    }
  return table;
}

const std::vector<std::vector<AlphaPoly>>& JackTable::table(int n) {
  if (n < 0) fail(ErrorCode::UnsupportedPartition, "negative size");
  if (n > budget_)
    fail(ErrorCode::BudgetExceeded,
         "size " + std::to_string(n) + " above budget " + std::to_string(budget_));
  auto it = tables_.find(n);
  if (it != tables_.end()) return it->second;

  std::string key = "theta-table:v1:n=" + std::to_string(n);
  if (auto payload = cache_.get(key)) {
    std::vector<std::vector<AlphaPoly>> loaded;
    if (deserialize_table(*payload, n, &loaded))
      return tables_.emplace(n, std::move(loaded)).first->second;
  }
  auto built = build_table(n, true);
  cache_.put(key, serialize_table(n, built));
  return tables_.emplace(n, std::move(built)).first->second;
}

const AlphaPoly& JackTable::theta(const Partition& pi, const Partition& lambda) {
  if (pi.size() != lambda.size())
    fail(ErrorCode::SizeMismatch,
         "theta needs |pi| == |lambda|, got " + pi.to_string() + " vs " +
             lambda.to_string());
  const auto& tab = table(lambda.size());
  const PowersumTables& t = powersum_tables(lambda.size());
  return tab[t.index.at(lambda)][t.index.at(pi)];
}

std::map<Partition, AlphaPoly> JackTable::jack_in_p_basis(const Partition& lambda) {
  const auto& tab = table(lambda.size());
  const PowersumTables& t = powersum_tables(lambda.size());
  int row = t.index.at(lambda);
  std::map<Partition, AlphaPoly> out;
  for (size_t j = 0; j < t.parts.size(); ++j)
    if (!tab[row][j].is_zero()) out.emplace(t.parts[j], tab[row][j]);
  return out;
}

void JackTable::warm(int n) {
  for (int k = 0; k <= n; ++k) table(k);
}

}  // namespace jackchar
