#include "jackchar/free_cumulants.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "jackchar/characters.hpp"
#include "jackchar/cumulants.hpp"
#include "jackchar/error.hpp"
#include "jackchar/linalg.hpp"
#include "jackchar/set_partition.hpp"

namespace jackchar {

namespace {

LaurentScalar corner_minimum(int row_length, int row_index) {
  // u = A * row_length - (row_index - 1) / A
  LaurentScalar u = LaurentScalar::monomial(Rational(row_length), 1);
  if (row_index > 1) u += LaurentScalar::monomial(Rational(1 - row_index), -1);
  return u;
}

LaurentScalar corner_maximum(int row_length, int row_index) {
  // u = A * row_length - row_index / A
  return LaurentScalar::monomial(Rational(row_length), 1) +
         LaurentScalar::monomial(Rational(-row_index), -1);
}

}  // namespace

CornerData corner_coordinates(const Partition& lambda) {
  CornerData out;
  int len = lambda.length();
  // Top-to-bottom rows give descending u; reverse at the end.
  for (int i = 1; i <= len + 1; ++i)
    if (i == 1 || lambda.part(i - 1) > lambda.part(i))
      out.minima.push_back(corner_minimum(lambda.part(i), i));
  for (int i = 1; i <= len; ++i)
    if (lambda.part(i) > lambda.part(i + 1))
      out.maxima.push_back(corner_maximum(lambda.part(i), i));
  std::reverse(out.minima.begin(), out.minima.end());
  std::reverse(out.maxima.begin(), out.maxima.end());
  return out;
}

TransitionMeasure transition_measure(const Partition& lambda) {
  CornerData corners = corner_coordinates(lambda);
  TransitionMeasure out;
  for (std::size_t i = 0; i < corners.minima.size(); ++i) {
    LaurentScalar numerator = LaurentScalar::from_int(1);
    for (const LaurentScalar& y : corners.maxima)
      numerator *= corners.minima[i] - y;
    LaurentScalar denominator = LaurentScalar::from_int(1);
    for (std::size_t j = 0; j < corners.minima.size(); ++j)
      if (j != i) denominator *= corners.minima[i] - corners.minima[j];
    if (denominator.is_zero())
      fail(ErrorCode::Degenerate,
           "coinciding minima in the corner data of " + lambda.to_string());
    out.atoms.emplace_back(corners.minima[i],
                           LaurentRational(numerator, denominator));
  }
  return out;
}

std::vector<LaurentScalar> moments(const TransitionMeasure& measure, int up_to) {
  std::vector<LaurentScalar> out;
  std::vector<LaurentScalar> powers(measure.atoms.size(),
                                    LaurentScalar::from_int(1));
  for (int j = 0; j <= up_to; ++j) {
    LaurentRational sum;
    for (std::size_t i = 0; i < measure.atoms.size(); ++i) {
      if (j > 0) powers[i] *= measure.atoms[i].first;
      sum = sum + measure.atoms[i].second * LaurentRational::from_laurent(powers[i]);
    }
    std::optional<LaurentScalar> reduced = sum.as_laurent();
    if (!reduced)
      fail(ErrorCode::NonPolynomial,
           "moment " + std::to_string(j) + " does not reduce to a Laurent polynomial");
    out.push_back(*reduced);
  }
  return out;
}

namespace {

struct CumulantCache {
  std::mutex mutex;
  // lambda -> [R_1, R_2, ...], extended on demand.
  std::map<Partition, std::vector<LaurentScalar>> by_diagram;
};

CumulantCache& cumulant_cache() {
  static CumulantCache cache;
  return cache;
}

void extend_cumulants(std::vector<LaurentScalar>& rs, const Partition& lambda,
                      int up_to) {
  std::vector<LaurentScalar> ms = moments(transition_measure(lambda), up_to);
  if (up_to >= 1 && !ms[1].is_zero())
    fail(ErrorCode::NormalizationFailure,
         "transition measure of " + lambda.to_string() +
             " is not centered: M_1 = " + ms[1].to_string());
  for (int n = static_cast<int>(rs.size()) + 1; n <= up_to; ++n) {
    LaurentScalar value = ms[n];
    for (const SetPartition& nu : noncrossing_partitions(n)) {
      if (nu.size() <= 1) continue;
      LaurentScalar prod = LaurentScalar::from_int(1);
      for (const std::vector<int>& block : nu)
        prod *= rs[block.size() - 1];
      value -= prod;
    }
    rs.push_back(value);
  }
}

}  // namespace

LaurentScalar free_cumulant(int k, const Partition& lambda) {
  if (k < 1)
    fail(ErrorCode::SizeMismatch, "cumulant order must be at least 1");
  CumulantCache& cache = cumulant_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  std::vector<LaurentScalar>& rs = cache.by_diagram[lambda];
  if (static_cast<int>(rs.size()) < k) extend_cumulants(rs, lambda, k);
  return rs[k - 1];
}

std::string KLMonomial::to_string() const {
  std::vector<std::string> factors;
  const std::vector<int>& parts = indices.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    std::string factor = "R" + std::to_string(parts[i]);
    if (j - i > 1) factor += "^" + std::to_string(j - i);
    factors.push_back(factor);
    i = j;
  }
  if (gamma_power > 0) {
    std::string factor = "g";
    if (gamma_power > 1) factor += "^" + std::to_string(gamma_power);
    factors.push_back(factor);
  }
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

void KLPolynomial::add_term(const KLMonomial& monomial, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(monomial, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

int KLPolynomial::degree() const {
  int best = -1;
  for (const auto& [monomial, coeff] : terms_)
    best = std::max(best, monomial.grade());
  return best;
}

LaurentScalar KLPolynomial::evaluate(const Partition& lambda) const {
  LaurentScalar total;
  LaurentScalar g = gamma_as_laurent();
  for (const auto& [monomial, coeff] : terms_) {
    LaurentScalar term = g.pow(monomial.gamma_power);
    for (int k : monomial.indices.parts()) term *= free_cumulant(k, lambda);
    total += term.scaled(coeff);
  }
  return total;
}

std::string KLPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [monomial, coeff] : terms_) {
    bool negative = coeff < 0;
    Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors = monomial.to_string();
    if (factors == "1")
      out += magnitude.get_str();
    else if (magnitude == 1)
      out += factors;
    else
      out += magnitude.get_str() + "*" + factors;
  }
  return out;
}

nlohmann::json KLPolynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [monomial, coeff] : terms_) {
    nlohmann::json entry;
    entry["gamma_power"] = monomial.gamma_power;
    entry["cumulant_indices"] = monomial.indices.parts();
    entry["coeff"] = coeff.get_str();
    out.push_back(entry);
  }
  return out;
}

KLPolynomial kerov_lassalle_solve(
    const std::function<LaurentScalar(const Partition&)>& evaluator,
    int degree_bound, std::optional<int> parity) {
  if (degree_bound < 0)
    fail(ErrorCode::SizeMismatch, "degree bound must be non-negative");

  std::vector<KLMonomial> basis;
  for (int s = 0; s <= degree_bound; ++s) {
    for (const Partition& indices : partitions_of(s)) {
      if (!indices.empty() && indices.parts().back() < 2) continue;
      for (int p = 0; p + s <= degree_bound; ++p) {
        if (parity && (p + s) % 2 != ((*parity % 2) + 2) % 2) continue;
        basis.push_back(KLMonomial{p, indices});
      }
    }
  }
  std::sort(basis.begin(), basis.end());
  const int unknowns = static_cast<int>(basis.size());

  std::vector<LaurentScalar> gamma_pow(degree_bound + 1);
  gamma_pow[0] = LaurentScalar::from_int(1);
  for (int p = 1; p <= degree_bound; ++p)
    gamma_pow[p] = gamma_pow[p - 1] * gamma_as_laurent();

  IncrementalSolver solver(unknowns);
  auto consume_size = [&](int size) {
    for (const Partition& lambda : partitions_of(size)) {
      std::vector<LaurentScalar> evals(unknowns);
      std::set<int> exponents;
      for (int j = 0; j < unknowns; ++j) {
        LaurentScalar value = gamma_pow[basis[j].gamma_power];
        for (int k : basis[j].indices.parts())
          value *= free_cumulant(k, lambda);
        for (const auto& [exp, coeff] : value.coefficients())
          exponents.insert(exp);
        evals[j] = std::move(value);
      }
      LaurentScalar target = evaluator(lambda);
      for (const auto& [exp, coeff] : target.coefficients())
        exponents.insert(exp);
      for (int exp : exponents) {
        std::vector<Rational> row(unknowns);
        for (int j = 0; j < unknowns; ++j) row[j] = evals[j].coefficient_at(exp);
        if (!solver.add_equation(std::move(row), target.coefficient_at(exp)))
          fail(ErrorCode::Inconsistent,
               "no polynomial of degree " + std::to_string(degree_bound) +
                   " matches the evaluation at " + lambda.to_string());
      }
    }
  };

  for (int size = 0; size <= degree_bound; ++size) consume_size(size);
  int last_consumed = degree_bound;
  while (!solver.determined() && last_consumed < degree_bound + 4)
    consume_size(++last_consumed);
  if (!solver.determined()) {
    std::string witness;
    for (int column : solver.free_columns()) {
      if (!witness.empty()) witness += ", ";
      witness += basis[column].to_string();
    }
    fail(ErrorCode::Underdetermined, "free monomials remain: " + witness);
  }

  std::vector<Rational> values = solver.solution();
  KLPolynomial result;
  for (int j = 0; j < unknowns; ++j) result.add_term(basis[j], values[j]);

  for (int size = last_consumed + 1; size <= last_consumed + 2; ++size)
    for (const Partition& lambda : partitions_of(size))
      if (result.evaluate(lambda) != evaluator(lambda))
        fail(ErrorCode::VerifyFailure,
             "held-out evaluation mismatch at " + lambda.to_string());
  return result;
}

Report verify_weight_normalization(int max_size) {
  Report report;
  report.check = "transition-weight-normalization";
  report.parameters = {{"max_size", max_size}};
  const LaurentRational one =
      LaurentRational::from_laurent(LaurentScalar::from_int(1));
  for (const Partition& lambda : partitions_up_to(max_size)) {
    TransitionMeasure measure = transition_measure(lambda);
    LaurentRational sum;
    for (const auto& [coordinate, weight] : measure.atoms) sum = sum + weight;
    report.units.push_back({{"lambda", lambda.to_string()},
                            {"atoms", measure.atoms.size()}});
    if (!(sum == one))
      report.violations.push_back("weights of " + lambda.to_string() +
                                  " do not sum to 1");
  }
  return report;
}

Report verify_cumulant_anchors(int max_size) {
  Report report;
  report.check = "free-cumulant-anchors";
  report.parameters = {{"max_size", max_size}};
  for (const Partition& lambda : partitions_up_to(max_size)) {
    LaurentScalar r1 = free_cumulant(1, lambda);
    LaurentScalar r2 = free_cumulant(2, lambda);
    report.units.push_back({{"lambda", lambda.to_string()},
                            {"r2", r2.to_string()}});
    if (!r1.is_zero())
      report.violations.push_back("R_1 of " + lambda.to_string() +
                                  " is " + r1.to_string());
    if (r2 != LaurentScalar::from_int(lambda.size()))
      report.violations.push_back("R_2 of " + lambda.to_string() +
                                  " is " + r2.to_string());
  }
  return report;
}

Report scan_kerov_lassalle_positivity(Expander& expander, int max_row) {
  Report report;
  report.check = "kerov-lassalle-positivity";
  report.parameters = {{"max", max_row}};
  JackTable& jack = expander.jack();

  auto audit = [&report](const std::string& label, const KLPolynomial& poly) {
    report.units.push_back({{"target", label},
                            {"terms", poly.terms().size()},
                            {"expansion", poly.to_string()}});
    for (const auto& [monomial, coeff] : poly.terms())
      if (coeff < 0 || !is_integer(coeff))
        report.violations.push_back(label + ": coefficient " + coeff.get_str() +
                                    " on " + monomial.to_string());
  };

  for (int k = 1; k <= max_row; ++k) {
    Partition pi(std::vector<int>{k});
    int degree = k + 1;
    KLPolynomial poly = kerov_lassalle_solve(
        [&jack, &pi](const Partition& lambda) {
          return ch_classical(jack, pi, lambda);
        },
        degree, degree % 2);
    audit("Ch " + pi.to_string(), poly);
  }

  for (int total = 2; total <= max_row; ++total) {
    for (const Partition& rows : partitions_of(total)) {
      if (rows.length() < 2) continue;
      std::vector<Partition> pis;
      int degree = 0;
      for (auto it = rows.parts().rbegin(); it != rows.parts().rend(); ++it) {
        pis.push_back(Partition(std::vector<int>{*it}));
        degree += *it + 1;
      }
      degree -= 2 * (rows.length() - 1);
      ChExpansion kappa = kappa_dot(expander, pis);
      Rational sign = rows.length() % 2 == 1 ? 1 : -1;
      KLPolynomial poly = kerov_lassalle_solve(
          [&jack, &kappa, &sign](const Partition& lambda) {
            return kappa.evaluate(jack, lambda).scaled(sign);
          },
          degree, degree % 2);
      audit("signed cumulant " + tuple_name(pis), poly);
    }
  }
  return report;
}

}  // namespace jackchar
