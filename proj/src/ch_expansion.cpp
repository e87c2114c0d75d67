#include "jackchar/ch_expansion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jackchar/error.hpp"
#include "jackchar/linalg.hpp"

namespace jackchar {

namespace {

std::optional<Rational> try_parse_rational(const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const Error&) {
    return std::nullopt;
  }
}

int filtration_degree(int gamma_power, const Partition& mu) {
  return gamma_power + mu.size() + mu.length();
}

struct BasisElement {
  int gamma_power = 0;
  Partition mu;
};

// Parity-admissible basis elements of filtration degree <= bound, grouped by
// |mu| so each unknown enters the solve at its own size.
std::vector<std::vector<BasisElement>> basis_by_size(int bound,
                                                     std::optional<int> parity) {
  std::vector<std::vector<BasisElement>> by_size(std::max(bound + 1, 0));
  int parity_class = parity ? ((*parity % 2) + 2) % 2 : -1;
  for (int s = 0; s < static_cast<int>(by_size.size()); ++s) {
    for (const Partition& mu : partitions_of(s)) {
      int base = filtration_degree(0, mu);
      for (int p = 0; base + p <= bound; ++p) {
        if (parity_class >= 0 && (base + p) % 2 != parity_class) continue;
        by_size[s].push_back({p, mu});
      }
    }
  }
  return by_size;
}

}  // namespace

ChExpansion ChExpansion::ch(const Partition& mu) {
  ChExpansion out;
  out.add_term(mu, GammaPoly(Rational(1)));
  return out;
}

ChExpansion ChExpansion::constant(const Rational& value) {
  ChExpansion out;
  out.add_term(Partition(), GammaPoly(value));
  return out;
}

GammaPoly ChExpansion::gamma_poly(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? GammaPoly() : it->second;
}

void ChExpansion::add_term(const Partition& mu, const GammaPoly& poly) {
  if (poly.degree() < 0) return;
  auto [it, inserted] = terms_.emplace(mu, poly);
  if (!inserted) {
    it->second = it->second + poly;
    if (it->second.degree() < 0) terms_.erase(it);
  }
}

ChExpansion& ChExpansion::operator+=(const ChExpansion& other) {
  for (const auto& [mu, poly] : other.terms_) add_term(mu, poly);
  return *this;
}

ChExpansion& ChExpansion::operator-=(const ChExpansion& other) {
  for (const auto& [mu, poly] : other.terms_) add_term(mu, poly.scaled(Rational(-1)));
  return *this;
}

ChExpansion ChExpansion::operator+(const ChExpansion& other) const {
  ChExpansion out = *this;
  out += other;
  return out;
}

ChExpansion ChExpansion::operator-(const ChExpansion& other) const {
  ChExpansion out = *this;
  out -= other;
  return out;
}

ChExpansion ChExpansion::operator-() const { return scaled(Rational(-1)); }

ChExpansion ChExpansion::scaled(const Rational& factor) const {
  ChExpansion out;
  if (factor == 0) return out;
  for (const auto& [mu, poly] : terms_) out.terms_.emplace(mu, poly.scaled(factor));
  return out;
}

ChExpansion ChExpansion::scaled_by_gamma_power(int p) const {
  ChExpansion out;
  GammaPoly shift = GammaPoly::variable();
  GammaPoly factor(Rational(1));
  for (int i = 0; i < p; ++i) factor = factor * shift;
  for (const auto& [mu, poly] : terms_) out.terms_.emplace(mu, poly * factor);
  return out;
}

int ChExpansion::degree() const {
  int best = -1;
  for (const auto& [mu, poly] : terms_)
    best = std::max(best, filtration_degree(poly.degree(), mu));
  return best;
}

LaurentScalar ChExpansion::evaluate(JackTable& jack, const Partition& lambda) const {
  LaurentScalar total;
  for (const auto& [mu, poly] : terms_)
    total += substitute_gamma(poly) * ch_classical(jack, mu, lambda);
  return total;
}

std::string ChExpansion::serialize() const {
  std::ostringstream out;
  out << "chexp v1\n" << terms_.size() << "\n";
  for (const auto& [mu, poly] : terms_) {
    out << mu.to_string() << " " << poly.degree();
    for (int k = 0; k <= poly.degree(); ++k) out << " " << poly.coefficient(k).get_str();
    out << "\n";
  }
  return out.str();
}

std::optional<ChExpansion> ChExpansion::deserialize(const std::string& payload) {
  std::istringstream in(payload);
  std::string word, version;
  if (!(in >> word >> version) || word != "chexp" || version != "v1") return std::nullopt;
  long count = -1;
  if (!(in >> count) || count < 0) return std::nullopt;
  ChExpansion out;
  for (long i = 0; i < count; ++i) {
    std::string mu_text;
    int degree = -2;
    if (!(in >> mu_text >> degree) || degree < 0) return std::nullopt;
    Partition mu;
    try {
      mu = Partition::parse(mu_text);
    } catch (const Error&) {
      return std::nullopt;
    }
    std::vector<Rational> coeffs(degree + 1);
    for (int k = 0; k <= degree; ++k) {
      std::string token;
      if (!(in >> token)) return std::nullopt;
      auto value = try_parse_rational(token);
      if (!value) return std::nullopt;
      coeffs[k] = *value;
    }
    if (coeffs.back() == 0) return std::nullopt;
    GammaPoly poly = GammaPoly::from_coefficients(coeffs);
    if (out.terms_.count(mu) != 0) return std::nullopt;
    out.terms_.emplace(mu, poly);
  }
  in >> std::ws;
  if (!in.eof()) return std::nullopt;
  return out;
}

ChExpansion disjoint_multiply(const ChExpansion& a, const ChExpansion& b) {
  ChExpansion out;
  for (const auto& [mu_a, poly_a] : a.terms())
    for (const auto& [mu_b, poly_b] : b.terms())
      out.add_term(mu_a.concat(mu_b), poly_a * poly_b);
  return out;
}

ChExpansion Expander::expand(
    const std::function<LaurentScalar(const Partition&)>& evaluator,
    int degree_bound, std::optional<int> parity) {
  auto by_size = basis_by_size(degree_bound, parity);

  LaurentScalar gamma = gamma_as_laurent();
  std::vector<LaurentScalar> gamma_pow(std::max(degree_bound + 1, 1));
  gamma_pow[0] = LaurentScalar::from_int(1);
  for (int p = 1; p < static_cast<int>(gamma_pow.size()); ++p)
    gamma_pow[p] = gamma_pow[p - 1] * gamma;

  std::vector<BasisElement> solved_elems;
  std::vector<Rational> solved_vals;
  std::vector<BasisElement> pending;
  // Raw block equations, kept so the solver can be rebuilt over a widened
  // unknown set: old rows extend with zeros because later unknowns vanish on
  // the sizes those rows came from.
  std::vector<std::pair<std::vector<Rational>, Rational>> pending_eqs;
  IncrementalSolver solver(0);

  auto rebuild_solver = [&]() {
    solver = IncrementalSolver(static_cast<int>(pending.size()));
    for (auto& [row, rhs] : pending_eqs) {
      std::vector<Rational> padded = row;
      padded.resize(pending.size(), Rational(0));
      if (!solver.add_equation(std::move(padded), rhs))
        fail(ErrorCode::Inconsistent, "stored block equation became contradictory");
    }
  };

  auto consume_size = [&](int s) {
    if (s < static_cast<int>(by_size.size()) && !by_size[s].empty()) {
      for (const BasisElement& elem : by_size[s]) pending.push_back(elem);
      rebuild_solver();
    }
    for (const Partition& lambda : partitions_of(s)) {
      std::map<Partition, LaurentScalar> ch_values;
      auto ch_at = [&](const Partition& mu) -> const LaurentScalar& {
        auto it = ch_values.find(mu);
        if (it == ch_values.end())
          it = ch_values.emplace(mu, ch_classical(jack_, mu, lambda)).first;
        return it->second;
      };

      LaurentScalar residual = evaluator(lambda);
      for (std::size_t i = 0; i < solved_elems.size(); ++i) {
        if (solved_vals[i] == 0) continue;
        residual -= (gamma_pow[solved_elems[i].gamma_power] * ch_at(solved_elems[i].mu))
                        .scaled(solved_vals[i]);
      }

      if (pending.empty()) {
        if (!residual.is_zero())
          fail(ErrorCode::Inconsistent,
               "function leaves the basis span at lambda=" + lambda.to_string());
        continue;
      }

      std::vector<LaurentScalar> cols(pending.size());
      std::set<int> exponents;
      for (std::size_t j = 0; j < pending.size(); ++j) {
        cols[j] = gamma_pow[pending[j].gamma_power] * ch_at(pending[j].mu);
        for (const auto& [exp, coeff] : cols[j].coefficients()) exponents.insert(exp);
      }
      for (const auto& [exp, coeff] : residual.coefficients()) exponents.insert(exp);

      for (int exp : exponents) {
        std::vector<Rational> row(pending.size());
        for (std::size_t j = 0; j < pending.size(); ++j)
          row[j] = cols[j].coefficient_at(exp);
        Rational rhs = residual.coefficient_at(exp);
        if (!solver.add_equation(row, rhs))
          fail(ErrorCode::Inconsistent,
               "no consistent coefficients at lambda=" + lambda.to_string());
        pending_eqs.emplace_back(std::move(row), std::move(rhs));
      }
    }
    if (!pending.empty() && solver.determined()) {
      std::vector<Rational> values = solver.solution();
      for (std::size_t j = 0; j < pending.size(); ++j) {
        solved_elems.push_back(pending[j]);
        solved_vals.push_back(values[j]);
      }
      pending.clear();
      pending_eqs.clear();
      solver = IncrementalSolver(0);
    }
  };

  for (int s = 0; s <= degree_bound; ++s) consume_size(s);
  int last_consumed = std::max(degree_bound, -1);
  while (!pending.empty() && last_consumed < degree_bound + 4) consume_size(++last_consumed);
  if (!pending.empty())
    fail(ErrorCode::Underdetermined,
         "coefficients not pinned by sizes up to " + std::to_string(last_consumed));

  std::map<Partition, std::vector<Rational>> by_mu;
  for (std::size_t i = 0; i < solved_elems.size(); ++i) {
    if (solved_vals[i] == 0) continue;
    auto& coeffs = by_mu[solved_elems[i].mu];
    if (static_cast<int>(coeffs.size()) <= solved_elems[i].gamma_power)
      coeffs.resize(solved_elems[i].gamma_power + 1, Rational(0));
    coeffs[solved_elems[i].gamma_power] = solved_vals[i];
  }
  ChExpansion result;
  for (const auto& [mu, coeffs] : by_mu)
    result.add_term(mu, GammaPoly::from_coefficients(coeffs));

  for (int s = last_consumed + 1; s <= last_consumed + 2; ++s)
    for (const Partition& lambda : partitions_of(s))
      if (result.evaluate(jack_, lambda) != evaluator(lambda))
        fail(ErrorCode::VerifyFailure,
             "expansion disagrees with the function at lambda=" + lambda.to_string());

  return result;
}

const ChExpansion& Expander::product(const Partition& pi, const Partition& sigma) {
  std::pair<Partition, Partition> key =
      pi < sigma ? std::make_pair(pi, sigma) : std::make_pair(sigma, pi);
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;

  if (key.first.empty())
    return products_.emplace(key, ChExpansion::ch(key.second)).first->second;

  std::string cache_key =
      "chprod:v1:" + key.first.to_string() + "*" + key.second.to_string();
  if (auto payload = cache_.get(cache_key))
    if (auto parsed = ChExpansion::deserialize(*payload))
      return products_.emplace(key, std::move(*parsed)).first->second;

  int degree_bound = filtration_degree(0, key.first) + filtration_degree(0, key.second);
  ChExpansion result = expand(
      [&](const Partition& lambda) {
        return ch_classical(jack_, key.first, lambda) *
               ch_classical(jack_, key.second, lambda);
      },
      degree_bound, degree_bound % 2);
  cache_.put(cache_key, result.serialize());
  return products_.emplace(key, std::move(result)).first->second;
}

ChExpansion Expander::multiply(const ChExpansion& a, const ChExpansion& b) {
  ChExpansion out;
  for (const auto& [mu_a, poly_a] : a.terms()) {
    for (const auto& [mu_b, poly_b] : b.terms()) {
      const ChExpansion& base = product(mu_a, mu_b);
      GammaPoly weight = poly_a * poly_b;
      for (const auto& [mu, poly] : base.terms()) out.add_term(mu, poly * weight);
    }
  }
  return out;
}

std::map<Partition, DeltaPoly> Expander::structure_coefficients(
    const Partition& pi, const Partition& sigma) {
  std::map<Partition, DeltaPoly> out;
  for (const auto& [mu, poly] : product(pi, sigma).terms())
    out.emplace(mu, gamma_to_delta(poly));
  return out;
}

Report verify_leading_coefficient(Expander& expander, int max_size) {
  Report report;
  report.check = "structure-leading-coefficient";
  report.parameters = {{"max_size", max_size}};
  for (int total = 2; total <= max_size; ++total) {
    for (int a = 1; a + 1 <= total; ++a) {
      int b = total - a;
      if (b < a) break;
      for (const Partition& pi : partitions_of(a)) {
        for (const Partition& sigma : partitions_of(b)) {
          if (b == a && sigma < pi) continue;
          auto coeffs = expander.structure_coefficients(pi, sigma);
          Partition top = pi.concat(sigma);
          bool ok = coeffs.count(top) != 0 && coeffs.at(top) == DeltaPoly(Rational(1));
          report.units.push_back({{"pi", pi.to_string()},
                                  {"sigma", sigma.to_string()},
                                  {"coefficient",
                                   coeffs.count(top) ? coeffs.at(top).to_string("d") : "0"}});
          if (!ok)
            report.violations.push_back("top coefficient of " + pi.to_string() + "*" +
                                        sigma.to_string() + " is not 1");
        }
      }
    }
  }
  return report;
}

}  // namespace jackchar
