#include "jackchar/render.hpp"

namespace jackchar {

namespace {

// A coefficient with an inner sum needs parentheses before "*basis".
bool compound(const std::string& coeff) {
  return coeff.find(" + ") != std::string::npos || coeff.find(" - ") != std::string::npos;
}

// coeff * basis with unit coefficients elided; an empty basis stands for
// the constant term and renders as the bare (parenthesized if compound)
// coefficient.
std::string term_text(const std::string& coeff, const std::string& basis) {
  if (basis.empty()) return compound(coeff) ? "(" + coeff + ")" : coeff;
  if (coeff == "1") return basis;
  if (coeff == "-1") return "-" + basis;
  if (compound(coeff)) return "(" + coeff + ")*" + basis;
  return coeff + "*" + basis;
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (!term.empty() && term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

template <typename Tag>
nlohmann::json coefficient_array(const Poly<Tag>& poly) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : poly.coefficients()) coeffs.push_back(to_string(c));
  return coeffs;
}

// RFC-style quoting: wrap fields holding a comma or quote, double inner
// quotes.
std::string csv_field(const std::string& text) {
  if (text.find(',') == std::string::npos && text.find('"') == std::string::npos &&
      text.find('\n') == std::string::npos)
    return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_powersum(const std::map<Partition, AlphaPoly>& expansion) {
  std::string out;
  for (const auto& [pi, poly] : expansion) {
    if (poly == AlphaPoly()) continue;
    append_term(out, term_text(poly.to_string("a"), pi.empty() ? "" : "p" + pi.to_string()));
  }
  return out.empty() ? "0" : out;
}

nlohmann::json powersum_to_json(const std::map<Partition, AlphaPoly>& expansion) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [pi, poly] : expansion) {
    if (poly == AlphaPoly()) continue;
    records.push_back({{"pi", pi.parts()}, {"coeff", coefficient_array(poly)}});
  }
  return records;
}

std::string powersum_to_csv(const std::map<Partition, AlphaPoly>& expansion) {
  std::string out = "pi,coeff\n";
  for (const auto& [pi, poly] : expansion) {
    if (poly == AlphaPoly()) continue;
    out += csv_field(pi.to_string()) + "," + csv_field(poly.to_string("a")) + "\n";
  }
  return out;
}

std::string render_laurent(const LaurentScalar& value) { return value.to_string(); }

nlohmann::json laurent_to_json(const LaurentScalar& value) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [exponent, coeff] : value.coefficients())
    records.push_back({{"k", exponent}, {"coeff", to_string(coeff)}});
  return records;
}

std::string laurent_to_csv(const LaurentScalar& value) {
  std::string out = "k,coeff\n";
  for (const auto& [exponent, coeff] : value.coefficients())
    out += std::to_string(exponent) + "," + csv_field(to_string(coeff)) + "\n";
  return out;
}

std::string render_structure(const std::map<Partition, DeltaPoly>& rows) {
  std::string out;
  for (const auto& [mu, poly] : rows) {
    if (poly == DeltaPoly()) continue;
    append_term(out, term_text(poly.to_string("d"), mu.empty() ? "" : "Ch" + mu.to_string()));
  }
  return out.empty() ? "0" : out;
}

nlohmann::json structure_to_json(const std::map<Partition, DeltaPoly>& rows) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [mu, poly] : rows) {
    if (poly == DeltaPoly()) continue;
    records.push_back({{"mu", mu.parts()}, {"g", coefficient_array(poly)}});
  }
  return records;
}

std::string structure_to_csv(const std::map<Partition, DeltaPoly>& rows) {
  std::string out = "mu,g\n";
  for (const auto& [mu, poly] : rows) {
    if (poly == DeltaPoly()) continue;
    out += csv_field(mu.to_string()) + "," + csv_field(poly.to_string("d")) + "\n";
  }
  return out;
}

namespace {

std::map<Partition, DeltaPoly> delta_rows(const ChExpansion& expansion) {
  std::map<Partition, DeltaPoly> rows;
  for (const auto& [mu, poly] : expansion.terms()) rows.emplace(mu, gamma_to_delta(poly));
  return rows;
}

}  // namespace

std::string render_ch_expansion(const ChExpansion& expansion) {
  return render_structure(delta_rows(expansion));
}

nlohmann::json ch_expansion_to_json(const ChExpansion& expansion) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [mu, poly] : expansion.terms()) {
    for (int p = 0; p <= poly.degree(); ++p) {
      Rational c = poly.coefficient(p);
      if (c == 0) continue;
      records.push_back({{"p", p}, {"mu", mu.parts()}, {"coeff", to_string(c)}});
    }
  }
  return records;
}

std::string ch_expansion_to_csv(const ChExpansion& expansion) {
  std::string out = "p,mu,coeff\n";
  for (const auto& [mu, poly] : expansion.terms()) {
    for (int p = 0; p <= poly.degree(); ++p) {
      Rational c = poly.coefficient(p);
      if (c == 0) continue;
      out += std::to_string(p) + "," + csv_field(mu.to_string()) + "," +
             csv_field(to_string(c)) + "\n";
    }
  }
  return out;
}

std::string report_to_json_lines(const Report& report) {
  std::string out;
  nlohmann::json header = {{"check", report.check}, {"parameters", report.parameters}};
  out += header.dump() + "\n";
  for (const nlohmann::json& unit : report.units)
    out += nlohmann::json{{"unit", unit}}.dump() + "\n";
  for (const std::string& violation : report.violations)
    out += nlohmann::json{{"violation", violation}}.dump() + "\n";
  nlohmann::json summary = {{"pass", report.pass()},
                            {"units", report.units.size()},
                            {"violations", report.violations.size()}};
  out += summary.dump() + "\n";
  return out;
}

std::string report_to_csv(const Report& report) {
  std::string out = "kind,detail\n";
  out += "check," + csv_field(report.check) + "\n";
  out += "parameters," + csv_field(report.parameters.dump()) + "\n";
  for (const nlohmann::json& unit : report.units)
    out += "unit," + csv_field(unit.dump()) + "\n";
  for (const std::string& violation : report.violations)
    out += "violation," + csv_field(violation) + "\n";
  out += std::string("pass,") + (report.pass() ? "true" : "false") + "\n";
  return out;
}

std::string report_to_pretty(const Report& report) {
  std::string out = "check: " + report.check + "\n";
  out += "parameters: " + report.parameters.dump() + "\n";
  out += "units: " + std::to_string(report.units.size()) + "\n";
  for (const std::string& violation : report.violations) out += "violation: " + violation + "\n";
  out += std::string("result: ") + (report.pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace jackchar
