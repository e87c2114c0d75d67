#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "jackchar/ch_expansion.hpp"
#include "jackchar/laurent.hpp"
#include "jackchar/partition.hpp"
#include "jackchar/poly.hpp"
#include "jackchar/report.hpp"

namespace jackchar {

// Canonical text and JSON forms for the CLI. Every renderer emits terms in
// the Partition order (size, then lexicographic), so equal values always
// produce identical bytes regardless of how they were computed.

// Linear combination of power sums: "p[1,1] + a*p[2]". Coefficients are
// polynomials in a (alpha); compound coefficients are parenthesized, the
// empty index renders as a bare coefficient, the empty map as "0".
std::string render_powersum(const std::map<Partition, AlphaPoly>& expansion);

// One record per index: {"pi": [parts], "coeff": [c0, c1, ...]} with the
// alpha coefficients ascending by exponent, serialized as exact strings.
nlohmann::json powersum_to_json(const std::map<Partition, AlphaPoly>& expansion);

// Header "pi,coeff", one row per index, coefficient in the text form above.
std::string powersum_to_csv(const std::map<Partition, AlphaPoly>& expansion);

// Laurent polynomial in A via its own text form, e.g. "2*A^1".
std::string render_laurent(const LaurentScalar& value);

// Records {"k": exponent, "coeff": "..."} ascending by exponent.
nlohmann::json laurent_to_json(const LaurentScalar& value);

// Header "k,coeff", one row per exponent, ascending.
std::string laurent_to_csv(const LaurentScalar& value);

// Linear combination over {Ch_mu} with coefficients polynomial in d
// (delta): "6*Ch[2,1] + 6*d*Ch[3] + 6*Ch[4] + Ch[3,2]". The empty index
// renders as a bare coefficient, the empty map as "0".
std::string render_structure(const std::map<Partition, DeltaPoly>& rows);

// One record per index: {"mu": [parts], "g": [c0, c1, ...]} with the delta
// coefficients ascending by exponent.
nlohmann::json structure_to_json(const std::map<Partition, DeltaPoly>& rows);

// Header "mu,g", one row per index.
std::string structure_to_csv(const std::map<Partition, DeltaPoly>& rows);

// A ChExpansion in the same delta-coefficient text form as
// render_structure; gamma powers are rewritten via gamma = -delta.
std::string render_ch_expansion(const ChExpansion& expansion);

// Flat records {"p": gamma power, "mu": [parts], "coeff": "..."}, indices
// ascending, powers ascending within an index, zero coefficients omitted.
nlohmann::json ch_expansion_to_json(const ChExpansion& expansion);

// Header "p,mu,coeff" over the same records.
std::string ch_expansion_to_csv(const ChExpansion& expansion);

// One JSON object per line: a header {"check", "parameters"}, then every
// unit as {"unit": ...}, every violation as {"violation": ...}, and a
// summary {"pass", "units", "violations"}. Each line ends with '\n'.
std::string report_to_json_lines(const Report& report);

// Header "kind,detail"; one row per header field, unit, and violation,
// detail fields quoted when they contain commas or quotes.
std::string report_to_csv(const Report& report);

// Human-readable block: check name, parameters, unit count, violations,
// and a final "result: PASS|FAIL" line.
std::string report_to_pretty(const Report& report);

}  // namespace jackchar
