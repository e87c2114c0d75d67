#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace jackchar {

// Outcome of one verification suite. Contains only reproducible data: same
// inputs must serialize to identical bytes, so nothing time- or host-
// dependent belongs here.
struct Report {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<nlohmann::json> units;        // one record per verified unit
  std::vector<std::string> violations;      // human-readable failures

  bool pass() const { return violations.empty(); }
};

}  // namespace jackchar
