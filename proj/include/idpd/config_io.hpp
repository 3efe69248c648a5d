#pragma once

#include <string>

#include <json.hpp>

#include "idpd/divisor.hpp"

namespace idpd {

// Config document format (JSON):
//
//   {
//     "name": "z6-s123",            // optional
//     "faithful": true,              // optional, default true
//     "group": { "free_rank": 0, "torsion": [6] },
//     "slots": [
//       { "class": [1], "count": 2 },          // coords: free first, then torsion
//       { "class": [2], "count": 1 },
//       { "class": [3], "count": "unbounded" }
//     ]
//   }
//
// Parse errors cite the offending key; syntax errors cite the byte position.
PrimeSpectrumConfig parse_config(const nlohmann::json& doc);
PrimeSpectrumConfig parse_config_text(const std::string& text);
PrimeSpectrumConfig load_config_file(const std::string& path);

nlohmann::json config_to_json(const PrimeSpectrumConfig& cfg);

// Render helpers shared by reports and the CLI.
nlohmann::json profile_to_json(const DivisorProfile& p);
DivisorProfile profile_from_json(const nlohmann::json& j);

} // namespace idpd
