#pragma once

// JSON form of a VerifyReport:
//   {"identity": "EQ23", "n": 4, "passed": false,
//    "witnesses": [{"point": "lambda=0,mu=1", "lhs": "12", "rhs": "13"}]}
// Integers are decimal strings since they outgrow 64 bits quickly.

#include <umbral/identities.hpp>

#include <json.hpp>

namespace umbral {

nlohmann::json to_json(const VerifyReport& report);
/// Throws std::invalid_argument on a malformed document.
VerifyReport report_from_json(const nlohmann::json& doc);

}  // namespace umbral
