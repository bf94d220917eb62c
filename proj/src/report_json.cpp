#include <umbral/report_json.hpp>

#include <stdexcept>

namespace umbral {

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"point", w.point}, {"lhs", to_string(w.lhs)}, {"rhs", to_string(w.rhs)}});
  }
  return {{"identity", std::string(identity_name(report.identity))},
          {"n", report.n},
          {"passed", report.passed},
          {"witnesses", std::move(witnesses)}};
}

VerifyReport report_from_json(const nlohmann::json& doc) {
  try {
    auto id = identity_from_name(doc.at("identity").get<std::string>());
    if (!id) throw std::invalid_argument("unknown identity in report");
    VerifyReport report{*id, doc.at("n").get<long>(), doc.at("passed").get<bool>(), {}};
    for (const auto& w : doc.at("witnesses")) {
      report.witnesses.push_back({w.at("point").get<std::string>(),
                                  parse_int(w.at("lhs").get<std::string>()),
                                  parse_int(w.at("rhs").get<std::string>())});
    }
    if (report.passed != report.witnesses.empty()) {
      throw std::invalid_argument("report 'passed' disagrees with its witnesses");
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace umbral
