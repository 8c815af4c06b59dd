#include "homrep/report.hpp"

#include <json.hpp>
#include <sstream>

namespace homrep {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Flagged:
      return "flagged";
  }
  return "?";
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + ": " + copy.name;
    checks.push_back(std::move(copy));
  }
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["command"] = report.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["status"] = status_name(c.status);
      jc["expected"] = c.expected;
      jc["actual"] = c.actual;
      jc["anchor"] = c.anchor;
      j["checks"].push_back(jc);
    }
    j["timing_ms"] = report.timing_ms;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "command: " << report.command << "\n";
  for (const auto& [k, v] : report.params) os << "  " << k << " = " << v << "\n";
  size_t name_w = 4;
  for (const auto& c : report.checks) name_w = std::max(name_w, c.name.size());
  for (const auto& c : report.checks) {
    os << "  " << c.name;
    os << std::string(name_w - c.name.size() + 2, ' ');
    os << "[" << status_name(c.status) << "]";
    if (!c.expected.empty() || !c.actual.empty())
      os << "  expected: " << c.expected << "  actual: " << c.actual;
    os << "\n";
  }
  os << "checks: " << report.checks.size() << ", failures: " << report.failures()
     << " (" << report.timing_ms << " ms)\n";
  return os.str();
}

}  // namespace homrep
