#ifndef HOMREP_REPORT_HPP
#define HOMREP_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace homrep {

enum class CheckStatus { Pass, Fail, Flagged };

/// One named check inside a verification run.  The anchor states the claim
/// being tested in mathematical terms, or "plumbing" for internal checks.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string actual;
  std::string anchor;
};

struct VerificationReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  long timing_ms = 0;

  void param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string name, bool pass, std::string expected, std::string actual,
           std::string anchor) {
    checks.push_back(Check{std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail,
                           std::move(expected), std::move(actual), std::move(anchor)});
  }
  void flag(std::string name, std::string expected, std::string actual,
            std::string anchor) {
    checks.push_back(Check{std::move(name), CheckStatus::Flagged, std::move(expected),
                           std::move(actual), std::move(anchor)});
  }
  void merge(const VerificationReport& other, const std::string& prefix = "");

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) ++n;
    return n;
  }
};

enum class ReportFormat { Json, Table };

/// Deterministic serialization; parsing the JSON output and re-serializing
/// it reproduces the same bytes.
std::string emit_report(const VerificationReport& report, ReportFormat format);

}  // namespace homrep

#endif
