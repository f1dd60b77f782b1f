#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

namespace lnd {

enum class CheckStatus { pass, fail, errata };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
  std::chrono::nanoseconds elapsed{0};
};

/// A printed term that disagrees with the computed expansion.
struct ErrataEntry {
  std::string location;  // provenance label of the printed source
  std::string printed;   // canonical text of the printed term(s), "0" if absent
  std::string computed;  // canonical text of the computed term(s), "0" if absent
  std::string note;

  friend bool operator==(const ErrataEntry&, const ErrataEntry&) = default;
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  /// Errata entries plus checks whose status is errata.
  std::size_t errata = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<ErrataEntry> errata;

  /// Tallied from the lists on every call.
  ReportSummary summary() const;
  bool all_passed() const { return summary().fail == 0; }
};

}  // namespace lnd
