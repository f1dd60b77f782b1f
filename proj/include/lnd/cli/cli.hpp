#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lnd/cases/report.hpp"

namespace lnd::cli {

enum ExitCode : int { kSuccess = 0, kUserError = 1, kInternalError = 2 };

/// JSON report, schemaVersion "1":
///   {schemaVersion, checks: [{name, status, detail, elapsedMs}],
///    errata: [{location, printed, computed, note}], summary: {pass, fail, errata}}
/// elapsedMs is 0 unless `timings` is set, which keeps the output byte-stable.
nlohmann::ordered_json report_to_json(const VerificationReport& report, bool timings);

std::string report_to_text(const VerificationReport& report, bool timings);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lnd::cli
