#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "cisupport/cli/job.hpp"

namespace cisupport {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitParse = 2,
  kExitUnstable = 3,
  kExitCheckFailed = 4,
};

struct RunReport {
  nlohmann::ordered_json json;
  int exit_code = kExitOk;
  /// Lines for stderr (warnings).
  std::vector<std::string> warnings;
};

/// Runs the job's command. The report depends only on the job, so equal
/// jobs give equal bytes; timing is left to the caller.
RunReport run(const JobSpec& job, const std::function<void(const std::string&)>& progress = {});

/// Runs the built-in check suite (no job input needed).
RunReport run_check(std::uint64_t seed, const std::function<void(const std::string&)>& progress = {});

/// Matrix as row-major arrays of canonical polynomial strings.
nlohmann::ordered_json matrix_json(const PolyRing& Q, const PolyMatrix& m);

}  // namespace cisupport
