#pragma once

#include <string>
#include <vector>

#include "exgeo/json_io.hpp"

namespace exgeo {

/// Outcome of one CLI invocation. exit codes: 0 ok, 1 check failed,
/// 2 usage error, 3 input error.
struct CommandResult {
  std::string status;  // "ok" | "failed" | "error"
  Json payload;
  int exit_code = 0;
  std::string format = "json";  // requested rendering
};

/// Routes a full argv (without the program name) to the library operations.
/// Never throws; failures are encoded in the result.
CommandResult dispatch(const std::vector<std::string>& argv);

/// Stable serialization of a result; format is "json" or "markdown".
std::string emit_report(const CommandResult& result, const std::string& format);

}  // namespace exgeo
