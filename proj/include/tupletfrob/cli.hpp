#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tupletfrob::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Result of one command: the rendered text (stdout), diagnostics (stderr)
/// and the structured payload used for --format json.
struct OutputEnvelope {
  std::string command;
  nlohmann::json result;
  std::string format = "text";
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Parses and executes argv (without the program name).
OutputEnvelope run(const std::vector<std::string>& args);

}  // namespace tupletfrob::cli
