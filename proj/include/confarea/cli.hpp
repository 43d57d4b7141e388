#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace confarea {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int verification_failure = 1;
inline constexpr int usage = 2;
inline constexpr int parse = 3;
}  // namespace exit_code

enum class OutputFormat { csv, json };

/// One parsed invocation. Unknown flags are rejected by the parser before a
/// RunConfig exists.
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  OutputFormat output_format = OutputFormat::csv;
  std::optional<std::string> output_path;
};

/// Entry point of the `confarea` tool: subcommands area, ortho, interp, verify.
/// Writes results to `out` (or --output) and diagnostics to `err`; returns the
/// process exit code.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace confarea
