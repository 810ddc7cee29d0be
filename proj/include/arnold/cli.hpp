#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace arnold {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// (library operation, subcommand exposing it) for every public operation.
std::vector<std::pair<std::string, std::string>> cli_operation_map();

/// Names of the subcommands actually registered with the parser.
std::vector<std::string> cli_subcommands();

/// Parses "0.25", "-1e-3" or "1/4" into a double.
double parse_real(const std::string& text);

}  // namespace arnold
