#ifndef VGEOM_TOOLS_CLI_HPP
#define VGEOM_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vgeom/report.hpp"

namespace vgeom::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kError = 3,
};

enum class Command { build_grassmannian, hyperplanes, veldkamp, polar, magic_line, verify_all };

struct RunConfig {
  Command command = Command::verify_all;
  int n = 7;
  std::optional<int> pivot;
  bool all_pivots = false;
  bool census = false;
  bool oracle = false;
  std::string what;
  std::string json_path;
  std::string dot_path;
};

/// Parses argv-style arguments (without the program name). Returns the exit
/// code to use on failure, after printing usage to `err`.
std::optional<RunConfig> parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                               int& exit_code);

/// Every acceptance check for G_2(7), grouped by criterion.
std::vector<Report> verify_all(int n);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse() followed by run().
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vgeom::cli

#endif  // VGEOM_TOOLS_CLI_HPP
