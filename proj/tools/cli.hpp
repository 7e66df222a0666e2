#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wsys::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kInputError = 2,
  kConfigError = 3,
};

enum class Format { Text, Json };

struct CliConfig {
  std::string command;  // eval, poly, colorings, map, survey, validate
  std::optional<std::string> graph_path;
  std::optional<std::string> algebra;
  std::optional<int> n;
  std::optional<int> max_v;
  bool allow_loops = true;
  bool labeled = false;
  unsigned jobs = 1;
  Format format = Format::Text;
};

int cmd_eval(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_poly(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_colorings(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_map(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_survey(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const CliConfig& config, std::ostream& out, std::ostream& err);

int execute(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs the
// command. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsys::cli
