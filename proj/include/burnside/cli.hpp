#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "burnside/factorizer.hpp"
#include "burnside/pipeline.hpp"

namespace burnside::cli {

enum class Command { Info, Subgroups, Marks, Multable, Chartable, Irreps, BasicDegrees, Units, Factor, Degree, Verify };
enum class Format { Text, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;
inline constexpr int kExitCounterexample = 3;

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  std::string group_spec;
  Command command = Command::Info;
  Format format = Format::Text;
  std::optional<std::string> out_path;
  PipelineCaps caps;
  std::optional<std::string> coeffs;  // factor
  std::optional<std::string> mu;      // degree
  std::optional<std::string> blocks;  // degree, path to the blocks JSON file
  bool min_weight = false;            // factor: lightest mu instead of free-variables-zero
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::string document;  // what was written to stdout or out_path
  std::string error;     // one line "error: <Kind>: <message>" when exit_code != 0
};

/// Executes one command. Never throws; failures map to exit codes.
RunOutcome run(const RunConfig& config);

/// Parses argv (subcommand first) and runs. Usage errors exit with 1.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

/// Comma-separated integers, e.g. "1,-2,0,1".
std::vector<std::int64_t> parse_int_list(std::string_view text);

/// The verify document: {"group", "N", "r", "units", "rank_D_mod2", "results", "status"}.
nlohmann::json report_json(const VerificationReport& report);

}  // namespace burnside::cli
