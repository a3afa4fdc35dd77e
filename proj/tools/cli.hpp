#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fstefan::cli {

enum class Command {
  eval_wright,
  eval_mainardi,
  solve_st1,
  solve_st2,
  equivalence,
  sweep_alpha,
  residual,
  greens_profile,
};

enum class OutputFormat { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
  Command command = Command::solve_st1;
  std::map<std::string, double> parameters;
  std::map<std::string, std::vector<double>> lists;
  std::map<std::string, std::string> choices;
  /// Unset means the command's default (csv for tables, json otherwise).
  std::optional<OutputFormat> output_format;
  std::optional<std::string> output_path;
  std::optional<double> tol_abs;
  std::optional<double> tol_rel;
  std::optional<int> max_terms;
};

/// Parses `frac-stefan <command> [options]`. Throws ValidationError on bad input.
RunConfig parse_arguments(int argc, const char* const* argv);

/// Executes the command. The artifact goes to config.output_path (written only
/// on success) or to `out`; failures print one JSON error object to `err`.
/// Returns 0, 2 (validation) or 3 (numerical failure).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_arguments + run, with parse failures reported like run() does.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fstefan::cli
