#pragma once

#include <string>
#include <vector>

#include "nabc/checks.hpp"

namespace nabc {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "nabc-report/1";

/// Exit statuses of the command line tool.
enum ExitCode { kExitPass = 0, kExitExpectation = 1, kExitParse = 2, kExitBound = 3 };

struct RunOptions {
  int jobs = 1;
  int max_group_order = 12;  // G in the suite grids
  int max_kernel_order = 6;  // N in the suite grids
  int max_index = 4;
  bool fallback_search = false;
};

/// The machine form never mentions timing or worker counts; the human form does.
struct Report {
  Json machine;
  std::string human;
  int exit_code = kExitPass;

  /// Two-space indented JSON with a trailing newline.
  std::string machine_text() const { return machine.dump(2) + "\n"; }
};

Report run_scenario(const Json& scenario, const RunOptions& options);
/// Reads and parses the file; unreadable or malformed JSON is a parse error.
Report run_scenario_file(const std::string& path, const RunOptions& options);

/// shapiro1, shapiro2-holt, prop-ext, sections-transport, anabelian, h1-sections,
/// abelian-shapiro, or all of them in that order.
const std::vector<std::string>& suite_names();
Report verify_suite(const std::string& name, const RunOptions& options);

/// Groups of order 2..max in the built-in grids, by order then name.
std::vector<FiniteGroup> grid_groups(int max_order);
std::vector<FiniteGroup> grid_kernels(int max_order);

}  // namespace nabc
