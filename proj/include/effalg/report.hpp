#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "effalg/errors.hpp"

namespace effalg {

enum ExitCode : int { kExitOk = 0, kExitViolated = 1, kExitInput = 2, kExitBudget = 3 };

struct ReportOptions {
  bool machine = false;
  bool all_witnesses = false;
  long long budget = Budget::kDefault;
};

struct Report {
  int exit_code = kExitOk;
  std::string text;
};

/// Runs one command. For validate/classify/props/blocks/theorems/scan-joins/dot
/// `input` is `.ea` text, for `example` a builtin name, for `mvgen` a spec.
/// Never throws; every failure is mapped to an exit code.
Report run_command(std::string_view command, std::string_view input, const ReportOptions& options);

std::vector<std::string> command_names();

}  // namespace effalg
