#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgauge::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_config_error = 2,
    exit_numerical_abort = 3,
};

/// Runs the qgauge command line with `args` (program name excluded).
/// Regular output goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qgauge::cli
