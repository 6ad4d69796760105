#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wspec::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_partial = 2,
    exit_usage = 64,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage text to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Rewrites `--opt -- value` into `--opt=value` so negative numbers can be
/// passed without the `=` form.
std::vector<std::string> merge_escaped_values(const std::vector<std::string>& args);

/// 10 significant digits, shortest form.
std::string format_number(double x);

/// Worker count: hardware concurrency, capped by SPECTRA_THREADS when set.
unsigned thread_budget();

} // namespace wspec::cli
