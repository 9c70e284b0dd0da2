#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ifm::cli {

/// Exit codes of the `ifm` tool.
enum ExitCode : int {
  kOk = 0,
  kCrossCheckFailed = 1,
  kBadArguments = 2,
  kNotReachable = 3,
};

/// One line of a parameter sweep.
struct SweepRow {
  int n = 0;
  double eta = 0.0;
  double p_exact = 0.0;
  double p_closed = 0.0;
  std::optional<double> p_approx;  // empty at eta = 1
};

/// Rows in eta-major order. theta, when given, replaces pi/(2n) for the
/// exact and closed columns.
std::vector<SweepRow> sweep_rows(const std::vector<double>& etas, int n_min, int n_max, int step,
                                 std::optional<double> theta = std::nullopt);

/// %.12g without locale dependence.
std::string format_g12(double value);

/// Runs one invocation (argv without the program name). Output goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifm::cli
