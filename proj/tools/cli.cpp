#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifm/closed_form.hpp"
#include "ifm/errors.hpp"
#include "ifm/interferometer.hpp"
#include "ifm/monte_carlo.hpp"
#include "ifm/solver.hpp"

namespace ifm::cli {
namespace {

using nlohmann::json;

constexpr double kCrossCheckTolerance = 1e-10;

/// Round-trips through 12 significant digits so JSON and CSV agree.
double round_g12(double value) {
  const std::string text = format_g12(value);
  double rounded = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), rounded);
  return rounded;
}

json optional_number(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

struct EvalArgs {
  int n = 0;
  double eta = 0.0;
  std::optional<double> theta;
  std::string method = "product";
  std::string format = "json";
};

struct SweepArgs {
  std::vector<double> etas;
  int n_min = 1;
  int n_max = 1;
  int step = 1;
  std::optional<double> theta;
  std::string format = "csv";
};

struct SolveArgs {
  double eta = 0.0;
  double target = 0.0;
  int n_max = 1'000'000;
  std::optional<double> theta;
  std::string format = "json";
};

struct McArgs {
  int n = 0;
  double eta = 0.0;
  std::optional<double> theta;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::string format = "json";
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.method == "approx" && a.theta) {
    throw std::invalid_argument("--theta is not accepted with --method approx (it assumes theta = pi/(2n))");
  }
  const InterferometerConfig config(a.n, a.eta, a.theta);

  double p = 0.0;
  bool fallback = false;
  if (a.method == "product") {
    p = exact_success_probability_product(config);
  } else if (a.method == "closed") {
    const ClosedFormResult r = closed_form_success_probability(config);
    p = r.probability;
    fallback = r.fallback_used;
  } else {
    p = approx_success_probability(a.n, a.eta);
  }

  if (a.format == "csv") {
    out << "n,eta,theta,method,p_success,fallback_used\n"
        << a.n << ',' << format_g12(a.eta) << ',' << format_g12(config.theta()) << ',' << a.method
        << ',' << format_g12(p) << ',' << (fallback ? "true" : "false") << '\n';
  } else {
    const json record = {{"n", a.n},          {"eta", a.eta},          {"theta", config.theta()},
                         {"method", a.method}, {"p_success", p}, {"fallback_used", fallback}};
    out << record.dump() << '\n';
  }
  return kOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<SweepRow> rows = sweep_rows(a.etas, a.n_min, a.n_max, a.step, a.theta);

  for (const SweepRow& row : rows) {
    if (!(std::abs(row.p_exact - row.p_closed) <= kCrossCheckTolerance)) {
      err << "error: cross-check failed at n=" << row.n << " eta=" << format_g12(row.eta)
          << ": |p_exact - p_closed| = " << std::abs(row.p_exact - row.p_closed) << '\n';
      return kCrossCheckFailed;
    }
  }

  if (a.format == "json") {
    json table = json::array();
    for (const SweepRow& row : rows) {
      std::optional<double> approx;
      if (row.p_approx) approx = round_g12(*row.p_approx);
      table.push_back({{"n", row.n},
                       {"eta", round_g12(row.eta)},
                       {"p_exact", round_g12(row.p_exact)},
                       {"p_closed", round_g12(row.p_closed)},
                       {"p_approx", optional_number(approx)}});
    }
    out << table.dump() << '\n';
    return kOk;
  }

  out << "n,eta,p_exact,p_closed,p_approx\n";
  for (const SweepRow& row : rows) {
    out << row.n << ',' << format_g12(row.eta) << ',' << format_g12(row.p_exact) << ','
        << format_g12(row.p_closed) << ',' << (row.p_approx ? format_g12(*row.p_approx) : "null")
        << '\n';
  }
  return kOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  if (a.theta) {
    throw std::invalid_argument("--theta is not accepted by solve (theta is tied to pi/(2n))");
  }
  const DesignQuery query{a.eta, a.target, a.n_max};
  MinSplitters result;
  try {
    result = min_beam_splitters(query);
  } catch (const NotReachable& e) {
    err << "error: " << e.what() << "; best n=" << e.best_n() << " with p=" << format_g12(e.best_p())
        << '\n';
    return kNotReachable;
  }

  if (a.format == "csv") {
    out << "eta,target,n_min,p_at_n_min,p_at_n_min_minus_1\n"
        << format_g12(a.eta) << ',' << format_g12(a.target) << ',' << result.n << ','
        << format_g12(result.p_at_n) << ','
        << (result.p_at_n_minus_1 ? format_g12(*result.p_at_n_minus_1) : "null") << '\n';
  } else {
    const json record = {{"eta", a.eta},
                         {"target", a.target},
                         {"n_min", result.n},
                         {"p_at_n_min", result.p_at_n},
                         {"p_at_n_min_minus_1", optional_number(result.p_at_n_minus_1)}};
    out << record.dump() << '\n';
  }
  return kOk;
}

int cmd_mc(const McArgs& a, std::ostream& out) {
  const InterferometerConfig config(a.n, a.eta, a.theta);
  const EstimateReport report = estimate_probabilities(config, a.trials, a.seed, a.workers);
  const double p_exact = exact_success_probability_product(config);

  std::optional<double> z_score;
  if (report.p_detect_b.std_error > 0.0) {
    z_score = (report.p_detect_b.value - p_exact) / report.p_detect_b.std_error;
  } else if (std::abs(report.p_detect_b.value - p_exact) <= kProbabilityRoundoff) {
    z_score = 0.0;
  }

  if (a.format == "csv") {
    out << "n,eta,theta,trials,seed,p_detect_b,se_detect_b,p_detect_a,se_detect_a,p_absorbed,"
           "se_absorbed,p_exact,z_score\n"
        << a.n << ',' << format_g12(a.eta) << ',' << format_g12(config.theta()) << ','
        << report.trials << ',' << report.seed << ',' << format_g12(report.p_detect_b.value) << ','
        << format_g12(report.p_detect_b.std_error) << ',' << format_g12(report.p_detect_a.value)
        << ',' << format_g12(report.p_detect_a.std_error) << ','
        << format_g12(report.p_absorbed.value) << ',' << format_g12(report.p_absorbed.std_error)
        << ',' << format_g12(p_exact) << ',' << (z_score ? format_g12(*z_score) : "null") << '\n';
    return kOk;
  }

  auto estimate = [](const Estimate& e) { return json{{"value", e.value}, {"std_error", e.std_error}}; };
  const json record = {
      {"n", a.n},
      {"eta", a.eta},
      {"theta", config.theta()},
      {"trials", report.trials},
      {"seed", report.seed},
      {"p_detect_b", estimate(report.p_detect_b)},
      {"p_detect_a", estimate(report.p_detect_a)},
      {"p_absorbed", estimate(report.p_absorbed)},
      {"counts", {{"detected_b", report.count_b},
                  {"detected_a", report.count_a},
                  {"absorbed", report.count_absorbed}}},
      {"p_exact", p_exact},
      {"z_score", optional_number(z_score)},
  };
  out << record.dump() << '\n';
  return kOk;
}

}  // namespace

std::string format_g12(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::vector<SweepRow> sweep_rows(const std::vector<double>& etas, int n_min, int n_max, int step,
                                 std::optional<double> theta) {
  if (etas.empty()) {
    throw std::invalid_argument("--eta-list must not be empty");
  }
  if (n_min < 1 || n_max < n_min) {
    throw std::invalid_argument("need 1 <= n-min <= n-max");
  }
  if (step < 1) {
    throw std::invalid_argument("--step must be >= 1");
  }
  for (double eta : etas) {
    validate_eta(eta);
  }

  std::vector<SweepRow> rows;
  for (double eta : etas) {
    for (int n = n_min; n <= n_max; n += step) {
      const InterferometerConfig config(n, eta, theta);
      SweepRow row;
      row.n = n;
      row.eta = eta;
      row.p_exact = exact_success_probability_product(config);
      row.p_closed = closed_form_success_probability(config).probability;
      if (eta < 1.0) {
        row.p_approx = approx_success_probability(n, eta);
      }
      rows.push_back(row);
      if (n > n_max - step) break;
    }
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Success probability of interaction-free measurement with an imperfect absorber"};
  app.name("ifm");
  app.require_subcommand(1);

  const std::vector<std::string> methods{"product", "closed", "approx"};
  const std::vector<std::string> formats{"csv", "json"};

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate P(N, eta) with one method");
  eval_cmd->add_option("--n", eval.n, "Number of beam splitters")->required();
  eval_cmd->add_option("--eta", eval.eta, "Probability the object fails to absorb")->required();
  eval_cmd->add_option("--theta", eval.theta, "Splitter angle in radians (default pi/(2n))");
  eval_cmd->add_option("--method", eval.method, "product | closed | approx")
      ->check(CLI::IsMember(methods));
  eval_cmd->add_option("--format", eval.format, "json | csv")->check(CLI::IsMember(formats));

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate P over a grid of N and eta");
  sweep_cmd->add_option("--eta-list", sweep.etas, "Comma-separated eta values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--n-min", sweep.n_min, "Smallest N")->required();
  sweep_cmd->add_option("--n-max", sweep.n_max, "Largest N")->required();
  sweep_cmd->add_option("--step", sweep.step, "N increment");
  sweep_cmd->add_option("--theta", sweep.theta, "Fixed splitter angle for every row");
  sweep_cmd->add_option("--format", sweep.format, "csv | json")->check(CLI::IsMember(formats));

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Fewest splitters reaching a target P");
  solve_cmd->add_option("--eta", solve.eta, "Probability the object fails to absorb")->required();
  solve_cmd->add_option("--target", solve.target, "Target success probability")->required();
  solve_cmd->add_option("--n-max", solve.n_max, "Search cap");
  solve_cmd->add_option("--theta", solve.theta, "Rejected: theta is tied to pi/(2n)");
  solve_cmd->add_option("--format", solve.format, "json | csv")->check(CLI::IsMember(formats));

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo trajectory estimate");
  mc_cmd->add_option("--n", mc.n, "Number of beam splitters")->required();
  mc_cmd->add_option("--eta", mc.eta, "Probability the object fails to absorb")->required();
  mc_cmd->add_option("--theta", mc.theta, "Splitter angle in radians (default pi/(2n))");
  mc_cmd->add_option("--trials", mc.trials, "Number of trajectories")
      ->required()
      ->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", mc.seed, "Master seed")->required();
  mc_cmd->add_option("--workers", mc.workers, "Threads (0 = all cores); does not affect output");
  mc_cmd->add_option("--format", mc.format, "json | csv")->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);  // --help
    }
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out, err);
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*mc_cmd) return cmd_mc(mc, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
  return kBadArguments;
}

}  // namespace ifm::cli
