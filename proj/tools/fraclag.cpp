// Command-line front end: experiment tables as CSV and resolvent application
// to user-supplied operators.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fraclag/experiments.hpp"

namespace {

using namespace fraclag;

// Bad flag values; reported with exit code 2 like parser errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemFlags {
  std::string alpha = "0.5";
  std::string h = "0.01";

  void attach(CLI::App& cmd) {
    cmd.add_option("--alpha", alpha, "fractional power in (0,1), decimal or p/q")
        ->capture_default_str();
    cmd.add_option("--h", h, "time step h > 0")->capture_default_str();
  }

  Params params() const {
    try {
      return Params(parse_real_or_fraction(alpha), parse_real_or_fraction(h));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

struct OperatorFlags {
  std::string matrix_file;
  std::string diag_file;

  void attach(CLI::App& cmd) {
    auto* m = cmd.add_option("--matrix-file", matrix_file, "dense symmetric matrix (CSV)");
    auto* d = cmd.add_option("--diag-file", diag_file, "diagonal entries, +inf allowed");
    m->excludes(d);
  }

  std::optional<OperatorData> load() const {
    if (!matrix_file.empty()) return OperatorData{read_dense_csv(matrix_file)};
    if (!diag_file.empty()) return OperatorData{read_diagonal_file(diag_file)};
    return std::nullopt;
  }
};

std::size_t dimension(const OperatorData& data) {
  if (const auto* d = std::get_if<std::vector<double>>(&data)) return d->size();
  return static_cast<std::size_t>(std::get<Eigen::MatrixXd>(data).rows());
}

Method method_flag(const std::string& name) {
  try {
    return parse_method(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

int run(int argc, char** argv) {
  CLI::App app{"Gauss-Laguerre approximation of (I + h L^alpha)^{-1} b"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  // scalar-sweep
  ProblemFlags sweep_flags;
  std::size_t sweep_n = 30;
  double lambda_min = 1.0;
  double lambda_max = 1e16;
  std::size_t points = 200;
  std::string sweep_mode = "standard";
  std::string sweep_out = "-";
  auto* sweep = app.add_subcommand("scalar-sweep", "measured scalar errors and q estimates");
  sweep_flags.attach(*sweep);
  sweep->add_option("--n", sweep_n, "rule size")->capture_default_str();
  sweep->add_option("--lambda-min", lambda_min)->capture_default_str();
  sweep->add_option("--lambda-max", lambda_max)->capture_default_str();
  sweep->add_option("--points", points, "log-spaced grid points")->capture_default_str();
  sweep->add_option("--mode", sweep_mode, "standard | balanced | truncated")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "output CSV, - for stdout")->capture_default_str();

  // sequences
  ProblemFlags seq_flags;
  std::size_t n_max = 100;
  std::string seq_out = "-";
  auto* seq = app.add_subcommand("sequences", "g sequences, eps sequences and crossovers");
  seq_flags.attach(*seq);
  seq->add_option("--n-max", n_max)->capture_default_str();
  seq->add_option("--out", seq_out)->capture_default_str();

  // plan
  ProblemFlags plan_flags;
  std::vector<std::size_t> plan_sizes;
  std::optional<double> plan_tol;
  std::size_t plan_max_n = 1000;
  std::string plan_out = "-";
  auto* plan = app.add_subcommand("plan", "balanced and truncated node budgets");
  plan_flags.attach(*plan);
  auto* plan_n = plan->add_option("--n", plan_sizes, "rule sizes (comma separated)")
                     ->delimiter(',');
  auto* plan_t = plan->add_option("--tol", plan_tol, "smallest n with predicted error <= tol");
  plan_n->excludes(plan_t);
  plan->add_option("--max-n", plan_max_n, "search limit for --tol")->capture_default_str();
  plan->add_option("--out", plan_out)->capture_default_str();

  // operator-error
  ProblemFlags oe_flags;
  OperatorFlags oe_operator;
  std::vector<std::size_t> oe_sizes = default_rule_sizes();
  std::string oe_mode = "all";
  std::string oe_vector;
  std::string oe_out = "-";
  auto* oe = app.add_subcommand("operator-error", "operator errors against the exact resolvent");
  oe_flags.attach(*oe);
  oe_operator.attach(*oe);
  oe->add_option("--n-list", oe_sizes, "rule sizes (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  oe->add_option("--mode", oe_mode, "standard | balanced | truncated | all")
      ->capture_default_str();
  oe->add_option("--vector-file", oe_vector, "right-hand side (default all ones)");
  oe->add_option("--out", oe_out)->capture_default_str();

  // apply
  ProblemFlags ap_flags;
  OperatorFlags ap_operator;
  std::size_t ap_n = 30;
  std::string ap_mode = "truncated";
  std::string ap_vector;
  std::string ap_out = "-";
  auto* ap = app.add_subcommand("apply", "apply the approximate resolvent to a vector");
  ap_flags.attach(*ap);
  ap_operator.attach(*ap);
  ap->add_option("--n", ap_n, "rule size")->capture_default_str();
  ap->add_option("--mode", ap_mode, "standard | balanced | truncated")->capture_default_str();
  ap->add_option("--vector-file", ap_vector, "right-hand side, one entry per line")->required();
  ap->add_option("--out", ap_out, "result vector, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;
  }

  if (sweep->parsed()) {
    const Params p = sweep_flags.params();
    const Method m = method_flag(sweep_mode);
    require(sweep_n >= 1 && sweep_n <= kMaxRuleSize, "--n must be in [1, 10000]");
    require(points >= 1, "--points must be >= 1");
    require(lambda_min >= 1.0 && lambda_max >= lambda_min && std::isfinite(lambda_max),
            "need 1 <= lambda-min <= lambda-max < inf");
    const auto grid = log_grid(lambda_min, lambda_max, points);
    sweep_table(error_sweep(p, sweep_n, grid, m)).write(sweep_out);
    return 0;
  }

  if (seq->parsed()) {
    const Params p = seq_flags.params();
    require(n_max >= 1, "--n-max must be >= 1");
    sequences_table(p, n_max).write(seq_out);
    return 0;
  }

  if (plan->parsed()) {
    const Params p = plan_flags.params();
    std::vector<Plan> plans;
    if (plan_tol) {
      require(*plan_tol > 0.0, "--tol must be > 0");
      require(plan_max_n >= 1 && plan_max_n <= kMaxRuleSize, "--max-n must be in [1, 10000]");
      const auto found = plan_for_tolerance(*plan_tol, p, plan_max_n);
      if (!found) {
        throw std::runtime_error("no plan with n <= " + std::to_string(plan_max_n) +
                                 " reaches the tolerance");
      }
      plans.push_back(*found);
    } else {
      require(!plan_sizes.empty(), "give --n or --tol");
      for (std::size_t n : plan_sizes) {
        require(n >= 1 && n <= kMaxRuleSize, "--n values must be in [1, 10000]");
        plans.push_back(make_plan(n, p));
      }
    }
    plan_table(plans).write(plan_out);
    return 0;
  }

  if (oe->parsed()) {
    const Params p = oe_flags.params();
    std::vector<Method> methods;
    if (oe_mode == "all") {
      methods = {Method::standard, Method::balanced, Method::truncated};
    } else {
      methods = {method_flag(oe_mode)};
    }
    require(!oe_sizes.empty(), "--n-list must not be empty");
    for (std::size_t n : oe_sizes) {
      require(n >= 1 && n <= kMaxRuleSize, "--n-list values must be in [1, 10000]");
    }
    const OperatorData data = oe_operator.load().value_or(OperatorData{log_spaced_spectrum()});
    const std::size_t dim = dimension(data);
    const Eigen::VectorXd b = oe_vector.empty()
                                  ? Eigen::VectorXd::Ones(static_cast<Eigen::Index>(dim))
                                  : read_vector_file(oe_vector);
    const auto rows = operator_error_rows(data, b, p, oe_sizes, methods);
    operator_error_table(rows, methods).write(oe_out);
    return 0;
  }

  if (ap->parsed()) {
    const Params p = ap_flags.params();
    const Method m = method_flag(ap_mode);
    require(ap_n >= 1 && ap_n <= kMaxRuleSize, "--n must be in [1, 10000]");
    const auto data = ap_operator.load();
    require(data.has_value(), "give --matrix-file or --diag-file");
    const Eigen::VectorXd b = read_vector_file(ap_vector);
    const OperatorHandle op = make_handle(*data);
    const Plan pl = make_plan(ap_n, p);
    std::fprintf(stderr, "method=%s n=%zu m=%zu k_n=%zu k_m=%zu inversions=%zu predicted_error=%s\n",
                 method_name(m), pl.n, m == Method::standard ? ap_n : pl.m, pl.k_n, pl.k_m,
                 method_inversions(m, ap_n, p), format_real(method_estimate(m, ap_n, p)).c_str());
    write_vector_file(ap_out, apply_resolvent(op, b, p, {m, ap_n}));
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
