#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "fraclag/apply.hpp"
#include "fraclag/estimates.hpp"
#include "fraclag/io.hpp"
#include "fraclag/oracle.hpp"
#include "fraclag/planner.hpp"

namespace fraclag {

/// diag(10^{k/10}), k = 0..160: the log-spaced test spectrum on [1, 1e16].
std::vector<double> log_spaced_spectrum();

/// Default rule sizes of the operator-error experiment.
std::vector<std::size_t> default_rule_sizes();

/// Operator given by value, so an exact reference can be formed.
using OperatorData = std::variant<std::vector<double>, Eigen::MatrixXd>;

OperatorHandle make_handle(const OperatorData& data);
Eigen::VectorXd exact_apply(const OperatorData& data, const Eigen::VectorXd& b, const Params& p);

/// Predicted operator-norm error of a method at rule size n.
double method_estimate(Method method, std::size_t n, const Params& p);

/// Number of shifted solves a method performs at rule size n.
std::size_t method_inversions(Method method, std::size_t n, const Params& p);

struct ModeResult {
  std::size_t inversions = 0;
  double error = 0.0;     ///< max entrywise |approx - exact| on the given vector
  double estimate = 0.0;  ///< method_estimate
};

struct OperatorErrorRow {
  std::size_t n = 0;
  std::optional<ModeResult> standard;
  std::optional<ModeResult> balanced;
  std::optional<ModeResult> truncated;

  const std::optional<ModeResult>& get(Method m) const;
};

/// Measured and predicted errors of the requested methods for each n,
/// against `exact` = exact_apply(data, b, p).
std::vector<OperatorErrorRow> operator_error_rows(const OperatorData& data,
                                                  const Eigen::VectorXd& b, const Params& p,
                                                  const std::vector<std::size_t>& sizes,
                                                  const std::vector<Method>& methods,
                                                  std::size_t threads = 0);

/// Columns: n, inversions, err/est per method, then inversions per method.
/// `inversions` is the count of the last requested method; methods not
/// requested print nan.
CsvTable operator_error_table(const std::vector<OperatorErrorRow>& rows,
                              const std::vector<Method>& methods);

CsvTable sweep_table(const std::vector<SweepRecord>& records);
CsvTable sequences_table(const Params& p, std::size_t n_max);
CsvTable plan_table(const std::vector<Plan>& plans);

}  // namespace fraclag
