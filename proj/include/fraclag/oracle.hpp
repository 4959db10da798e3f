#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fraclag/apply.hpp"
#include "fraclag/estimates.hpp"
#include "fraclag/integrands.hpp"

namespace fraclag {

/// Raised when the adaptive reference quadrature cannot meet its tolerance.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdaptiveResult {
  long double value = 0;
  long double error = 0;  ///< sum of |K15 - G7| over the final panels
  std::size_t panels = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
/// The interval is first cut at `breaks` and into panels of width <= max_width;
/// the panel with the largest error is bisected until the summed error is
/// <= abs_tol. Throws OracleError after max_panels panels.
AdaptiveResult integrate_adaptive(const std::function<long double(long double)>& f,
                                  long double a, long double b, long double abs_tol,
                                  std::vector<long double> breaks = {},
                                  long double max_width = 1.0L,
                                  std::size_t max_panels = 200000);

/// Exact (I + h D^alpha)^{-1} b for D = diag(entries); +inf entries give 0.
Eigen::VectorXd exact_diagonal_apply(const std::vector<double>& entries, const Eigen::VectorXd& b,
                                     const Params& p);

/// Exact (I + h A^alpha)^{-1} b for a symmetric matrix A with spectrum in
/// [1, inf), through a full eigendecomposition.
Eigen::VectorXd exact_dense_apply(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& b,
                                  const Params& p);

/// One integral of the two-integral representation, weight e^{-x} included,
/// integrated over [0, X] with X large enough that the certified tail bound
/// is below abs_tol / 10.
long double reference_integral(Integral which, double lambda, const Params& p,
                               long double abs_tol);

struct RepresentationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool passed = false;
};

/// prefactor * (I1 + I2) by adaptive quadrature against 1/(1 + h lambda^alpha).
RepresentationCheck representation_check(double lambda, const Params& p, double tol);

struct SweepRecord {
  double lambda = 0.0;
  double err_total = 0.0;  ///< |exact - scalar_approx|
  double err_int1 = 0.0;   ///< |I1 - quadrature of I1| at the mode's first rule
  double err_int2 = 0.0;   ///< |I2 - quadrature of I2| at the mode's second rule
  EstimateBreakdown q;     ///< q_I, q_II at n; q_III, q_IV at the second rule size
};

/// Measured scalar errors and estimates over a lambda grid. Per-integral
/// errors use extended precision so they stay meaningful far below the
/// double-precision size of the integrals themselves.
std::vector<SweepRecord> error_sweep(const Params& p, std::size_t n,
                                     const std::vector<double>& lambda_grid, Method method,
                                     std::size_t threads = 0);

/// `points` values log-spaced over [lo, hi] (a single point gives lo).
std::vector<double> log_grid(double lo, double hi, std::size_t points);

}  // namespace fraclag
