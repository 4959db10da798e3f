#include "fraclag/laguerre.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fraclag {
namespace {

// L_n(x) and L_{n-1}(x) held as mantissas with a shared binary exponent so the
// recurrence survives the large-x end of big rules.
struct ScaledPair {
  double ln = 0.0;
  double lnm1 = 0.0;
  int exponent = 0;
};

ScaledPair laguerre_pair(std::size_t n, double x) {
  double prev = 1.0;
  double cur = 1.0 - x;
  int exponent = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0 - x) * cur - kd * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 0x1p500) {
      cur = std::ldexp(cur, -500);
      prev = std::ldexp(prev, -500);
      exponent += 500;
    }
  }
  return {cur, prev, exponent};
}

// x L_n'(x) = n (L_n(x) - L_{n-1}(x))
double newton_step(std::size_t n, double x) {
  const ScaledPair p = laguerre_pair(n, x);
  const double denom = static_cast<double>(n) * (p.ln - p.lnm1);
  return x * p.ln / denom;
}

}  // namespace

QuadratureRule gauss_laguerre(std::size_t n) {
  if (n == 0 || n > kMaxRuleSize) {
    throw std::invalid_argument("gauss_laguerre: rule size must lie in [1, " +
                                std::to_string(kMaxRuleSize) + "], got " +
                                std::to_string(n));
  }

  // Jacobi matrix of the monic Laguerre recurrence: diagonal 2j-1, off-diagonal j.
  Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 1 ? n - 1 : 0));
  for (std::size_t j = 1; j <= n; ++j) {
    diag(static_cast<Eigen::Index>(j - 1)) = 2.0 * static_cast<double>(j) - 1.0;
    if (j < n) sub(static_cast<Eigen::Index>(j - 1)) = static_cast<double>(j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_laguerre: tridiagonal eigensolver did not converge");
  }

  QuadratureRule rule;
  rule.n = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.log_weights.resize(n);

  const double log_n = std::log(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    double x = solver.eigenvalues()(static_cast<Eigen::Index>(j));
    for (int it = 0; it < 8; ++it) {
      const double dx = newton_step(n, x);
      if (!std::isfinite(dx)) break;
      x -= dx;
      if (std::abs(dx) <= 1e-14 * x) break;
    }
    rule.nodes[j] = x;

    // w = 1 / (x L_n'(x)^2) = x / (n (L_n - L_{n-1}))^2
    const ScaledPair p = laguerre_pair(n, x);
    const double log_deriv = std::log(std::abs(p.ln - p.lnm1)) +
                             static_cast<double>(p.exponent) * std::log(2.0);
    const double log_w = std::log(x) - 2.0 * log_n - 2.0 * log_deriv;
    rule.log_weights[j] = log_w;
    rule.weights[j] = std::exp(log_w);
  }
  return rule;
}

TruncationIndex truncation_index(const QuadratureRule& rule, double s) {
  if (!(s >= 0.0)) {
    throw std::invalid_argument("truncation_index: threshold must be non-negative");
  }
  const auto it = std::lower_bound(rule.nodes.begin(), rule.nodes.end(), s);
  if (it == rule.nodes.end()) return {rule.n, true};
  return {static_cast<std::size_t>(it - rule.nodes.begin()) + 1, false};
}

}  // namespace fraclag
