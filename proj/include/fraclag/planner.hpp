#pragma once

#include <cstddef>
#include <optional>

#include "fraclag/integrands.hpp"

namespace fraclag {

/// Node budget of the balanced and truncated method for one rule size n.
struct Plan {
  std::size_t n = 1;    ///< first-integral rule size
  std::size_t m = 1;    ///< second-integral rule size
  std::size_t k_n = 1;  ///< retained nodes of the n-rule
  std::size_t k_m = 1;  ///< retained nodes of the m-rule
  std::size_t j_n = 1;  ///< closed-form approximation of k_n
  std::size_t j_m = 1;  ///< closed-form approximation of k_m
  double s1 = 0.0;      ///< truncation threshold of the first integral
  double s2 = 0.0;      ///< truncation threshold of the second integral
  bool kept_all_n = false;
  bool kept_all_m = false;
  double predicted_error = 0.0;
  std::size_t inversions = 2;  ///< k_n + k_m
};

struct Thresholds {
  double s1;
  double s2;
};

struct AnalyticIndices {
  std::size_t j_n;
  std::size_t j_m;
};

struct AsymptoticEstimates {
  double balanced;
  double truncated;
};

/// Second-integral rule size that balances its error against the first
/// integral at rule size n. The closed form is rounded up and clamped to [1, n].
std::size_t balance_m(std::size_t n, const Params& p);

/// s1 = -ln(eps1(n)/K1), s2 = -ln(eps2(m)/K2), each clamped below at 0.
Thresholds thresholds(std::size_t n, std::size_t m, const Params& p);

/// Closed-form approximations of the truncation indices. When the bracket
/// of the j_m formula is negative (h >= 1 territory) the numeric k_m is used.
AnalyticIndices analytic_j(std::size_t n, std::size_t m, const Params& p);

/// Algorithm: balance m, build both rules, threshold and truncate them.
Plan make_plan(std::size_t n, const Params& p);

/// Smallest-n plan whose predicted error is <= tol, scanning n = 1, 2, ...
/// up to max_n. Empty when no plan in range reaches tol.
std::optional<Plan> plan_for_tolerance(double tol, const Params& p, std::size_t max_n = 1000);

/// Predicted error of the balanced (un-truncated) method: twice the standard one.
double balanced_estimate(std::size_t n, const Params& p);

/// Predicted error of the balanced and truncated method: 4 prefactor eps1(n).
double truncated_estimate(std::size_t n, const Params& p);

/// Large-q forms of the balanced and truncated estimates as functions of the
/// total number of inversions q.
AsymptoticEstimates asymptotic_estimates(std::size_t q, const Params& p);

}  // namespace fraclag
