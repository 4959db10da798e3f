#include "fraclag/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fraclag/estimates.hpp"
#include "fraclag/laguerre.hpp"

namespace fraclag {
namespace {

constexpr double kPi = std::numbers::pi;

std::size_t clamp_index(double raw, std::size_t hi) {
  if (!(raw >= 1.0)) return 1;
  if (raw >= static_cast<double>(hi)) return hi;
  return static_cast<std::size_t>(raw);
}

std::size_t analytic_j_n(std::size_t n, const Params& p) {
  const double a = p.alpha();
  const double nd = static_cast<double>(n);
  double raw;
  if (nd <= n_star(p)) {
    raw = 2.0 * std::pow(1.0 - a, 0.25) * std::pow(2.0 * nd / kPi, 0.75);
  } else {
    raw = 2.0 * std::sqrt(3.0) * std::cbrt(a * nd * nd / (kPi * kPi));
  }
  return clamp_index(std::floor(raw), n);
}

// Bracketed term of the j_m formulas: ln K2 plus the threshold growth in m.
double j_m_bracket(std::size_t m, const Params& p) {
  const double a = p.alpha();
  const double md = static_cast<double>(m);
  const double log_k2 = std::log(a / (a + 1.0)) - p.log_h_pow();
  if (md <= n_star_star(p)) {
    return log_k2 + std::sqrt(8.0 * md * (1.0 - a) * (a + 1.0) * kPi / a);
  }
  return log_k2 + 3.0 * std::cbrt((a + 1.0) * a * kPi * kPi * md);
}

std::size_t numeric_k_m(std::size_t n, std::size_t m, const Params& p) {
  return truncation_index(gauss_laguerre(m), thresholds(n, m, p).s2).k;
}

AnalyticIndices analytic_j_with(std::size_t n, std::size_t m, const Params& p,
                                std::optional<std::size_t> known_k_m) {
  AnalyticIndices out{analytic_j_n(n, p), 1};
  const double bracket = j_m_bracket(m, p);
  if (bracket < 0.0) {
    out.j_m = known_k_m ? *known_k_m : numeric_k_m(n, m, p);
  } else {
    const double md = static_cast<double>(m);
    out.j_m = clamp_index(std::floor(std::sqrt(4.0 * md / (kPi * kPi) * bracket)), m);
  }
  return out;
}

}  // namespace

std::size_t balance_m(std::size_t n, const Params& p) {
  if (n == 0) throw std::invalid_argument("balance_m: n must be >= 1");
  const double a = p.alpha();
  const double nd = static_cast<double>(n);
  const double ns = n_star(p);
  const double nss = n_star_star(p);

  double raw;
  if (nd > nss && nd <= ns) {
    const double base = 2.0 * std::sqrt((2.0 * nd + 1.0) * (1.0 - a) * kPi) +
                        std::log(2.0 * a * p.sin_ap());
    raw = base * base * base / (27.0 * (a + 1.0) * a * kPi * kPi) - 0.5;
  } else {
    raw = a * (2.0 * nd + 1.0) / (2.0 * (a + 1.0)) - 0.5;
  }
  // Integer-valued closed forms must not be bumped up by roundoff.
  const double up = std::ceil(raw - 1e-9 * std::max(1.0, std::abs(raw)));
  if (!(up >= 1.0)) return 1;
  return std::min(n, static_cast<std::size_t>(up));
}

Thresholds thresholds(std::size_t n, std::size_t m, const Params& p) {
  const Bounds k = bounds(p);
  const double s1 = -std::log(eps1(n, p) / k.k1);
  const double s2 = -std::log(eps2(m, p) / k.k2);
  return {std::max(0.0, s1), std::max(0.0, s2)};
}

AnalyticIndices analytic_j(std::size_t n, std::size_t m, const Params& p) {
  if (n == 0 || m == 0) throw std::invalid_argument("analytic_j: rule sizes must be >= 1");
  return analytic_j_with(n, m, p, std::nullopt);
}

Plan make_plan(std::size_t n, const Params& p) {
  if (n == 0) throw std::invalid_argument("make_plan: n must be >= 1");
  Plan plan;
  plan.n = n;
  plan.m = balance_m(n, p);

  const QuadratureRule rule_n = gauss_laguerre(plan.n);
  const QuadratureRule rule_m = gauss_laguerre(plan.m);
  const Thresholds s = thresholds(plan.n, plan.m, p);
  plan.s1 = s.s1;
  plan.s2 = s.s2;

  const TruncationIndex tn = truncation_index(rule_n, s.s1);
  const TruncationIndex tm = truncation_index(rule_m, s.s2);
  plan.k_n = tn.k;
  plan.kept_all_n = tn.kept_all;
  plan.k_m = tm.k;
  plan.kept_all_m = tm.kept_all;

  const AnalyticIndices j = analytic_j_with(plan.n, plan.m, p, plan.k_m);
  plan.j_n = j.j_n;
  plan.j_m = j.j_m;

  plan.predicted_error = truncated_estimate(n, p);
  plan.inversions = plan.k_n + plan.k_m;
  return plan;
}

std::optional<Plan> plan_for_tolerance(double tol, const Params& p, std::size_t max_n) {
  if (!(tol > 0.0)) throw std::invalid_argument("plan_for_tolerance: tol must be > 0");
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (truncated_estimate(n, p) <= tol) return make_plan(n, p);
  }
  return std::nullopt;
}

double balanced_estimate(std::size_t n, const Params& p) {
  return 2.0 * standard_estimate(n, p);
}

double truncated_estimate(std::size_t n, const Params& p) {
  return 4.0 * p.prefactor() * eps1(n, p);
}

AsymptoticEstimates asymptotic_estimates(std::size_t q, const Params& p) {
  if (q == 0) throw std::invalid_argument("asymptotic_estimates: q must be >= 1");
  const double a = p.alpha();
  const double qd = static_cast<double>(q);
  const double balanced =
      8.0 * p.sin_ap() *
      std::exp(-3.0 * std::cbrt(qd * (a + 1.0) / (2.0 * a + 1.0) * a * a * kPi * kPi));
  const double rate = std::pow(3.0, 0.75) / std::sqrt(2.0) * kPi * std::sqrt(a) /
                      std::sqrt(1.0 + std::sqrt(a / (a + 1.0)));
  const double truncated = 16.0 * p.sin_ap() * std::exp(-rate * std::sqrt(qd));
  return {balanced, truncated};
}

}  // namespace fraclag
