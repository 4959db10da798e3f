#include "fraclag/integrands.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fraclag {
namespace {

void check_domain(double x, double lambda, const char* who) {
  if (!(x >= 0.0)) throw std::invalid_argument(std::string(who) + ": x must be >= 0");
  if (!(lambda >= 1.0)) throw std::invalid_argument(std::string(who) + ": lambda must be >= 1");
}

// 1 + 2 cos(alpha pi) e^{-y} + e^{-2y}, the trigonometric factor shared by both
// integrands (y = x for the first, y = alpha x / (alpha + 1) for the second).
double trig_factor(double y, double cos_ap) {
  const double e = std::exp(-y);
  return 1.0 + e * (2.0 * cos_ap + e);
}

}  // namespace

Params::Params(double alpha, double h) : alpha_(alpha), h_(h) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("Params: alpha must lie in (0, 1)");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("Params: h must be positive and finite");
  }
  const double api = alpha * std::numbers::pi;
  sin_ap_ = std::sin(api);
  cos_ap_ = std::cos(api);
  prefactor_ = sin_ap_ / api;
  log_h_pow_ = std::log(h) / alpha;
  h_pow_ = std::exp(log_h_pow_);
}

double Params::log_s(double lambda) const { return log_h_pow_ + std::log(lambda); }

double f1(double x, double lambda, const Params& p) {
  check_domain(x, lambda, "f1");
  const double log_s = p.log_s(lambda);
  if (log_s == std::numeric_limits<double>::infinity()) return 0.0;
  const double t = std::exp(log_s - x / p.alpha());
  return 1.0 / ((1.0 + t) * trig_factor(x, p.cos_ap()));
}

double f2(double x, double lambda, const Params& p) {
  check_domain(x, lambda, "f2");
  const double a = p.alpha();
  const double log_s = p.log_s(lambda);
  if (log_s == std::numeric_limits<double>::infinity()) return 0.0;
  const double shift = std::exp(-x / (a + 1.0)) + std::exp(log_s);
  return (a / (a + 1.0)) / (shift * trig_factor(a * x / (a + 1.0), p.cos_ap()));
}

Bounds bounds(const Params& p) {
  const double a = p.alpha();
  return {1.0, (a / (a + 1.0)) * std::exp(-p.log_h_pow())};
}

Bounds sharp_bounds(const Params& p) {
  Bounds b = bounds(p);
  if (p.cos_ap() < 0.0) {
    const double s2 = p.sin_ap() * p.sin_ap();
    b.k1 /= s2;
    b.k2 /= s2;
  }
  return b;
}

double exact_scalar_resolvent(double lambda, const Params& p) {
  if (!(lambda >= 1.0)) {
    throw std::invalid_argument("exact_scalar_resolvent: lambda must be >= 1");
  }
  return 1.0 / (1.0 + p.h() * std::pow(lambda, p.alpha()));
}

}  // namespace fraclag
