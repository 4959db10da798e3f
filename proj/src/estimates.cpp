#include "fraclag/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fraclag {
namespace {

constexpr double kPi = std::numbers::pi;

double nbar(std::size_t n) { return 4.0 * static_cast<double>(n) + 2.0; }

// (2 alpha - 1) pi / (2 alpha (1 - alpha)), the log-distance between the two
// pole families of each integrand.
double pole_exponent(double a) { return (2.0 * a - 1.0) * kPi / (2.0 * a * (1.0 - a)); }

std::complex<double> unit(double angle) { return std::polar(1.0, angle); }

}  // namespace

PoleSet poles(double lambda, const Params& p) {
  const double a = p.alpha();
  const double l = p.log_s(lambda);
  return {
      {a * l, a * kPi},
      {0.0, (1.0 - a) * kPi},
      {-(a + 1.0) * l, (a + 1.0) * kPi},
      {0.0, (1.0 - a) * (a + 1.0) * kPi / a},
  };
}

GammaPair gamma_pm(double lambda, const Params& p) {
  const double l = p.log_s(lambda);
  const double r = std::hypot(l, kPi);
  if (l >= 0.0) {
    const double plus = std::sqrt(r + l);
    return {plus, kPi / plus};
  }
  const double minus = std::sqrt(r - l);
  return {kPi / minus, minus};
}

double lambda_bar(const Params& p) {
  return std::exp(pole_exponent(p.alpha()) - p.log_h_pow());
}

double lambda_bbar(const Params& p) {
  return std::max(1.0, std::exp(-pole_exponent(p.alpha()) - p.log_h_pow()));
}

EstimateBreakdown q_estimates(double lambda, std::size_t n, const Params& p) {
  if (!(lambda >= 1.0)) throw std::invalid_argument("q_estimates: lambda must be >= 1");
  if (n == 0) throw std::invalid_argument("q_estimates: n must be >= 1");

  const double a = p.alpha();
  const double nb = nbar(n);
  const double l = p.log_s(lambda);
  const double s = std::exp(l);
  // h lambda^alpha = s^alpha
  const double u = std::exp(a * l);
  const GammaPair g = gamma_pm(lambda, p);
  const double c = p.cos_ap();

  EstimateBreakdown e;
  // Numerator and denominator of the q_I / q_III quotients are divided by u.
  {
    const std::complex<double> den = unit(-2.0 * a * kPi) / u + 2.0 * c * unit(-a * kPi) + u;
    e.q_I = 4.0 * kPi * a * std::exp(-std::sqrt(2.0 * a * nb) * g.minus) / std::abs(den);
  }
  {
    const double den = p.sin_ap() * std::abs(1.0 - unit(-kPi / a) * s);
    e.q_II = 2.0 * kPi * std::exp(-std::sqrt(2.0 * (1.0 - a) * kPi * nb)) / den;
  }
  {
    const std::complex<double> den = 1.0 / u + 2.0 * c * unit(a * kPi) + unit(2.0 * a * kPi) * u;
    e.q_III = 4.0 * kPi * a * std::exp(-std::sqrt(2.0 * (a + 1.0) * nb) * g.plus) / std::abs(den);
  }
  {
    const double den = p.sin_ap() * std::abs(unit((1.0 - a) * kPi / a) + s);
    e.q_IV = 2.0 * kPi *
             std::exp(-std::sqrt(2.0 * (1.0 - a) * (a + 1.0) * kPi * nb / a)) / den;
  }
  e.regime1 = lambda > lambda_bar(p) ? FirstRegime::I : FirstRegime::II;
  e.regime2 = lambda < lambda_bbar(p) ? SecondRegime::III : SecondRegime::IV;
  return e;
}

GSequences g_sequences(std::size_t n, const Params& p) {
  if (n == 0) throw std::invalid_argument("g_sequences: n must be >= 1");
  const double a = p.alpha();
  const double nb = nbar(n);
  const double pi2 = kPi * kPi;
  const double trig = 2.0 * kPi / p.sin_ap();
  return {
      4.0 * kPi * a * std::exp(-kMaxConstant * std::cbrt(nb * a * a * pi2)),
      trig * std::exp(-std::sqrt(2.0 * (1.0 - a) * kPi * nb)),
      4.0 * kPi * a * std::exp(-kMaxConstant * std::cbrt(a * (a + 1.0) * pi2 * nb)),
      trig * std::exp(-std::sqrt(2.0 * nb * (1.0 - a) * (a + 1.0) * kPi / a)),
  };
}

double n_star(const Params& p) {
  const double a = p.alpha();
  const double c6 = std::pow(kMaxConstant, 6);
  return c6 / 32.0 * std::pow(a, 4) / std::pow(1.0 - a, 3) * kPi - 0.5;
}

double n_star_star(const Params& p) {
  const double a = p.alpha();
  const double c6 = std::pow(kMaxConstant, 6);
  return c6 / 32.0 * std::pow(a, 5) / (std::pow(1.0 - a, 3) * (1.0 + a)) * kPi - 0.5;
}

double eps1(std::size_t n, const Params& p) {
  const GSequences g = g_sequences(n, p);
  return static_cast<double>(n) >= n_star(p) ? g.g_I : g.g_II;
}

double eps2(std::size_t m, const Params& p) {
  const GSequences g = g_sequences(m, p);
  return static_cast<double>(m) >= n_star_star(p) ? g.g_III : g.g_IV;
}

double standard_estimate(std::size_t n, const Params& p) { return p.prefactor() * eps1(n, p); }

}  // namespace fraclag
