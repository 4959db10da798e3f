#pragma once

#include <complex>
#include <cstddef>

#include "fraclag/integrands.hpp"

namespace fraclag {

/// Poles of f1 (I, II) and f2 (III, IV) closest to the positive real axis,
/// upper half-plane representatives.
struct PoleSet {
  std::complex<double> z_I;
  std::complex<double> z_II;
  std::complex<double> z_III;
  std::complex<double> z_IV;
};

enum class FirstRegime { I, II };
enum class SecondRegime { III, IV };

/// Modulus estimates of the quadrature error of each integral at one lambda.
struct EstimateBreakdown {
  double q_I = 0.0;
  double q_II = 0.0;
  double q_III = 0.0;
  double q_IV = 0.0;
  FirstRegime regime1 = FirstRegime::II;
  SecondRegime regime2 = SecondRegime::IV;

  double first() const { return regime1 == FirstRegime::I ? q_I : q_II; }
  double second() const { return regime2 == SecondRegime::III ? q_III : q_IV; }
};

struct GammaPair {
  double plus;
  double minus;
};

struct GSequences {
  double g_I;
  double g_II;
  double g_III;
  double g_IV;
};

/// 3 * 2^{-2/3}
inline constexpr double kMaxConstant = 1.8898815748423097;

PoleSet poles(double lambda, const Params& p);

/// gamma^{+-} = sqrt( sqrt(l^2 + pi^2) +- l ), l = ln(h^{1/alpha} lambda).
/// The smaller one is recovered from gamma+ gamma- = pi to avoid cancellation.
GammaPair gamma_pm(double lambda, const Params& p);

/// Threshold above which the pole z_I governs the first-integral error.
double lambda_bar(const Params& p);

/// Threshold below which the pole z_III governs the second-integral error.
double lambda_bbar(const Params& p);

/// All four modulus estimates at (lambda, n), with n-bar = 4n + 2.
/// Fractional powers of -1 use the principal branch e^{i alpha pi}.
EstimateBreakdown q_estimates(double lambda, std::size_t n, const Params& p);

/// Approximate maxima over lambda of the four q functions.
GSequences g_sequences(std::size_t n, const Params& p);

/// Crossover index where g_I overtakes g_II (real valued, not rounded).
double n_star(const Params& p);
/// Crossover index where g_III overtakes g_IV.
double n_star_star(const Params& p);

/// g_I(n) if n >= n_star else g_II(n).
double eps1(std::size_t n, const Params& p);
/// g_III(m) if m >= n_star_star else g_IV(m).
double eps2(std::size_t m, const Params& p);

/// Predicted operator-norm error of the plain 2n-inversion method.
double standard_estimate(std::size_t n, const Params& p);

}  // namespace fraclag
