#pragma once

namespace fraclag {

/// Problem parameters of the resolvent (I + h L^alpha)^{-1}, with the
/// lambda-independent constants every integrand and estimate needs.
class Params {
 public:
  /// Throws std::invalid_argument unless 0 < alpha < 1 and h > 0 (finite).
  Params(double alpha, double h);

  double alpha() const { return alpha_; }
  double h() const { return h_; }

  /// sin(alpha pi) / (alpha pi)
  double prefactor() const { return prefactor_; }
  double sin_ap() const { return sin_ap_; }
  double cos_ap() const { return cos_ap_; }

  /// h^{1/alpha}; may be 0 or +inf when outside the double range.
  double h_pow() const { return h_pow_; }
  /// ln(h) / alpha, always finite.
  double log_h_pow() const { return log_h_pow_; }

  /// ln(h^{1/alpha} lambda), the quantity driving every pole location.
  double log_s(double lambda) const;

 private:
  double alpha_;
  double h_;
  double prefactor_;
  double sin_ap_;
  double cos_ap_;
  double h_pow_;
  double log_h_pow_;
};

struct Bounds {
  double k1;
  double k2;
};

/// Integrand of the first integral, without the e^{-x} weight.
/// lambda may be +inf (limit value 0). Throws std::invalid_argument for
/// x < 0 or lambda < 1.
double f1(double x, double lambda, const Params& p);

/// Integrand of the second integral, without the e^{-x} weight.
double f2(double x, double lambda, const Params& p);

/// K1 = 1, K2 = alpha/(alpha+1) h^{-1/alpha}.
///
/// These are the bounds used by the truncation thresholds. They bound f1/f2
/// exactly only for alpha <= 1/2; for alpha > 1/2 the trigonometric factor
/// dips to sin^2(alpha pi) and the sharp bound is K_i / sin^2(alpha pi).
Bounds bounds(const Params& p);

/// Sharp upper bounds on f1 and f2 over x >= 0, lambda >= 1.
Bounds sharp_bounds(const Params& p);

/// 1 / (1 + h lambda^alpha); 0 for lambda = +inf.
double exact_scalar_resolvent(double lambda, const Params& p);

}  // namespace fraclag
