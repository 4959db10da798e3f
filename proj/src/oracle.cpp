#include "fraclag/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <thread>

#include "fraclag/laguerre.hpp"
#include "fraclag/planner.hpp"

namespace fraclag {
namespace {

using real = long double;

constexpr real kPiL = std::numbers::pi_v<long double>;

// 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights.
constexpr real kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L,
};
constexpr real kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L,
};
constexpr real kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L,
};

struct Panel {
  real a;
  real b;
  real value;
  real error;
  real abs_value;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<real(real)>& f, real a, real b) {
  const real center = 0.5L * (a + b);
  const real half = 0.5L * (b - a);
  const real fc = f(center);
  real kronrod = kWgk[7] * fc;
  real gauss = kWg[3] * fc;
  real abs_sum = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const real dx = half * kXgk[j];
    const real f1 = f(center - dx);
    const real f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half)};
}

// Shared pieces of the two integrands in extended precision.
struct ExtendedIntegrand {
  real alpha;
  real cos_ap;
  real log_s;  // ln(h^{1/alpha} lambda)

  ExtendedIntegrand(double lambda, const Params& p)
      : alpha(p.alpha()),
        cos_ap(std::cos(static_cast<real>(p.alpha()) * kPiL)),
        log_s(std::log(static_cast<real>(p.h())) / static_cast<real>(p.alpha()) +
              std::log(static_cast<real>(lambda))) {}

  static real trig(real y, real c) {
    const real e = std::exp(-y);
    return 1.0L + e * (2.0L * c + e);
  }

  // f1 and f2 without the Laguerre weight.
  real first(real x) const {
    return 1.0L / ((1.0L + std::exp(log_s - x / alpha)) * trig(x, cos_ap));
  }
  real second(real x) const {
    const real shift = std::exp(-x / (alpha + 1.0L)) + std::exp(log_s);
    return (alpha / (alpha + 1.0L)) / (shift * trig(alpha * x / (alpha + 1.0L), cos_ap));
  }

  real min_trig() const {
    const real s = std::sin(alpha * kPiL);
    return cos_ap >= 0 ? 1.0L : s * s;
  }

  // Certified bound on the integral of e^{-x} f_i over [X, inf).
  real tail(Integral which, real x_cut) const {
    if (which == Integral::first) return std::exp(-x_cut) / min_trig();
    const real a1 = alpha / (alpha + 1.0L);
    const real slow = std::exp(-a1 * x_cut) / a1;
    const real fast = std::exp(-x_cut - log_s);
    return a1 / min_trig() * std::min(slow, fast);
  }

  real transition(Integral which) const {
    return which == Integral::first ? alpha * log_s : -(alpha + 1.0L) * log_s;
  }
};

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::min(count, threads == 0 ? default_thread_count() : threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

AdaptiveResult integrate_adaptive(const std::function<long double(long double)>& f,
                                  long double a, long double b, long double abs_tol,
                                  std::vector<long double> breaks, long double max_width,
                                  std::size_t max_panels) {
  if (!(b > a)) return {};
  std::vector<real> cuts{a};
  std::sort(breaks.begin(), breaks.end());
  for (real x : breaks) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);

  constexpr real kRoundoff = 64.0L * std::numeric_limits<real>::epsilon();
  std::priority_queue<Panel> open;
  real value = 0;
  real error = 0;
  real floor_error = 0;  // panels already at roundoff level
  std::size_t panels = 0;

  auto add = [&](const Panel& pn) {
    ++panels;
    value += pn.value;
    if (pn.error <= kRoundoff * pn.abs_value) {
      floor_error += pn.error;
    } else {
      error += pn.error;
      open.push(pn);
    }
  };

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const real width = cuts[i + 1] - cuts[i];
    const auto pieces = static_cast<std::size_t>(std::max<real>(1, std::ceil(width / max_width)));
    for (std::size_t k = 0; k < pieces; ++k) {
      const real lo = cuts[i] + width * static_cast<real>(k) / static_cast<real>(pieces);
      const real hi = k + 1 == pieces
                          ? cuts[i + 1]
                          : cuts[i] + width * static_cast<real>(k + 1) / static_cast<real>(pieces);
      add(gauss_kronrod(f, lo, hi));
    }
  }

  while (error + floor_error > abs_tol && !open.empty()) {
    if (panels >= max_panels) {
      throw OracleError("adaptive quadrature: panel budget exhausted before reaching tolerance");
    }
    const Panel worst = open.top();
    open.pop();
    error -= worst.error;
    value -= worst.value;
    --panels;
    const real mid = 0.5L * (worst.a + worst.b);
    add(gauss_kronrod(f, worst.a, mid));
    add(gauss_kronrod(f, mid, worst.b));
    // Running sums drift; resum when the open set is small enough to matter.
    if (error < 0) error = 0;
  }
  if (error + floor_error > abs_tol) {
    throw OracleError("adaptive quadrature: roundoff floor above requested tolerance");
  }
  return {value, error + floor_error, panels};
}

Eigen::VectorXd exact_diagonal_apply(const std::vector<double>& entries, const Eigen::VectorXd& b,
                                     const Params& p) {
  if (static_cast<std::size_t>(b.size()) != entries.size()) {
    throw std::invalid_argument("exact_diagonal_apply: dimension mismatch");
  }
  Eigen::VectorXd y(b.size());
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    const double d = entries[static_cast<std::size_t>(i)];
    if (!(d >= 1.0)) throw std::invalid_argument("exact_diagonal_apply: entries must be >= 1");
    y(i) = std::isinf(d) ? 0.0 : b(i) / (1.0 + p.h() * std::pow(d, p.alpha()));
  }
  return y;
}

Eigen::VectorXd exact_dense_apply(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& b,
                                  const Params& p) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != b.size()) {
    throw std::invalid_argument("exact_dense_apply: dimension mismatch");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(matrix);
  if (eig.info() != Eigen::Success) throw OracleError("exact_dense_apply: eigensolver failed");
  if (eig.eigenvalues().minCoeff() < 1.0 - 1e-10) {
    throw std::invalid_argument("exact_dense_apply: spectrum must lie in [1, inf)");
  }
  const Eigen::VectorXd damp = eig.eigenvalues().unaryExpr(
      [&p](double d) { return 1.0 / (1.0 + p.h() * std::pow(std::max(d, 1.0), p.alpha())); });
  const Eigen::MatrixXd& v = eig.eigenvectors();
  return v * damp.cwiseProduct(v.transpose() * b);
}

long double reference_integral(Integral which, double lambda, const Params& p,
                               long double abs_tol) {
  if (!(lambda >= 1.0) || std::isinf(lambda)) {
    throw std::invalid_argument("reference_integral: lambda must be finite and >= 1");
  }
  const ExtendedIntegrand g(lambda, p);
  real x_cut = 50.0L;
  while (g.tail(which, x_cut) > abs_tol / 10.0L) {
    x_cut *= 1.5L;
    if (x_cut > 1e6L) throw OracleError("reference_integral: tail does not decay");
  }
  std::function<real(real)> integrand;
  if (which == Integral::first) {
    integrand = [&g](real x) { return std::exp(-x) * g.first(x); };
  } else {
    integrand = [&g](real x) { return std::exp(-x) * g.second(x); };
  }
  std::vector<real> breaks;
  const real t = g.transition(which);
  if (t > 0 && t < x_cut) breaks.push_back(t);
  return integrate_adaptive(integrand, 0.0L, x_cut, 0.9L * abs_tol, breaks).value;
}

RepresentationCheck representation_check(double lambda, const Params& p, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("representation_check: tol must be > 0");
  const real pre = std::sin(static_cast<real>(p.alpha()) * kPiL) /
                   (static_cast<real>(p.alpha()) * kPiL);
  // Each integral gets a quarter of the budget; the prefactor is below 1.
  const real budget = static_cast<real>(tol) / 4.0L;
  const real i1 = reference_integral(Integral::first, lambda, p, budget);
  const real i2 = reference_integral(Integral::second, lambda, p, budget);
  RepresentationCheck out;
  out.lhs = static_cast<double>(pre * (i1 + i2));
  out.rhs = static_cast<double>(
      1.0L / (1.0L + static_cast<real>(p.h()) *
                         std::pow(static_cast<real>(lambda), static_cast<real>(p.alpha()))));
  out.gap = std::abs(out.lhs - out.rhs);
  out.passed = out.gap <= tol;
  return out;
}

std::vector<SweepRecord> error_sweep(const Params& p, std::size_t n,
                                     const std::vector<double>& lambda_grid, Method method,
                                     std::size_t threads) {
  if (n == 0) throw std::invalid_argument("error_sweep: n must be >= 1");
  const Mode mode{method, n};
  std::size_t m = n;
  std::size_t count_n = n;
  std::size_t count_m = n;
  if (method == Method::balanced) {
    m = count_m = balance_m(n, p);
  } else if (method == Method::truncated) {
    const Plan plan = make_plan(n, p);
    m = plan.m;
    count_n = plan.k_n;
    count_m = plan.k_m;
  }
  const QuadratureRule rule_n = gauss_laguerre(n);
  const QuadratureRule rule_m = gauss_laguerre(m);

  std::vector<SweepRecord> out(lambda_grid.size());
  std::vector<std::exception_ptr> errors(lambda_grid.size());
  parallel_for(lambda_grid.size(), threads, [&](std::size_t i) {
    try {
      const double lambda = lambda_grid[i];
      SweepRecord& r = out[i];
      r.lambda = lambda;
      r.err_total = std::abs(exact_scalar_resolvent(lambda, p) - scalar_approx(lambda, p, mode));

      const ExtendedIntegrand g(lambda, p);
      real sum1 = 0;
      for (std::size_t j = 0; j < count_n; ++j) {
        sum1 += static_cast<real>(rule_n.weights[j]) * g.first(rule_n.nodes[j]);
      }
      real sum2 = 0;
      for (std::size_t j = 0; j < count_m; ++j) {
        sum2 += static_cast<real>(rule_m.weights[j]) * g.second(rule_m.nodes[j]);
      }
      constexpr real kRel = 1e-17L;
      const real tiny = std::numeric_limits<real>::min();
      const real ref1 =
          reference_integral(Integral::first, lambda, p, std::max(tiny, kRel * std::abs(sum1)));
      const real ref2 =
          reference_integral(Integral::second, lambda, p, std::max(tiny, kRel * std::abs(sum2)));
      r.err_int1 = static_cast<double>(std::abs(ref1 - sum1));
      r.err_int2 = static_cast<double>(std::abs(ref2 - sum2));

      const EstimateBreakdown q1 = q_estimates(lambda, n, p);
      const EstimateBreakdown q2 = q_estimates(lambda, m, p);
      r.q = q1;
      r.q.q_III = q2.q_III;
      r.q.q_IV = q2.q_IV;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (points == 0) throw std::invalid_argument("log_grid: points must be >= 1");
  if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("log_grid: need 0 < lo <= hi");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  const double llo = std::log10(lo);
  const double lhi = std::log10(hi);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = std::pow(10.0, llo + t * (lhi - llo));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace fraclag
