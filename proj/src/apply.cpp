#include "fraclag/apply.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "fraclag/planner.hpp"

namespace fraclag {
namespace {

double trig_factor(double y, double cos_ap) {
  const double e = std::exp(-y);
  return 1.0 + e * (2.0 * cos_ap + e);
}

void append_terms(std::vector<ShiftedSystem>& out, const QuadratureRule& rule,
                  std::size_t count, Integral which, const Params& p) {
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(node_system(rule.nodes[j], rule.weights[j], which, p));
  }
}

}  // namespace

ShiftedSystem node_system(double x, double w, Integral which, const Params& p) {
  const double a = p.alpha();
  if (which == Integral::first) {
    return {1.0, std::exp(p.log_h_pow() - x / a), w / trig_factor(x, p.cos_ap())};
  }
  return {std::exp(-x / (a + 1.0)), p.h_pow(),
          w * (a / (a + 1.0)) / trig_factor(a * x / (a + 1.0), p.cos_ap())};
}

Method parse_method(const std::string& name) {
  if (name == "standard") return Method::standard;
  if (name == "balanced") return Method::balanced;
  if (name == "truncated") return Method::truncated;
  throw std::invalid_argument("unknown method '" + name + "'");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::standard: return "standard";
    case Method::balanced: return "balanced";
    case Method::truncated: return "truncated";
  }
  return "?";
}

OperatorHandle OperatorHandle::diagonal(std::vector<double> entries) {
  if (entries.empty()) throw std::invalid_argument("diagonal operator: no entries");
  for (double d : entries) {
    if (!(d >= 1.0)) {
      throw std::invalid_argument("diagonal operator: entries must be >= 1 (or +inf)");
    }
  }
  const std::size_t dim = entries.size();
  return OperatorHandle(dim, Diagonal{std::move(entries)});
}

OperatorHandle OperatorHandle::dense(Eigen::MatrixXd matrix) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("dense operator: matrix must be square and non-empty");
  }
  if (!matrix.allFinite()) throw std::invalid_argument("dense operator: non-finite entry");
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, matrix.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("dense operator: matrix is not symmetric");
  }
  const auto dim = static_cast<std::size_t>(matrix.rows());
  return OperatorHandle(dim, Dense{std::move(matrix)});
}

OperatorHandle OperatorHandle::external(std::size_t dimension, SolveFn solve) {
  if (dimension == 0 || !solve) {
    throw std::invalid_argument("external operator: needs a dimension and a solver");
  }
  return OperatorHandle(dimension, External{std::move(solve)});
}

const std::vector<double>& OperatorHandle::diagonal_entries() const {
  if (const auto* d = std::get_if<Diagonal>(&backend_)) return d->entries;
  throw std::logic_error("diagonal_entries: operator is not diagonal");
}

Eigen::VectorXd OperatorHandle::solve(double sigma, double tau, const Eigen::VectorXd& b) const {
  if (const auto* d = std::get_if<Diagonal>(&backend_)) {
    Eigen::VectorXd y(b.size());
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      const double entry = d->entries[static_cast<std::size_t>(i)];
      y(i) = std::isinf(entry) ? 0.0 : b(i) / (sigma + tau * entry);
    }
    return y;
  }
  if (const auto* m = std::get_if<Dense>(&backend_)) {
    Eigen::MatrixXd shifted = tau * m->matrix;
    shifted.diagonal().array() += sigma;
    const Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() != Eigen::Success) {
      throw std::runtime_error("shifted matrix is not positive definite");
    }
    return llt.solve(b);
  }
  const auto& ext = std::get<External>(backend_);
  Eigen::VectorXd y = ext.solve(sigma, tau, b);
  if (y.size() != b.size()) throw std::runtime_error("external solver returned wrong size");
  return y;
}

std::size_t default_thread_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FRACLAG_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return n;
}

TermList build_terms(const Params& p, Mode mode) {
  if (mode.n == 0) throw std::invalid_argument("rule size n must be >= 1");
  TermList out;
  const QuadratureRule rule_n = gauss_laguerre(mode.n);
  std::size_t count_n = mode.n;
  std::size_t m = mode.n;
  std::size_t count_m = mode.n;
  if (mode.method == Method::balanced) {
    m = count_m = balance_m(mode.n, p);
  } else if (mode.method == Method::truncated) {
    const Plan plan = make_plan(mode.n, p);
    m = plan.m;
    count_n = plan.k_n;
    count_m = plan.k_m;
  }
  out.terms.reserve(count_n + count_m);
  append_terms(out.terms, rule_n, count_n, Integral::first, p);
  out.first_count = out.terms.size();
  if (m == mode.n) {
    append_terms(out.terms, rule_n, count_m, Integral::second, p);
  } else {
    append_terms(out.terms, gauss_laguerre(m), count_m, Integral::second, p);
  }
  return out;
}

Eigen::VectorXd apply_resolvent(const OperatorHandle& op, const Eigen::VectorXd& b,
                                const Params& p, Mode mode, ApplyOptions options) {
  if (static_cast<std::size_t>(b.size()) != op.dimension()) {
    throw std::invalid_argument("apply_resolvent: vector has dimension " +
                                std::to_string(b.size()) + ", operator has " +
                                std::to_string(op.dimension()));
  }
  const TermList list = build_terms(p, mode);
  const std::size_t count = list.terms.size();
  std::vector<Eigen::VectorXd> solutions(count);

  auto locate = [&](std::size_t t) {
    return t < list.first_count ? std::pair{t, Integral::first}
                                : std::pair{t - list.first_count, Integral::second};
  };

  const std::size_t threads =
      std::min(count, options.threads == 0 ? default_thread_count() : options.threads);

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::optional<std::size_t> failed_at;
  std::string failure_message;

  auto worker = [&] {
    for (std::size_t t = next++; t < count; t = next++) {
      const ShiftedSystem& s = list.terms[t];
      try {
        solutions[t] = op.solve(s.sigma, s.tau, b);
      } catch (const std::exception& e) {
        const std::lock_guard lock(failure_mutex);
        if (!failed_at || t < *failed_at) {
          failed_at = t;
          failure_message = e.what();
        }
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  if (failed_at) {
    const auto [node, which] = locate(*failed_at);
    throw OperatorError("shifted solve failed at node " + std::to_string(node + 1) + " of the " +
                            (which == Integral::first ? "first" : "second") +
                            " integral: " + failure_message,
                        node, which);
  }

  Eigen::VectorXd acc = Eigen::VectorXd::Zero(b.size());
  for (std::size_t t = 0; t < count; ++t) acc += list.terms[t].scale * solutions[t];
  return p.prefactor() * acc;
}

double scalar_approx(double lambda, const Params& p, Mode mode) {
  if (!(lambda >= 1.0)) throw std::invalid_argument("scalar_approx: lambda must be >= 1");
  const OperatorHandle op = OperatorHandle::diagonal({lambda});
  return apply_resolvent(op, Eigen::VectorXd::Ones(1), p, mode, ApplyOptions{1})(0);
}

double integral_partial_sum(Integral which, const QuadratureRule& rule, std::size_t count,
                            double lambda, const Params& p) {
  if (count > rule.n) throw std::invalid_argument("integral_partial_sum: count exceeds rule size");
  double sum = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    const ShiftedSystem s = node_system(rule.nodes[j], rule.weights[j], which, p);
    sum += std::isinf(lambda) ? 0.0 : s.scale / (s.sigma + s.tau * lambda);
  }
  return sum;
}

}  // namespace fraclag
