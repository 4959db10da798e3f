#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fraclag/integrands.hpp"
#include "fraclag/laguerre.hpp"

namespace fraclag {

enum class Integral { first, second };

/// One quadrature node mapped to the solve scale * (sigma I + tau L)^{-1} b.
struct ShiftedSystem {
  double sigma = 1.0;
  double tau = 0.0;
  double scale = 0.0;
};

ShiftedSystem node_system(double x, double w, Integral which, const Params& p);

enum class Method { standard, balanced, truncated };

struct Mode {
  Method method = Method::standard;
  std::size_t n = 1;
};

/// Parses "standard", "balanced" or "truncated".
Method parse_method(const std::string& name);
const char* method_name(Method m);

/// Raised when a shifted solve fails; carries the position of the failing
/// node in the accumulation order (first integral, then second).
class OperatorError : public std::runtime_error {
 public:
  OperatorError(const std::string& what, std::size_t node, Integral which)
      : std::runtime_error(what), node_(node), which_(which) {}
  std::size_t node() const { return node_; }
  Integral integral() const { return which_; }

 private:
  std::size_t node_;
  Integral which_;
};

/// Self-adjoint positive operator with spectrum in [1, inf), seen only
/// through its shifted solves. Must be safe for concurrent const use.
class OperatorHandle {
 public:
  using SolveFn =
      std::function<Eigen::VectorXd(double sigma, double tau, const Eigen::VectorXd& b)>;

  /// Entries must be >= 1; +inf is allowed and maps to a zero solution entry.
  static OperatorHandle diagonal(std::vector<double> entries);
  /// Symmetric matrix; positive definiteness is discovered per solve.
  static OperatorHandle dense(Eigen::MatrixXd matrix);
  /// Caller-supplied solver of (sigma I + tau L) y = b, taken on trust.
  static OperatorHandle external(std::size_t dimension, SolveFn solve);

  std::size_t dimension() const { return dimension_; }
  bool is_diagonal() const { return std::holds_alternative<Diagonal>(backend_); }
  const std::vector<double>& diagonal_entries() const;

  /// Throws std::runtime_error when the shifted system cannot be solved.
  Eigen::VectorXd solve(double sigma, double tau, const Eigen::VectorXd& b) const;

 private:
  struct Diagonal {
    std::vector<double> entries;
  };
  struct Dense {
    Eigen::MatrixXd matrix;
  };
  struct External {
    SolveFn solve;
  };

  OperatorHandle(std::size_t dimension, std::variant<Diagonal, Dense, External> backend)
      : dimension_(dimension), backend_(std::move(backend)) {}

  std::size_t dimension_;
  std::variant<Diagonal, Dense, External> backend_;
};

struct ApplyOptions {
  /// Worker threads for the node solves; 0 picks default_thread_count().
  std::size_t threads = 0;
};

/// hardware_concurrency, capped by the FRACLAG_THREADS environment variable.
std::size_t default_thread_count();

/// Shifted systems of a method in accumulation order: ascending nodes of the
/// first integral, then of the second. Its size is the number of inversions.
struct TermList {
  std::vector<ShiftedSystem> terms;
  std::size_t first_count = 0;
};

TermList build_terms(const Params& p, Mode mode);

/// (I + h L^alpha)^{-1} b through the Laguerre rational approximation.
/// Throws std::invalid_argument on a dimension mismatch and OperatorError when
/// a node solve fails. The result does not depend on the thread count.
Eigen::VectorXd apply_resolvent(const OperatorHandle& op, const Eigen::VectorXd& b,
                                const Params& p, Mode mode, ApplyOptions options = {});

/// The same computation on the 1x1 operator [lambda] with b = 1.
double scalar_approx(double lambda, const Params& p, Mode mode);

/// Partial quadrature sum sum_{j < count} w_j f_i(x_j) of one integral.
double integral_partial_sum(Integral which, const QuadratureRule& rule, std::size_t count,
                            double lambda, const Params& p);

}  // namespace fraclag
