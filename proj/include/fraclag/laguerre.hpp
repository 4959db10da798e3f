#pragma once

#include <cstddef>
#include <vector>

namespace fraclag {

/// Largest rule size accepted by gauss_laguerre().
inline constexpr std::size_t kMaxRuleSize = 10000;

/// n-point Gauss-Laguerre rule for the weight e^{-x} on [0, inf).
///
/// Nodes are strictly increasing. Weights of the outermost nodes of large
/// rules fall below the double range and are stored as 0; `log_weights`
/// always holds the finite natural logarithm of every weight.
struct QuadratureRule {
  std::size_t n = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;
};

/// Golub-Welsch eigenvalues followed by Newton polishing on the three-term
/// recurrence. Weights come from the Christoffel formula evaluated in a
/// rescaled recurrence, so tiny tail weights keep full relative accuracy.
/// Throws std::invalid_argument for n == 0 or n > kMaxRuleSize.
QuadratureRule gauss_laguerre(std::size_t n);

struct TruncationIndex {
  std::size_t k = 0;      ///< 1-based count of retained nodes
  bool kept_all = false;  ///< threshold beyond the last node, nothing dropped
};

/// Smallest 1-based index k with nodes[k-1] >= s. When no node reaches s the
/// whole rule is kept (k = n, kept_all = true).
/// Throws std::invalid_argument for negative or NaN s.
TruncationIndex truncation_index(const QuadratureRule& rule, double s);

}  // namespace fraclag
