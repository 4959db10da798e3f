#include <doctest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fraclag/laguerre.hpp"

using namespace fraclag;

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

TEST_CASE("two-point rule matches the closed form") {
  const QuadratureRule r = gauss_laguerre(2);
  REQUIRE(r.n == 2);
  CHECK(r.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx((2.0 + std::sqrt(2.0)) / 4.0).epsilon(1e-15));
  CHECK(r.weights[1] == doctest::Approx((2.0 - std::sqrt(2.0)) / 4.0).epsilon(1e-15));
}

TEST_CASE("one-point rule is x = 1, w = 1") {
  const QuadratureRule r = gauss_laguerre(1);
  CHECK(r.nodes[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("extreme nodes and weights against 30-digit values") {
  const QuadratureRule r5 = gauss_laguerre(5);
  CHECK(r5.nodes[0] == doctest::Approx(0.2635603197181409102).epsilon(1e-14));
  CHECK(r5.weights[0] == doctest::Approx(0.52175561058280865248).epsilon(1e-14));
  CHECK(r5.nodes[4] == doctest::Approx(12.640800844275782659).epsilon(1e-14));
  CHECK(r5.weights[4] == doctest::Approx(0.000023369972385776227891).epsilon(1e-13));

  const QuadratureRule r20 = gauss_laguerre(20);
  CHECK(r20.nodes[0] == doctest::Approx(0.070539889691988753367).epsilon(1e-14));
  CHECK(r20.weights[0] == doctest::Approx(0.16874680185111386215).epsilon(1e-14));
  CHECK(r20.nodes[19] == doctest::Approx(66.524416525615753819).epsilon(1e-14));
  // The tail weight keeps relative accuracy despite its size.
  CHECK(r20.weights[19] == doctest::Approx(1.6564566124990232959e-28).epsilon(1e-12));
}

TEST_CASE("moments are exact up to degree 2n-1") {
  for (std::size_t n = 1; n <= 40; ++n) {
    const QuadratureRule r = gauss_laguerre(n);
    for (int k = 0; k <= static_cast<int>(2 * n - 1); ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += r.weights[j] * std::pow(r.nodes[j], k);
      CHECK(std::abs(sum - factorial(k)) / factorial(k) <= 1e-8);
    }
  }
}

TEST_CASE("nodes increase strictly and weights sum to one") {
  for (std::size_t n : {3u, 17u, 64u, 150u, 400u}) {
    const QuadratureRule r = gauss_laguerre(n);
    for (std::size_t j = 1; j < n; ++j) CHECK(r.nodes[j] > r.nodes[j - 1]);
    CHECK(r.nodes.front() > 0.0);
    const double total = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("weights are positive and log weights finite") {
  for (std::size_t n = 1; n <= 150; ++n) {
    const QuadratureRule r = gauss_laguerre(n);
    for (double w : r.weights) CHECK(w > 0.0);
  }
  const QuadratureRule big = gauss_laguerre(2000);
  for (std::size_t j = 0; j < big.n; ++j) {
    CHECK(std::isfinite(big.log_weights[j]));
    // Subnormal weights carry too few digits for a relative comparison.
    if (big.weights[j] >= std::numeric_limits<double>::min()) {
      CHECK(std::log(big.weights[j]) == doctest::Approx(big.log_weights[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("node growth bracket for the leading nodes") {
  // x_j = c_j j^2 pi^2 / (4n) with (1 - 1/j)^2 < c_j < (1 + 1/j)^2 for j <= n/3.
  for (std::size_t n = 20; n <= 200; n += 10) {
    const QuadratureRule r = gauss_laguerre(n);
    for (std::size_t j = 1; j <= n / 3; ++j) {
      const double jd = static_cast<double>(j);
      const double c = r.nodes[j - 1] * 4.0 * static_cast<double>(n) / (jd * jd * M_PI * M_PI);
      CHECK(c > (1.0 - 1.0 / jd) * (1.0 - 1.0 / jd));
      CHECK(c < (1.0 + 1.0 / jd) * (1.0 + 1.0 / jd));
    }
  }
}

TEST_CASE("weight decay against node spacing") {
  constexpr double kC = 1.05;
  for (std::size_t n = 2; n <= 200; n += 7) {
    const QuadratureRule r = gauss_laguerre(n);
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const double spacing = 0.5 * (r.nodes[j + 1] - r.nodes[j - 1]);
      CHECK(r.weights[j] <= kC * spacing * std::exp(-r.nodes[j]));
    }
    double tail = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      CHECK(tail <= kC * std::exp(-r.nodes[k]));
      tail += r.weights[k];
    }
  }
}

TEST_CASE("largest rule size is accepted and stays ordered") {
  const QuadratureRule r = gauss_laguerre(kMaxRuleSize);
  CHECK(r.n == kMaxRuleSize);
  bool ordered = true;
  for (std::size_t j = 1; j < r.n; ++j) ordered = ordered && r.nodes[j] > r.nodes[j - 1];
  CHECK(ordered);
  CHECK(r.nodes.back() < 4.0 * static_cast<double>(r.n) + 2.0);
}

TEST_CASE("rule size outside [1, kMaxRuleSize] is rejected") {
  CHECK_THROWS_AS(gauss_laguerre(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_laguerre(kMaxRuleSize + 1), std::invalid_argument);
}

TEST_CASE("truncation index") {
  const QuadratureRule r = gauss_laguerre(5);
  SUBCASE("threshold below the first node keeps one node") {
    const TruncationIndex t = truncation_index(r, 0.0);
    CHECK(t.k == 1);
    CHECK_FALSE(t.kept_all);
  }
  SUBCASE("threshold between nodes") {
    const TruncationIndex t = truncation_index(r, 3.69);
    CHECK(t.k == 4);
    CHECK(r.nodes[t.k - 1] >= 3.69);
    CHECK(r.nodes[t.k - 2] < 3.69);
  }
  SUBCASE("threshold equal to a node selects that node") {
    CHECK(truncation_index(r, r.nodes[2]).k == 3);
  }
  SUBCASE("threshold beyond the last node keeps everything") {
    const TruncationIndex t = truncation_index(r, 100.0);
    CHECK(t.k == 5);
    CHECK(t.kept_all);
  }
  CHECK_THROWS_AS(truncation_index(r, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(truncation_index(r, std::nan("")), std::invalid_argument);
}

TEST_CASE("nodes of consecutive rules interlace") {
  for (std::size_t n = 1; n <= 120; ++n) {
    const QuadratureRule a = gauss_laguerre(n);
    const QuadratureRule b = gauss_laguerre(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(b.nodes[j] < a.nodes[j]);
      CHECK(a.nodes[j] < b.nodes[j + 1]);
    }
  }
}

TEST_CASE("rules are bit-identical across calls") {
  const QuadratureRule a = gauss_laguerre(73);
  const QuadratureRule b = gauss_laguerre(73);
  CHECK(a.nodes == b.nodes);
  CHECK(a.weights == b.weights);
}

TEST_CASE("two-point truncation examples") {
  const QuadratureRule r = gauss_laguerre(2);
  CHECK(truncation_index(r, 0.0).k == 1);
  CHECK(truncation_index(r, 1.0).k == 2);
  CHECK_FALSE(truncation_index(r, 1.0).kept_all);
  CHECK(truncation_index(r, 100.0).kept_all);
}
