#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fraclag/estimates.hpp"
#include "fraclag/laguerre.hpp"
#include "fraclag/planner.hpp"

using namespace fraclag;

TEST_CASE("balanced second rule size") {
  const Params p(0.6, 0.01);
  const std::size_t sizes[] = {5, 10, 15, 20, 25, 50, 100};
  const std::size_t expected[] = {2, 4, 6, 8, 10, 19, 38};
  for (std::size_t i = 0; i < 7; ++i) CHECK(balance_m(sizes[i], p) == expected[i]);
  for (double a = 0.1; a < 0.95; a += 0.1) CHECK(balance_m(1, Params(a, 0.01)) == 1);
  CHECK_THROWS_AS(balance_m(0, p), std::invalid_argument);
}

TEST_CASE("balance formula branches") {
  // alpha = 0.6, n = 50 > n*: first branch, raw 18.4375.
  CHECK(balance_m(50, Params(0.6, 0.01)) == 19);
  // alpha = 0.75: n = 20 <= n** uses the first branch (raw 8.29), n = 50 in
  // (n**, n*] the second (raw 15.82), n = 100 > n* the first again (raw 42.57).
  const Params p(0.75, 0.01);
  CHECK(balance_m(20, p) == 9);
  CHECK(balance_m(50, p) == 16);
  CHECK(balance_m(100, p) == 43);
}

TEST_CASE("balanced size stays in range and tracks alpha/(alpha+1)") {
  for (int i = 1; i <= 9; ++i) {
    const double a = 0.1 * i;
    const Params p(a, 0.01);
    for (std::size_t n = 1; n <= 100; ++n) {
      const std::size_t m = balance_m(n, p);
      CHECK(m >= 1);
      CHECK(m <= n);
    }
    const double ratio = static_cast<double>(balance_m(100, p)) / 100.0;
    CHECK(ratio == doctest::Approx(a / (a + 1.0)).epsilon(0.10));
  }
}

TEST_CASE("eps1 and eps2 agree after balancing") {
  for (int i = 1; i <= 9; ++i) {
    const Params p(0.1 * i, 0.01);
    const auto start = static_cast<std::size_t>(std::max(2.0, std::ceil(n_star(p)))) + 1;
    for (std::size_t n = start; n <= 100; ++n) {
      const double ratio = eps1(n, p) / eps2(balance_m(n, p), p);
      CHECK(ratio >= 0.2);
      CHECK(ratio <= 5.0);
    }
  }
}

TEST_CASE("thresholds") {
  const Params p(0.75, 0.01);
  const Thresholds t = thresholds(5, 2, p);
  CHECK(t.s1 == doctest::Approx(3.6941137249848100968).epsilon(1e-13));
  CHECK(t.s2 == doctest::Approx(9.1625608459623724882).epsilon(1e-13));
  // h does not enter s1.
  CHECK(thresholds(5, 2, Params(0.75, 3.0)).s1 == doctest::Approx(t.s1).epsilon(1e-15));
  // A huge h drives eps2/K2 above 1 and the clamp takes over.
  CHECK(thresholds(5, 2, Params(0.75, 1e6)).s2 == 0.0);
}

TEST_CASE("analytic truncation indices") {
  const Params p(0.75, 0.01);
  // Raw values 3.37 at n = 5 and 31.6 at n = 100; floor applies.
  CHECK(analytic_j(5, 2, p).j_n == 3);
  CHECK(analytic_j(100, 46, p).j_n == 31);
  // Raw 8.956 for m = 11.
  CHECK(analytic_j(25, 11, p).j_m == 8);
  CHECK(analytic_j(1, 1, p).j_n == 1);
  for (double a = 0.05; a < 0.96; a += 0.1) {
    const Params q(a, 0.01);
    for (std::size_t n = 1; n <= 300; n += 3) CHECK(analytic_j(n, 1, q).j_n <= n);
  }
}

TEST_CASE("negative bracket falls back to the numeric index") {
  const Params p(0.3, 50.0);
  const Plan plan = make_plan(20, p);
  CHECK(plan.j_m == plan.k_m);
}

TEST_CASE("plan assembly") {
  SUBCASE("degenerate n = 1") {
    const Plan plan = make_plan(1, Params(0.5, 0.01));
    CHECK(plan.n == 1);
    CHECK(plan.m == 1);
    CHECK(plan.k_n == 1);
    CHECK(plan.k_m == 1);
    CHECK(plan.j_n == 1);
    CHECK(plan.j_m == 1);
    CHECK(plan.inversions == 2);
  }
  SUBCASE("alpha = 0.6 keeps the balanced size") {
    CHECK(make_plan(50, Params(0.6, 0.01)).m == 19);
  }
  SUBCASE("alpha = 0.75, n = 25") {
    const Plan plan = make_plan(25, Params(0.75, 0.01));
    CHECK(plan.m == 11);
    CHECK(std::abs(static_cast<long>(plan.k_n) - 10) <= 1);
    CHECK(std::abs(static_cast<long>(plan.k_m) - 7) <= 1);
  }
}

TEST_CASE("plan invariants") {
  for (double a : {0.1, 0.3, 0.5, 0.6, 0.75, 0.9}) {
    for (double h : {1e-3, 1e-2, 1.0}) {
      const Params p(a, h);
      double prev = INFINITY;
      for (std::size_t n = 1; n <= 80; ++n) {
        const Plan plan = make_plan(n, p);
        CHECK(plan.m >= 1);
        CHECK(plan.m <= n);
        CHECK(plan.k_n >= 1);
        CHECK(plan.k_n <= n);
        CHECK(plan.k_m >= 1);
        CHECK(plan.k_m <= plan.m);
        CHECK(plan.inversions == plan.k_n + plan.k_m);
        CHECK(plan.predicted_error > 0.0);
        CHECK(plan.predicted_error < prev);
        prev = plan.predicted_error;
        // The first dropped node lies past the threshold by construction.
        if (plan.k_n < n) {
          const QuadratureRule r = gauss_laguerre(n);
          CHECK(std::exp(-r.nodes[plan.k_n - 1]) <= eps1(n, p) / bounds(p).k1);
        }
      }
    }
  }
}

TEST_CASE("tolerance-driven plan") {
  const Params p(0.5, 0.01);
  const auto loose = plan_for_tolerance(1.0, p);
  REQUIRE(loose.has_value());
  CHECK(loose->n == 1);
  const auto tight = plan_for_tolerance(1e-8, p);
  REQUIRE(tight.has_value());
  CHECK(tight->predicted_error <= 1e-8);
  CHECK(make_plan(tight->n - 1, p).predicted_error > 1e-8);
  CHECK_FALSE(plan_for_tolerance(1e-300, p, 50).has_value());
}

TEST_CASE("balanced and truncated estimates") {
  const Params p(0.5, 0.01);
  for (std::size_t n = 1; n <= 80; ++n) {
    CHECK(balanced_estimate(n, p) / standard_estimate(n, p) == doctest::Approx(2.0));
    CHECK(truncated_estimate(n, p) == doctest::Approx(4.0 * p.prefactor() * eps1(n, p)));
  }
  CHECK(balanced_estimate(50, p) == doctest::Approx(2.4863571675434052e-6).epsilon(1e-12));
  CHECK(truncated_estimate(50, p) == doctest::Approx(4.9727143350868104449e-6).epsilon(1e-12));
}

TEST_CASE("asymptotic estimates") {
  const Params p(0.5, 0.01);
  const AsymptoticEstimates e = asymptotic_estimates(60, p);
  CHECK(e.balanced == doctest::Approx(4.3746858742793598814e-6).epsilon(1e-12));
  CHECK(e.truncated == doctest::Approx(4.1046787744161065645e-9).epsilon(1e-12));
  for (std::size_t q = 1; q < 200; ++q) {
    const AsymptoticEstimates a = asymptotic_estimates(q, p);
    const AsymptoticEstimates b = asymptotic_estimates(q + 1, p);
    CHECK(b.balanced < a.balanced);
    CHECK(b.truncated < a.truncated);
  }
  // Recover the cube-root argument of the balanced form and compare it with
  // the unbalanced q alpha^2 pi^2 / 2: the ratio is the speedup constant.
  for (double a = 0.05; a < 1.0; a += 0.05) {
    const Params q(a, 0.01);
    const double bal = asymptotic_estimates(100, q).balanced;
    const double arg = std::pow(-std::log(bal / (8.0 * std::sin(a * M_PI))) / 3.0, 3.0);
    const double speedup = arg / (100.0 * a * a * M_PI * M_PI / 2.0);
    CHECK(speedup > 4.0 / 3.0);
    CHECK(speedup < 2.0);
  }
}
