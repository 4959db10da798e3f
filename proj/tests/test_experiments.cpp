#include <doctest.h>

#include <sstream>

#include "fraclag/experiments.hpp"

using namespace fraclag;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("test spectrum") {
  const auto d = log_spaced_spectrum();
  CHECK(d.size() == 161);
  CHECK(d.front() == 1.0);
  CHECK(d.back() == 1e16);
  CHECK(d[5] == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("inversion counts") {
  const Params p(0.75, 0.01);
  CHECK(method_inversions(Method::standard, 25, p) == 50);
  CHECK(method_inversions(Method::balanced, 25, p) == 36);
  CHECK(method_inversions(Method::truncated, 25, p) == make_plan(25, p).inversions);
}

TEST_CASE("sequences table") {
  const Params p(0.7, 0.01);
  const auto rows = lines(sequences_table(p, 40).to_string());
  CHECK(rows.front() == "n,g_I,g_II,g_III,g_IV,eps1,eps2,n_star,n_star_star");
  CHECK(rows.size() == 41);
  CHECK(lines(sequences_table(p, 1).to_string()).size() == 2);
  const std::string expected_last = "40," + format_real(g_sequences(40, p).g_I) + ",";
  CHECK(rows.back().rfind(expected_last, 0) == 0);
  const std::string tail = "," + format_real(eps1(40, p)) + "," + format_real(eps2(40, p)) + "," +
                           format_real(n_star(p)) + "," + format_real(n_star_star(p));
  CHECK(rows.back().substr(rows.back().size() - tail.size()) == tail);
}

TEST_CASE("plan table") {
  const Params p(0.6, 0.01);
  std::vector<Plan> plans;
  for (std::size_t n : {5u, 10u, 15u, 20u, 25u, 50u, 100u}) plans.push_back(make_plan(n, p));
  const auto rows = lines(plan_table(plans).to_string());
  CHECK(rows.front() == "n,m,k_n,j_n,k_m,j_m,predicted_error,inversions");
  CHECK(rows[1].rfind("5,2,", 0) == 0);
  CHECK(rows[7].rfind("100,38,", 0) == 0);
}

TEST_CASE("sweep table") {
  const auto recs = error_sweep(Params(0.3, 0.01), 30, log_grid(1.0, 1e16, 1), Method::standard);
  const auto rows = lines(sweep_table(recs).to_string());
  CHECK(rows.size() == 2);
  CHECK(rows.front() == "lambda,err_total,err_int1,err_int2,q_I,q_II,q_III,q_IV,regime1,regime2");
  CHECK(rows[1].substr(rows[1].size() - 6) == "II,III");
}

TEST_CASE("operator error rows") {
  const Params p(0.5, 0.01);
  const std::vector<double> d = log_spaced_spectrum();
  const Eigen::VectorXd b = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(d.size()));
  const std::vector<Method> all = {Method::standard, Method::balanced, Method::truncated};
  const auto rows = operator_error_rows(d, b, p, {1, 50}, all, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].standard->error <= 1e-5);
  CHECK(rows[1].standard->estimate == doctest::Approx(standard_estimate(50, p)));
  CHECK(rows[1].truncated->inversions == make_plan(50, p).inversions);

  const auto text = lines(operator_error_table(rows, all).to_string());
  CHECK(text.front() ==
        "n,inversions,err_standard,est_standard,err_balanced,est_balanced,err_truncated,"
        "est_truncated,inv_standard,inv_balanced,inv_truncated");
  CHECK(text.size() == 3);

  const auto only = operator_error_rows(d, b, p, {10}, {Method::balanced});
  CHECK_FALSE(only[0].standard.has_value());
  const auto single = lines(operator_error_table(only, {Method::balanced}).to_string());
  const std::string prefix =
      "10," + std::to_string(method_inversions(Method::balanced, 10, p)) + ",nan,nan,";
  CHECK(single[1].rfind(prefix, 0) == 0);
}

TEST_CASE("dense operator data uses the spectral reference") {
  const Params p(0.5, 0.01);
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(3, 3);
  const auto rows = operator_error_rows(eye, Eigen::VectorXd::Ones(3), p, {30},
                                        {Method::standard});
  CHECK(rows[0].standard->error <= 1e-8);
}
