#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "fraclag/io.hpp"

using namespace fraclag;

namespace {

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("fraclag_io_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("real parsing") {
  CHECK(parse_real("1.5") == 1.5);
  CHECK(parse_real(" -2e-3 ") == -2e-3);
  CHECK(parse_real("+7") == 7.0);
  CHECK(std::isinf(parse_real("+inf")));
  CHECK(std::isinf(parse_real("inf")));
  CHECK(parse_real("-inf") < 0.0);
  CHECK_THROWS_AS(parse_real("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_real("nan"), std::invalid_argument);
}

TEST_CASE("fractions") {
  CHECK(parse_real_or_fraction("1/3") == 1.0 / 3.0);
  CHECK(parse_real_or_fraction("2/3") == 2.0 / 3.0);
  CHECK(parse_real_or_fraction("0.75") == 0.75);
  CHECK_THROWS_AS(parse_real_or_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real_or_fraction("1/"), std::invalid_argument);
}

TEST_CASE("number formatting") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1e16) == "10000000000000000");
  CHECK(format_real(std::nan("")) == "nan");
  CHECK(format_real(-INFINITY) == "-inf");
  CHECK(parse_real(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("dense csv") {
  const auto path = temp_file("dense.csv", "2, 1\n1,3\n\n");
  const Eigen::MatrixXd m = read_dense_csv(path);
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == 1.0);
  CHECK(m(1, 1) == 3.0);
  CHECK_THROWS_AS(read_dense_csv(temp_file("ragged.csv", "1,2\n3\n")), DataError);
  CHECK_THROWS_AS(read_dense_csv(temp_file("bad.csv", "1,x\n")), DataError);
  CHECK_THROWS_AS(read_dense_csv("/nonexistent/fraclag.csv"), DataError);
}

TEST_CASE("diagonal and vector files") {
  const std::vector<double> d = read_diagonal_file(temp_file("diag.txt", "1\n10\n+inf\n"));
  REQUIRE(d.size() == 3);
  CHECK(std::isinf(d[2]));
  const Eigen::VectorXd v = read_vector_file(temp_file("vec.txt", "1\n-2.5\n"));
  CHECK(v.size() == 2);
  CHECK(v(1) == -2.5);
  CHECK_THROWS_AS(read_vector_file(temp_file("vinf.txt", "inf\n")), DataError);
  CHECK_THROWS_AS(read_diagonal_file(temp_file("empty.txt", "\n")), DataError);
}

TEST_CASE("vector output round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "fraclag_io_out.txt").string();
  Eigen::VectorXd v(3);
  v << 0.1, 1.0 / 3.0, -7.0;
  write_vector_file(path, v);
  CHECK(read_vector_file(path) == v);
}

TEST_CASE("csv table") {
  CsvTable t({"n", "value", "label"});
  t.add_row({1LL, 0.5, std::string("a,b")});
  t.add_row({2LL, 1e-300, std::string("plain")});
  CHECK(t.rows() == 2);
  CHECK(t.to_string() == "n,value,label\n1,0.5,\"a,b\"\n2,1e-300,plain\n");
  CHECK_THROWS_AS(t.add_row({1LL}), std::invalid_argument);
  CsvTable empty({"x"});
  CHECK(empty.to_string() == "x\n");
}
