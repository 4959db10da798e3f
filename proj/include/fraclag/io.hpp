#pragma once

#include <Eigen/Dense>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fraclag {

/// Malformed or inconsistent input data; the message names file and line.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a real number; "inf", "+inf" and "-inf" are accepted.
/// Throws std::invalid_argument on anything else.
double parse_real(std::string_view text);

/// Decimal text or a fraction "p/q" of two reals, e.g. "1/3".
double parse_real_or_fraction(std::string_view text);

/// Dense matrix, one comma-separated row per line, no header.
Eigen::MatrixXd read_dense_csv(const std::string& path);

/// Whitespace-separated diagonal entries (one per line in practice).
std::vector<double> read_diagonal_file(const std::string& path);

/// Vector entries, one per line.
Eigen::VectorXd read_vector_file(const std::string& path);

/// One scalar per line, 17 significant digits.
void write_vector_file(const std::string& path, const Eigen::VectorXd& v);

/// %.17g, with "inf", "-inf" and "nan" spelled out.
std::string format_real(double x);

/// Comma-separated table with a mandatory header row.
class CsvTable {
 public:
  using Cell = std::variant<double, long long, std::string>;

  explicit CsvTable(std::vector<std::string> header);

  /// Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<Cell> row);

  std::size_t rows() const { return rows_.size(); }
  std::string to_string() const;

  /// Writes to `path`, or to standard output when path is "-".
  void write(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace fraclag
