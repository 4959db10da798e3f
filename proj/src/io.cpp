#include "fraclag/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace fraclag {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

std::string where(const std::string& path, std::size_t line) {
  return path + ":" + std::to_string(line) + ": ";
}

double parse_cell(std::string_view token, const std::string& path, std::size_t line) {
  try {
    return parse_real(token);
  } catch (const std::invalid_argument& e) {
    throw DataError(where(path, line) + e.what());
  }
}

std::string escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "inf" || t == "+inf" || t == "Inf" || t == "+Inf") {
    return std::numeric_limits<double>::infinity();
  }
  if (t == "-inf" || t == "-Inf") return -std::numeric_limits<double>::infinity();
  std::string_view digits = t;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() ||
      std::isnan(value)) {
    throw std::invalid_argument("not a number: '" + std::string(t) + "'");
  }
  return value;
}

double parse_real_or_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_real(text);
  const double num = parse_real(text.substr(0, slash));
  const double den = parse_real(text.substr(slash + 1));
  if (den == 0.0 || !std::isfinite(num) || !std::isfinite(den)) {
    throw std::invalid_argument("bad fraction: '" + std::string(text) + "'");
  }
  return num / den;
}

Eigen::MatrixXd read_dense_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_cell(rest.substr(0, comma), path, line_no));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw DataError(where(path, line_no) + "row has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError("'" + path + "' contains no rows");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

std::vector<double> read_diagonal_file(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) out.push_back(parse_cell(token, path, line_no));
  }
  if (out.empty()) throw DataError("'" + path + "' contains no entries");
  return out;
}

Eigen::VectorXd read_vector_file(const std::string& path) {
  const std::vector<double> entries = read_diagonal_file(path);
  Eigen::VectorXd v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i])) {
      throw DataError("'" + path + "': vector entries must be finite");
    }
    v(static_cast<Eigen::Index>(i)) = entries[i];
  }
  return v;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_vector_file(const std::string& path, const Eigen::VectorXd& v) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out << format_real(v(i)) << '\n';
  if (path == "-") {
    std::cout << out.str();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << out.str())) throw DataError("cannot write '" + path + "'");
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("CsvTable: empty header");
}

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("CsvTable: row width " + std::to_string(row.size()) +
                                " does not match header width " +
                                std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += escape(header_[i]);
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* d = std::get_if<double>(&row[i])) {
        out += format_real(*d);
      } else if (const auto* k = std::get_if<long long>(&row[i])) {
        out += std::to_string(*k);
      } else {
        out += escape(std::get<std::string>(row[i]));
      }
    }
    out += '\n';
  }
  return out;
}

void CsvTable::write(const std::string& path) const {
  const std::string text = to_string();
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw DataError("cannot write '" + path + "'");
}

}  // namespace fraclag
