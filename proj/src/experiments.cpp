#include "fraclag/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fraclag {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* regime_name(FirstRegime r) { return r == FirstRegime::I ? "I" : "II"; }
const char* regime_name(SecondRegime r) { return r == SecondRegime::III ? "III" : "IV"; }

long long as_int(std::size_t v) { return static_cast<long long>(v); }

}  // namespace

std::vector<double> log_spaced_spectrum() {
  std::vector<double> d(161);
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::pow(10.0, static_cast<double>(k) / 10.0);
  return d;
}

std::vector<std::size_t> default_rule_sizes() { return {5, 10, 15, 20, 25, 30, 40, 50, 60}; }

OperatorHandle make_handle(const OperatorData& data) {
  if (const auto* d = std::get_if<std::vector<double>>(&data)) return OperatorHandle::diagonal(*d);
  return OperatorHandle::dense(std::get<Eigen::MatrixXd>(data));
}

Eigen::VectorXd exact_apply(const OperatorData& data, const Eigen::VectorXd& b, const Params& p) {
  if (const auto* d = std::get_if<std::vector<double>>(&data)) {
    return exact_diagonal_apply(*d, b, p);
  }
  return exact_dense_apply(std::get<Eigen::MatrixXd>(data), b, p);
}

double method_estimate(Method method, std::size_t n, const Params& p) {
  switch (method) {
    case Method::standard: return standard_estimate(n, p);
    case Method::balanced: return balanced_estimate(n, p);
    case Method::truncated: return truncated_estimate(n, p);
  }
  throw std::logic_error("method_estimate: unknown method");
}

std::size_t method_inversions(Method method, std::size_t n, const Params& p) {
  switch (method) {
    case Method::standard: return 2 * n;
    case Method::balanced: return n + balance_m(n, p);
    case Method::truncated: return make_plan(n, p).inversions;
  }
  throw std::logic_error("method_inversions: unknown method");
}

const std::optional<ModeResult>& OperatorErrorRow::get(Method m) const {
  switch (m) {
    case Method::standard: return standard;
    case Method::balanced: return balanced;
    case Method::truncated: return truncated;
  }
  throw std::logic_error("OperatorErrorRow::get: unknown method");
}

std::vector<OperatorErrorRow> operator_error_rows(const OperatorData& data,
                                                  const Eigen::VectorXd& b, const Params& p,
                                                  const std::vector<std::size_t>& sizes,
                                                  const std::vector<Method>& methods,
                                                  std::size_t threads) {
  const OperatorHandle op = make_handle(data);
  const Eigen::VectorXd exact = exact_apply(data, b, p);
  std::vector<OperatorErrorRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t n : sizes) {
    OperatorErrorRow row;
    row.n = n;
    for (Method m : methods) {
      const Eigen::VectorXd approx = apply_resolvent(op, b, p, {m, n}, ApplyOptions{threads});
      const ModeResult r{method_inversions(m, n, p), (approx - exact).cwiseAbs().maxCoeff(),
                         method_estimate(m, n, p)};
      switch (m) {
        case Method::standard: row.standard = r; break;
        case Method::balanced: row.balanced = r; break;
        case Method::truncated: row.truncated = r; break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

CsvTable operator_error_table(const std::vector<OperatorErrorRow>& rows,
                              const std::vector<Method>& methods) {
  if (methods.empty()) throw std::invalid_argument("operator_error_table: no methods");
  CsvTable table({"n", "inversions", "err_standard", "est_standard", "err_balanced",
                  "est_balanced", "err_truncated", "est_truncated", "inv_standard",
                  "inv_balanced", "inv_truncated"});
  constexpr Method kAll[] = {Method::standard, Method::balanced, Method::truncated};
  for (const auto& row : rows) {
    std::vector<CsvTable::Cell> cells{as_int(row.n),
                                      as_int(row.get(methods.back())->inversions)};
    for (Method m : kAll) {
      const auto& r = row.get(m);
      cells.emplace_back(r ? r->error : kNaN);
      cells.emplace_back(r ? r->estimate : kNaN);
    }
    for (Method m : kAll) {
      const auto& r = row.get(m);
      cells.emplace_back(r ? CsvTable::Cell(as_int(r->inversions)) : CsvTable::Cell(kNaN));
    }
    table.add_row(std::move(cells));
  }
  return table;
}

CsvTable sweep_table(const std::vector<SweepRecord>& records) {
  CsvTable table({"lambda", "err_total", "err_int1", "err_int2", "q_I", "q_II", "q_III", "q_IV",
                  "regime1", "regime2"});
  for (const auto& r : records) {
    table.add_row({r.lambda, r.err_total, r.err_int1, r.err_int2, r.q.q_I, r.q.q_II, r.q.q_III,
                   r.q.q_IV, std::string(regime_name(r.q.regime1)),
                   std::string(regime_name(r.q.regime2))});
  }
  return table;
}

CsvTable sequences_table(const Params& p, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("sequences_table: n-max must be >= 1");
  CsvTable table({"n", "g_I", "g_II", "g_III", "g_IV", "eps1", "eps2", "n_star", "n_star_star"});
  const double ns = n_star(p);
  const double nss = n_star_star(p);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const GSequences g = g_sequences(n, p);
    table.add_row({as_int(n), g.g_I, g.g_II, g.g_III, g.g_IV, eps1(n, p), eps2(n, p), ns, nss});
  }
  return table;
}

CsvTable plan_table(const std::vector<Plan>& plans) {
  CsvTable table({"n", "m", "k_n", "j_n", "k_m", "j_m", "predicted_error", "inversions"});
  for (const auto& pl : plans) {
    table.add_row({as_int(pl.n), as_int(pl.m), as_int(pl.k_n), as_int(pl.j_n), as_int(pl.k_m),
                   as_int(pl.j_m), pl.predicted_error, as_int(pl.inversions)});
  }
  return table;
}

}  // namespace fraclag
