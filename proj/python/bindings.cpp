#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fraclag/experiments.hpp"

namespace py = pybind11;
using namespace fraclag;

namespace {

Mode mode_of(const std::string& method, std::size_t n) { return {parse_method(method), n}; }

}  // namespace

PYBIND11_MODULE(_fraclag, m) {
  m.doc() = "Gauss-Laguerre approximation of (I + h L^alpha)^{-1} b";

  py::register_exception<OperatorError>(m, "OperatorError", PyExc_RuntimeError);
  py::register_exception<OracleError>(m, "OracleError", PyExc_RuntimeError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  py::class_<Params>(m, "Params")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("h"))
      .def_property_readonly("alpha", &Params::alpha)
      .def_property_readonly("h", &Params::h)
      .def_property_readonly("prefactor", &Params::prefactor)
      .def("__repr__", [](const Params& p) {
        return "Params(alpha=" + format_real(p.alpha()) + ", h=" + format_real(p.h()) + ")";
      });

  m.def(
      "gauss_laguerre",
      [](std::size_t n) {
        const QuadratureRule r = gauss_laguerre(n);
        return py::make_tuple(r.nodes, r.weights);
      },
      py::arg("n"), "Nodes and weights of the n-point rule.");

  m.def("f1", &f1, py::arg("x"), py::arg("lam"), py::arg("params"));
  m.def("f2", &f2, py::arg("x"), py::arg("lam"), py::arg("params"));
  m.def("exact_scalar_resolvent", &exact_scalar_resolvent, py::arg("lam"), py::arg("params"));

  m.def("n_star", &n_star, py::arg("params"));
  m.def("n_star_star", &n_star_star, py::arg("params"));
  m.def("eps1", &eps1, py::arg("n"), py::arg("params"));
  m.def("eps2", &eps2, py::arg("m"), py::arg("params"));
  m.def("standard_estimate", &standard_estimate, py::arg("n"), py::arg("params"));
  m.def("balanced_estimate", &balanced_estimate, py::arg("n"), py::arg("params"));
  m.def("truncated_estimate", &truncated_estimate, py::arg("n"), py::arg("params"));
  m.def("balance_m", &balance_m, py::arg("n"), py::arg("params"));

  py::class_<Plan>(m, "Plan")
      .def_readonly("n", &Plan::n)
      .def_readonly("m", &Plan::m)
      .def_readonly("k_n", &Plan::k_n)
      .def_readonly("k_m", &Plan::k_m)
      .def_readonly("j_n", &Plan::j_n)
      .def_readonly("j_m", &Plan::j_m)
      .def_readonly("s1", &Plan::s1)
      .def_readonly("s2", &Plan::s2)
      .def_readonly("predicted_error", &Plan::predicted_error)
      .def_readonly("inversions", &Plan::inversions);
  m.def("make_plan", &make_plan, py::arg("n"), py::arg("params"));

  m.def(
      "scalar_approx",
      [](double lam, const Params& p, const std::string& method, std::size_t n) {
        return scalar_approx(lam, p, mode_of(method, n));
      },
      py::arg("lam"), py::arg("params"), py::arg("method") = "standard", py::arg("n") = 30);

  m.def(
      "apply_diagonal",
      [](std::vector<double> entries, const Eigen::VectorXd& b, const Params& p,
         const std::string& method, std::size_t n, std::size_t threads) {
        const OperatorHandle op = OperatorHandle::diagonal(std::move(entries));
        py::gil_scoped_release release;
        return apply_resolvent(op, b, p, mode_of(method, n), ApplyOptions{threads});
      },
      py::arg("entries"), py::arg("b"), py::arg("params"), py::arg("method") = "standard",
      py::arg("n") = 30, py::arg("threads") = 0);

  m.def(
      "apply_dense",
      [](const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Params& p,
         const std::string& method, std::size_t n, std::size_t threads) {
        const OperatorHandle op = OperatorHandle::dense(a);
        py::gil_scoped_release release;
        return apply_resolvent(op, b, p, mode_of(method, n), ApplyOptions{threads});
      },
      py::arg("matrix"), py::arg("b"), py::arg("params"), py::arg("method") = "standard",
      py::arg("n") = 30, py::arg("threads") = 0);

  m.def("exact_diagonal_apply", &exact_diagonal_apply, py::arg("entries"), py::arg("b"),
        py::arg("params"));

  m.def(
      "representation_check",
      [](double lam, const Params& p, double tol) {
        const RepresentationCheck c = representation_check(lam, p, tol);
        return py::make_tuple(c.lhs, c.rhs, c.gap);
      },
      py::arg("lam"), py::arg("params"), py::arg("tol"));

  m.def(
      "scalar_sweep_csv",
      [](const Params& p, std::size_t n, double lo, double hi, std::size_t points,
         const std::string& method) {
        return sweep_table(error_sweep(p, n, log_grid(lo, hi, points), parse_method(method)))
            .to_string();
      },
      py::arg("params"), py::arg("n"), py::arg("lambda_min"), py::arg("lambda_max"),
      py::arg("points"), py::arg("method") = "standard");
}
