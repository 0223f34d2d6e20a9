#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symtangle/dicke.hpp"
#include "symtangle/error.hpp"
#include "symtangle/marginals.hpp"
#include "symtangle/measures.hpp"
#include "symtangle/sweep.hpp"
#include "symtangle/verify.hpp"

namespace py = pybind11;
using namespace symtangle;

namespace {

using DenseArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

PyObject* g_error_type = nullptr;

py::array_t<double> to_numpy(const SmallMatrix& m) {
  py::array_t<double> out({m.dim(), m.dim()});
  auto view = out.mutable_unchecked<2>();
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) view(r, c) = m(r, c);
  return out;
}

SmallMatrix from_numpy(const DenseArray& arr, int dim) {
  if (arr.ndim() != 2 || arr.shape(0) != dim || arr.shape(1) != dim)
    throw Error(ErrorCode::WrongDimension, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
  return SmallMatrix(dim, std::span<const double>(arr.data(), static_cast<std::size_t>(dim * dim)));
}

std::string params_repr(const DickeParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "DickeParams(n=" << p.n_qubits() << ", k=" << p.degeneracy() << ", a=" << p.non_orthogonality() << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_symtangle, m) {
  m.doc() = "Entanglement measures of two-spinor symmetric multiqubit states";

  g_error_type = PyErr_NewException("symtangle.SymtangleError", PyExc_ValueError, nullptr);
  m.attr("SymtangleError") = py::handle(g_error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_steal<py::object>(PyObject_CallFunction(g_error_type, "s", e.what()));
      if (!inst) return;
      inst.attr("code") = py::str(std::string(to_string(e.code())));
      PyErr_SetObject(g_error_type, inst.ptr());
    }
  });

  py::class_<DickeParams>(m, "DickeParams")
      .def(py::init<int, int, double>(), py::arg("n"), py::arg("k"), py::arg("a"))
      .def_property_readonly("n", &DickeParams::n_qubits)
      .def_property_readonly("k", &DickeParams::degeneracy)
      .def_property_readonly("a", &DickeParams::non_orthogonality)
      .def_property_readonly("b", &DickeParams::complement)
      .def(py::self == py::self)
      .def("__repr__", &params_repr);

  m.def(
      "amplitudes",
      [](int n, int k, double a) {
        const auto amps = amplitudes(DickeParams(n, k, a));
        return py::array_t<double>(static_cast<py::ssize_t>(amps.beta.size()), amps.beta.data());
      },
      py::arg("n"), py::arg("k"), py::arg("a"), "Normalized amplitudes beta_0..beta_k.");

  m.def(
      "cg_coefficients",
      [](int n, int r) {
        const auto c = cg_coefficients(n, r);
        return py::make_tuple(c.c_plus, c.c_zero, c.c_minus);
      },
      py::arg("n"), py::arg("r"), "(c_plus, c_zero, c_minus) for splitting off two qubits.");

  py::class_<TwoQubitMarginal>(m, "TwoQubitMarginal")
      .def_readonly("A", &TwoQubitMarginal::a_el)
      .def_readonly("B", &TwoQubitMarginal::b_el)
      .def_readonly("C", &TwoQubitMarginal::c_el)
      .def_readonly("D", &TwoQubitMarginal::d_el)
      .def_readonly("E", &TwoQubitMarginal::e_el)
      .def_readonly("F", &TwoQubitMarginal::f_el)
      .def_readonly("params", &TwoQubitMarginal::params)
      .def("matrix", [](const TwoQubitMarginal& t) { return to_numpy(marginal_matrix(t)); })
      .def("partial_transpose", [](const TwoQubitMarginal& t) { return to_numpy(partial_transpose(t)); })
      .def("single", [](const TwoQubitMarginal& t) { return to_numpy(single_qubit_marginal(t).m); });

  m.def(
      "two_qubit_marginal", [](int n, int k, double a) { return two_qubit_marginal(DickeParams(n, k, a)); },
      py::arg("n"), py::arg("k"), py::arg("a"));

  m.def(
      "concurrence", [](const DenseArray& rho) { return concurrence_two_qubit(from_numpy(rho, 4)); },
      py::arg("rho"), "Concurrence of a real 4x4 two-qubit density matrix.");
  m.def(
      "negativity", [](const DenseArray& rho) { return negativity_two_qubit(from_numpy(rho, 4)); },
      py::arg("rho"), "Doubled negativity of a real 4x4 two-qubit density matrix.");
  m.def(
      "one_vs_rest",
      [](const DenseArray& rho1) { return one_vs_rest(SingleQubitMarginal{from_numpy(rho1, 2)}); },
      py::arg("rho1"), "2 sqrt(det rho1) for a real 2x2 single-qubit marginal.");

  py::class_<TangleRecord>(m, "TangleRecord")
      .def_readonly("params", &TangleRecord::params)
      .def_readonly("c1_sq", &TangleRecord::c1_sq)
      .def_readonly("c2_sq", &TangleRecord::c2_sq)
      .def_readonly("tau", &TangleRecord::tau)
      .def_readonly("n2", &TangleRecord::n2)
      .def_readonly("xi", &TangleRecord::xi)
      .def("__repr__", [](const TangleRecord& r) {
        std::ostringstream os;
        os.precision(12);
        os << "TangleRecord(" << params_repr(r.params) << ", c1_sq=" << r.c1_sq << ", c2_sq=" << r.c2_sq
           << ", tau=" << r.tau << ", n2=" << r.n2 << ", xi=" << r.xi << ")";
        return os.str();
      });

  m.def(
      "tangle_record", [](int n, int k, double a) { return tangle_record(DickeParams(n, k, a)); }, py::arg("n"),
      py::arg("k"), py::arg("a"));

  m.def(
      "sweep_csv",
      [](std::vector<int> n_values, std::optional<std::vector<int>> k_values, double a_min, double a_max,
         int a_steps, int precision, int jobs) {
        SweepConfig cfg;
        cfg.n_values = std::move(n_values);
        cfg.k_values = std::move(k_values);
        cfg.a_min = a_min;
        cfg.a_max = a_max;
        cfg.a_steps = a_steps;
        cfg.precision = precision;
        const auto grid = build_grid(cfg);
        std::ostringstream out, diag;
        {
          py::gil_scoped_release release;
          write_csv(out, diag, compute_records(grid.cells, jobs), precision);
        }
        return out.str();
      },
      py::arg("n_values") = std::vector<int>{10, 100}, py::arg("k_values") = py::none(), py::arg("a_min") = 0.0,
      py::arg("a_max") = 1.0, py::arg("a_steps") = 101, py::arg("precision") = 12, py::arg("jobs") = 1,
      "CSV text identical to the command-line sweep. Inadmissible (N, k) pairs are skipped.");

  py::class_<PropertyResult>(m, "PropertyResult")
      .def_readonly("name", &PropertyResult::name)
      .def_readonly("passed", &PropertyResult::passed)
      .def_readonly("evaluated", &PropertyResult::evaluated)
      .def_readonly("violations", &PropertyResult::violations)
      .def_readonly("detail", &PropertyResult::detail);

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("properties", &CheckReport::properties)
      .def_property_readonly("passed", &CheckReport::passed)
      .def("property", &CheckReport::property, py::arg("name"), py::return_value_policy::reference_internal);

  m.def(
      "check",
      [](int n_max, int a_steps, double tol, std::vector<int> spot_n, int jobs) {
        CheckOptions opts;
        opts.n_max = n_max;
        opts.a_steps = a_steps;
        opts.tol = tol;
        opts.spot_n = std::move(spot_n);
        opts.jobs = jobs;
        py::gil_scoped_release release;
        return run_check(opts);
      },
      py::arg("n_max") = 12, py::arg("a_steps") = 11, py::arg("tol") = 1e-9, py::arg("spot_n") = std::vector<int>{},
      py::arg("jobs") = 1);

  py::class_<OracleCell>(m, "OracleCell")
      .def_readonly("n", &OracleCell::n)
      .def_readonly("k", &OracleCell::k)
      .def_readonly("worst_a", &OracleCell::worst_a)
      .def_property_readonly("worst", &OracleCell::worst);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("tol", &OracleReport::tol)
      .def_readonly("cells", &OracleReport::cells)
      .def_property_readonly("passed", &OracleReport::passed)
      .def_property_readonly("max_deviation", [](const OracleReport& r) { return r.worst_cell().worst(); });

  m.def(
      "oracle",
      [](int n_max, int a_steps, double tol, int cap) {
        OracleOptions opts{n_max, a_steps, tol, cap};
        py::gil_scoped_release release;
        return run_oracle(opts);
      },
      py::arg("n_max") = 12, py::arg("a_steps") = 11, py::arg("tol") = 1e-10, py::arg("cap") = 12);
}
