#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linearr/boundary_ring.hpp"
#include "linearr/cli.hpp"
#include "linearr/json_io.hpp"
#include "linearr/os_algebra.hpp"
#include "linearr/plumbing.hpp"
#include "linearr/random_arrangement.hpp"
#include "linearr/report.hpp"

namespace py = pybind11;
using namespace linearr;

namespace {

// Python objects cross the boundary as JSON text; exact integers survive
// because Python's json module reads arbitrary-size integers.
Json to_json(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return Json::parse(obj.cast<std::string>());
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Arrangement arrangement(const py::handle& obj) { return arrangement_from_json(to_json(obj)); }

py::object py_int(const Integer& x) { return py::int_(py::str(x.get_str())); }

py::list matrix_rows(const IntMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(py_int(m(r, c)));
    rows.append(row);
  }
  return rows;
}

IntMatrix int_matrix(const std::vector<std::vector<py::int_>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Integer(py::str(rows[r][c]).cast<std::string>());
  }
  return m;
}

std::vector<Rational> rationals(const py::handle& xs) {
  std::vector<Rational> out;
  for (const auto& x : to_json(xs)) out.push_back(rational_from_json(x));
  return out;
}

DoubledAlgebra doubled(const Arrangement& arr) { return double_algebra(os_algebra(arr)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of combinatorial line arrangements";

  py::register_exception<ArrangementError>(m, "ArrangementError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<InternalContradiction>(m, "InternalContradiction", PyExc_RuntimeError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);

  m.def("validate", [](const py::object& arr) { return to_python(arrangement_to_json(arrangement(arr))); },
        py::arg("arrangement"), "Normalized arrangement with implicit double points filled in.");

  m.def(
      "nbc",
      [](const py::object& arr) {
        std::vector<std::pair<int, int>> out;
        for (const auto& p : nbc_set(arrangement(arr))) out.emplace_back(p.j, p.k);
        return out;
      },
      py::arg("arrangement"));

  m.def(
      "homology",
      [](const py::object& obj) {
        const Arrangement arr = arrangement(obj);
        return to_python(h1_to_json(h1_boundary(arr), plumbing_matrix(plumbing_graph(arr))));
      },
      py::arg("arrangement"), "H_1 of the boundary manifold.");

  m.def("ring", [](const py::object& arr) { return to_python(ring_to_json(intersection_ring(arrangement(arr)))); },
        py::arg("arrangement"), "Intersection ring of the boundary manifold.");

  m.def("verify",
        [](const py::object& arr) { return to_python(isomorphism_to_json(verify_double_isomorphism(arrangement(arr)))); },
        py::arg("arrangement"));

  m.def(
      "report",
      [](const py::object& arr, std::uint64_t seed, int trials) {
        RunConfig config;
        config.seed = seed;
        config.trials = trials;
        return to_python(build_report(arrangement(arr), config));
      },
      py::arg("arrangement"), py::arg("seed") = 1, py::arg("trials") = kDefaultTrials);

  m.def(
      "betti",
      [](const py::object& arr, const py::object& a, const py::object& b) {
        const auto r = betti_all(doubled(arrangement(arr)), AomotoPoint{rationals(a), rationals(b)});
        return std::vector<std::size_t>(r.begin(), r.end());
      },
      py::arg("arrangement"), py::arg("a"), py::arg("b"),
      "Betti numbers of the Aomoto complex at (a, b); entries may be ints or 'p/q' strings.");

  m.def(
      "generic_betti",
      [](const py::object& arr, std::uint64_t seed, int trials) {
        const DoubledAlgebra dbl = doubled(arrangement(arr));
        std::vector<std::size_t> out;
        for (int k = 0; k <= 3; ++k) out.push_back(generic_betti(dbl, k, trials, seed));
        return out;
      },
      py::arg("arrangement"), py::arg("seed") = 1, py::arg("trials") = kDefaultTrials);

  m.def("classify", [](const py::object& arr) { return to_python(classification_json(arrangement(arr))); },
        py::arg("arrangement"));

  m.def(
      "random_arrangements",
      [](int lines, double density, std::uint64_t seed, int count) {
        py::list out;
        for (const auto& arr : random_arrangements(lines, density, seed, count))
          out.append(to_python(arrangement_to_json(arr)));
        return out;
      },
      py::arg("lines"), py::arg("density") = 0.5, py::arg("seed") = 1, py::arg("count") = 1);

  m.def(
      "snf",
      [](const std::vector<std::vector<py::int_>>& rows) {
        const SnfResult r = snf(int_matrix(rows));
        return py::make_tuple(matrix_rows(r.u), matrix_rows(r.s), matrix_rows(r.v));
      },
      py::arg("matrix"), "Smith normal form (U, S, V) with U A V = S.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"linearr"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
