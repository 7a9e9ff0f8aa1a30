// Python module `dimers`. Exact values cross the boundary as
// fractions.Fraction (or int when integral); reports come back as dicts.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dimers/closed_forms.hpp"
#include "dimers/cylindric.hpp"
#include "dimers/engine.hpp"
#include "dimers/error.hpp"
#include "dimers/factorization.hpp"
#include "dimers/graph_io.hpp"
#include "dimers/oracle.hpp"
#include "dimers/verify.hpp"

namespace py = pybind11;
using namespace dimers;

namespace {

py::object to_py(const Rational& r) {
  if (is_integer(r)) return py::int_(py::str(r.get_num().get_str(10)));
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(r.get_str(10)));
}

py::object to_py(const BigInt& z) { return py::int_(py::str(z.get_str(10))); }

py::object to_py(const nlohmann::json& j) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

/// Accepts int, Fraction or any object whose str() is "p/q" or an integer.
Rational from_py(const py::handle& value) {
  const auto text = py::str(value).cast<std::string>();
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw Error(ErrorCode::ParseError, "not an exact rational: '" + text + "'");
  r.canonicalize();
  return r;
}

std::vector<Rational> from_py_list(const py::sequence& seq) {
  std::vector<Rational> out;
  for (const auto& v : seq) out.push_back(from_py(v));
  return out;
}

py::list coefficients(const RatPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

SuiteOptions options(std::size_t limit, std::size_t cases, std::uint64_t seed, unsigned workers, bool force) {
  SuiteOptions o;
  o.oracle_limit = limit;
  o.random_cases = cases;
  o.seed = seed;
  o.workers = workers;
  o.force_oracle = force;
  return o;
}

WeightedMultigraph family_graph(const std::string& family, std::size_t m, std::size_t n) {
  if (family == "honeycomb") return fabric_to_multigraph(honeycomb_cylinder(m, n));
  if (family == "square-cylinder") return square_cylinder_graph(m, n);
  if (family == "grid") return rect_grid(m, n);
  if (family == "half-grid") return rect_grid(m, n, true);
  if (family == "g-prime") return build_g_prime(symmetric_cylinder(m, n));
  throw Error(ErrorCode::InvalidArgument, "unknown graph family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(dimers, mod) {
  mod.doc() = "Exact perfect-matching counts for fabric graphs";

  // Held for the interpreter's lifetime through the module attribute.
  static PyObject* error_type = nullptr;
  error_type = py::exception<Error>(mod, "DimersError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      exc.attr("code") = py::str(to_string(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  mod.attr("REPORT_VERSION") = kReportVersion;

  mod.def(
      "count_honeycomb",
      [](std::size_t m, std::size_t n, const py::object& x) {
        const Rational w = from_py(x);
        return to_py(count_cyl(honeycomb_cylinder(m, n), std::vector<Rational>(m, w)));
      },
      py::arg("m"), py::arg("n"), py::arg("x") = 1, "Weighted matchings of the honeycomb cylinder H_{m,n}.");

  mod.def(
      "honeycomb_polynomial", [](std::size_t m, std::size_t n) { return coefficients(match_polynomial(honeycomb_cylinder(m, n))); },
      py::arg("m"), py::arg("n"), "Coefficients of the matching polynomial of H_{m,n} in the vertical weight.");

  mod.def(
      "count_square_cylinder",
      [](std::size_t m, std::size_t n) { return to_py(count_matchings_profile(square_cylinder_graph(m, n))); },
      py::arg("m"), py::arg("n"));

  mod.def(
      "count_grid", [](std::size_t m, std::size_t n) { return to_py(count_matchings_profile(rect_grid(m, n))); },
      py::arg("m"), py::arg("n"));

  mod.def(
      "count_fabric",
      [](const py::sequence& matrices, const py::object& x) {
        std::vector<Strand> strands;
        for (const auto& rows : matrices) {
          std::vector<std::vector<Rational>> entries;
          for (const auto& row : rows.cast<py::sequence>()) entries.push_back(from_py_list(row.cast<py::sequence>()));
          const std::size_t cols = entries.empty() ? 0 : entries.front().size();
          Matrix a(entries.size(), cols);
          for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].size() != cols) throw Error(ErrorCode::SizeMismatch, "ragged biadjacency matrix");
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = entries[i][j];
          }
          strands.push_back(strand_from_matrix(a));
        }
        if (x.is_none()) return to_py(count_rect(FabricGraph(FabricKind::Rectangular, std::move(strands))));
        const auto weights = from_py_list(x.cast<py::sequence>());
        std::vector<std::optional<Rational>> vertical(weights.begin(), weights.end());
        FabricGraph f(FabricKind::Cylindrical, std::move(strands), vertical);
        return to_py(count_cyl(f, weights));
      },
      py::arg("strands"), py::arg("x") = py::none(),
      "Count a fabric given one biadjacency matrix per strand; pass x to close it into a cylinder.");

  mod.def(
      "count_graph_json",
      [](const std::string& text, std::size_t limit) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
        const auto g = graph_from_json(j);
        const auto p = count_matchings(g, limit);
        return p.degree() <= 0 ? to_py(p.coefficient(0)) : py::object(coefficients(p));
      },
      py::arg("text"), py::arg("limit") = kOracleVertexLimit,
      "Exhaustive count of a graph in JSON form; a coefficient list if it carries formal weights.");

  mod.def(
      "graph_json",
      [](const std::string& family, std::size_t m, std::size_t n) { return to_py(to_json(family_graph(family, m, n))); },
      py::arg("family"), py::arg("m"), py::arg("n"));

  mod.def("tfk", [](std::size_t m, std::size_t n) { return tfk(m, n).float_value; }, py::arg("m"), py::arg("n"));
  mod.def(
      "honeycomb_formula", [](std::size_t m, std::size_t n, double x) { return honeycomb_formula(m, n, x).float_value; },
      py::arg("m"), py::arg("n"), py::arg("x") = 1.0);

  mod.def(
      "cliffs", [](std::size_t m, std::size_t n, std::size_t s) { return to_py(cliff_count(m, n, s).exact); },
      py::arg("m"), py::arg("n"), py::arg("s"));
  mod.def(
      "cylindric_partitions", [](std::size_t m, std::size_t s, std::size_t n) { return to_py(enumerate_cylindric(m, s, n)); },
      py::arg("m"), py::arg("s"), py::arg("n"));

  mod.def(
      "grid_chain",
      [](std::size_t m, std::size_t n) {
        const auto r = grid_chain_check(m, n);
        py::dict d;
        d["cylinder"] = to_py(r.cylinder);
        d["half_grid"] = to_py(r.half_grid);
        d["g_prime"] = to_py(r.g_prime);
        d["small_grid"] = to_py(r.small_grid);
        d["large_grid"] = to_py(r.large_grid);
        d["ok"] = r.cylinder_factorization && r.grid_factorization && r.ratio;
        return d;
      },
      py::arg("m"), py::arg("n"));

  mod.def("eigen_families", &eigen_families);
  mod.def("eigenvalues", &eigen_family_values, py::arg("family"), py::arg("n"));

  mod.def("suite_names", &suite_names);
  mod.def(
      "run_suite",
      [](const std::string& name, std::size_t limit, std::size_t cases, std::uint64_t seed, unsigned workers, bool force) {
        Report report;
        {
          py::gil_scoped_release release;
          report = run_suite(name, options(limit, cases, seed, workers, force));
        }
        report.command = "verify " + name;
        return to_py(report.to_json(false));
      },
      py::arg("name"), py::arg("limit") = 24, py::arg("cases") = 200, py::arg("seed") = 20231101, py::arg("workers") = 0,
      py::arg("force_oracle") = false, "Run a verification suite and return its JSON report as a dict.");
}
