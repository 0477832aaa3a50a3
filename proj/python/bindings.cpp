#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "coxgrowth/catalog.hpp"
#include "coxgrowth/census.hpp"
#include "coxgrowth/classify.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/word_oracle.hpp"

namespace py = pybind11;
using namespace coxgrowth;

namespace {

py::int_ to_py(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<mpz_class>& v) {
  py::list out;
  for (const auto& z : v) out.append(to_py(z));
  return out;
}

mpz_class from_py(const py::int_& i) { return mpz_class(py::str(i).cast<std::string>()); }

IntPolynomial poly_from_py(const std::vector<py::int_>& coeffs) {
  std::vector<mpz_class> v;
  for (const auto& c : coeffs) v.push_back(from_py(c));
  return IntPolynomial(std::move(v));
}

// Generators are given as 0-based indices; None means all of S.
SubsetMask mask_from(const CoxeterMatrix& m, const std::optional<std::vector<int>>& gens) {
  if (!gens) return m.full_mask();
  SubsetMask t;
  for (int g : *gens) {
    if (g < 0 || g >= m.rank()) throw py::index_error("generator index out of range");
    t = t | SubsetMask::singleton(g);
  }
  return t;
}

const CoxeterMatrix& catalog_matrix(const std::string& name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (e == nullptr) throw py::key_error("no catalog entry named " + name);
  return e->matrix;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact growth series of Coxeter groups";

  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<OracleHorizonError>(mod, "OracleHorizonError", PyExc_RuntimeError);

  py::class_<CoxeterMatrix>(mod, "CoxeterMatrix")
      .def_static("parse", &parse_coxeter_file, py::arg("text"))
      .def_static("load", &load_coxeter_file, py::arg("path"))
      .def_static("from_catalog", &catalog_matrix, py::arg("name"))
      .def_property_readonly("rank", &CoxeterMatrix::rank)
      .def("order",
           [](const CoxeterMatrix& m, int i, int j) -> std::optional<unsigned> {
             if (i < 0 || j < 0 || i >= m.rank() || j >= m.rank()) throw py::index_error();
             EdgeOrder o = m.order(i, j);
             if (o.is_infinite()) return std::nullopt;
             return o.value();
           },
           "m_ij for 0-based i, j; None for infinity")
      .def("serialize", [](const CoxeterMatrix& m) { return serialize(m); })
      .def("__eq__", [](const CoxeterMatrix& a, const CoxeterMatrix& b) { return a == b; })
      .def("__repr__", [](const CoxeterMatrix& m) { return "<CoxeterMatrix rank " + std::to_string(m.rank()) + ">"; });

  py::class_<RationalFunction>(mod, "RationalFunction")
      .def(py::init([](const std::vector<py::int_>& num, const std::vector<py::int_>& den) {
             return RationalFunction(poly_from_py(num), poly_from_py(den));
           }),
           py::arg("numerator"), py::arg("denominator") = std::vector<py::int_>{py::int_(1)})
      .def_property_readonly("numerator",
                             [](const RationalFunction& r) { return to_py(r.numerator().coefficients()); })
      .def_property_readonly("denominator",
                             [](const RationalFunction& r) { return to_py(r.denominator().coefficients()); })
      .def("series", [](const RationalFunction& r, int n) { return to_py(series_expand(r, n).coefficients); },
           py::arg("n"), "Power-series coefficients c_0..c_n")
      .def("substitute_t_inverse", &substitute_t_inverse)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def("__str__", &RationalFunction::to_string)
      .def("__repr__", [](const RationalFunction& r) { return "<RationalFunction " + r.to_string() + ">"; });

  mod.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });

  mod.def("classify",
          [](const CoxeterMatrix& m, std::optional<std::vector<int>> gens) {
            FiniteTypeInfo info = classify(m, mask_from(m, gens));
            py::dict d;
            d["finite"] = info.finite;
            d["type"] = info.label();
            if (info.finite) {
              d["longest_length"] = info.longest_length;
              d["order"] = info.order;
            }
            return d;
          },
          py::arg("matrix"), py::arg("generators") = py::none());

  mod.def("growth_series",
          [](const CoxeterMatrix& m, std::optional<std::vector<int>> gens) {
            return growth_series(m, mask_from(m, gens));
          },
          py::arg("matrix"), py::arg("generators") = py::none(), "W_T(t); all of S by default");

  mod.def("verify_identity",
          [](const CoxeterMatrix& m, int which) {
            IdentityReport r = verify_identity(GrowthTable(m), which);
            py::dict d;
            d["identity"] = which;
            d["verdict"] = to_string(r.verdict);
            d["by_construction"] = r.by_construction;
            d["lhs"] = r.lhs ? py::object(py::cast(*r.lhs)) : py::object(py::none());
            d["rhs"] = r.rhs ? py::object(py::cast(*r.rhs)) : py::object(py::none());
            d["note"] = r.note;
            return d;
          },
          py::arg("matrix"), py::arg("which"));

  mod.def("chi_coefficient",
          [](const CoxeterMatrix& m, std::vector<int> gens) { return chi_coefficient(m, mask_from(m, gens)); },
          py::arg("matrix"), py::arg("generators"));

  mod.def("sphere_sizes",
          [](const CoxeterMatrix& m, int horizon) { return bfs_enumerate(m, horizon).sphere_sizes(); },
          py::arg("matrix"), py::arg("horizon"), "Sphere sizes by braid-rewriting BFS");

  mod.def("chi_t",
          [](const CoxeterMatrix& m, const std::string& kind, int n) {
            return to_py(chi_t_truncated(m, parse_complex_kind(kind), n).coefficients);
          },
          py::arg("matrix"), py::arg("complex"), py::arg("max_length"),
          "Truncated Euler characteristic series of the coxeter, davis or tits complex");

  mod.def("run_cli",
          [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr)");
}
