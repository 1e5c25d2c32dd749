// Python bindings for the main operations: disk geometry, quadrature,
// symbols, Berezin transforms, Toeplitz truncations, and the Schur-test
// verification routines.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergman/berezin.hpp"
#include "bergman/disk_geometry.hpp"
#include "bergman/scenario.hpp"
#include "bergman/schur.hpp"
#include "bergman/symbols.hpp"
#include "bergman/toeplitz.hpp"

namespace py = pybind11;
using namespace bergman;

namespace {

std::vector<std::vector<Complex>> matrix_entries(const TruncatedOperator& op) {
  std::vector<std::vector<Complex>> rows(op.dimension());
  for (int i = 0; i < op.dimension(); ++i) {
    rows[i].resize(op.dimension());
    for (int j = 0; j < op.dimension(); ++j) rows[i][j] = op.at(i, j);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bergman-space Toeplitz product diagnostics";

  m.def("mobius", [](Complex w, Complex z) { return mobius(DiskPoint(w), DiskPoint(z)); });
  m.def("bergman_kernel",
        [](Complex z, Complex w) { return bergman_kernel(DiskPoint(z), DiskPoint(w)); });
  m.def("normalized_kernel",
        [](Complex z, Complex w) { return normalized_kernel(DiskPoint(z), DiskPoint(w)); });
  m.def("bergman_metric",
        [](Complex z, Complex w) { return bergman_metric(DiskPoint(z), DiskPoint(w)); });
  m.def("hyperbolic_disk", [](Complex z, double delta) {
    HyperbolicDisk d = hyperbolic_disk(DiskPoint(z), delta);
    return py::make_tuple(d.center, d.radius);
  });

  py::class_<QuadratureRule>(m, "QuadratureRule")
      .def_static("build", &QuadratureRule::build, py::arg("n_radial"),
                  py::arg("n_angular"))
      .def_static("build_graded", &QuadratureRule::build_graded,
                  py::arg("n_radial"), py::arg("n_angular"), py::arg("grading"))
      .def_property_readonly("node_count", &QuadratureRule::node_count);

  m.def("integrate",
        [](const std::function<Complex(Complex)>& f, const QuadratureRule& rule) {
          return integrate(f, rule);
        });
  m.def("integrate_subdisk",
        [](Complex center, double radius, const std::function<Complex(Complex)>& f,
           const QuadratureRule& rule) {
          return integrate_subdisk(center, radius, f, rule);
        });

  py::class_<Symbol>(m, "Symbol")
      .def_static("from_json", &Symbol::from_json)
      .def_static("polynomial",
                  [](std::vector<Complex> c) { return Symbol::polynomial(std::move(c)); })
      .def("eval", [](const Symbol& s, Complex z) { return s.eval(z); })
      .def("l2_norm", [](const Symbol& s, const QuadratureRule& r) { return l2_norm(s, r); });

  m.def("berezin_transform",
        [](const std::function<Complex(Complex)>& u, Complex w, const QuadratureRule& rule) {
          return berezin_transform(u, DiskPoint(w), rule);
        });
  m.def("berezin_mod_squared",
        [](const Symbol& s, Complex w, const QuadratureRule& rule) {
          return berezin_mod_squared(s, DiskPoint(w), rule);
        });
  m.def("sarason_quantity",
        [](const Symbol& f, const Symbol& g, Complex w, const QuadratureRule& rule) {
          return sarason_quantity({f, g}, DiskPoint(w), rule);
        });
  m.def("sarason_sup",
        [](const Symbol& f, const Symbol& g, int levels, int angles,
           const QuadratureRule& rule) {
          SarasonReport rep =
              sarason_sup({f, g}, RadiusSchedule::dyadic(levels, angles), rule);
          return py::make_tuple(rep.sup_estimate, rep.boundary_trend);
        });

  m.def("toeplitz_matrix",
        [](const Symbol& s, int n) { return matrix_entries(toeplitz_matrix(s, n)); });
  m.def("quadrature_matrix",
        [](const Symbol& s, int n, const QuadratureRule& rule) {
          return matrix_entries(quadrature_matrix(s, n, rule));
        });
  m.def("product_norm",
        [](const Symbol& f, const Symbol& g, int n, const QuadratureRule& rule) {
          auto mat = [&](const Symbol& s) {
            return (s.is_polynomial() && s.degree() < n)
                       ? toeplitz_matrix(s, n)
                       : quadrature_matrix(s, n, rule);
          };
          return operator_norm(product(mat(f), mat(g).adjoint()));
        });
  m.def("kernel_action",
        [](const Symbol& f, const Symbol& g, Complex z, Complex w, int n,
           const QuadratureRule& rule) {
          auto [lhs, rhs] =
              kernel_action({f, g}, DiskPoint(z), DiskPoint(w), n, rule);
          return py::make_tuple(lhs, rhs);
        });
  m.def("hs_tail_norm",
        [](const Symbol& f, const Symbol& g, double r, const QuadratureRule& rule) {
          return hs_tail_norm({f, g}, r, rule);
        });

  py::class_<SchurParameters>(m, "SchurParameters")
      .def(py::init<double, double, double, double>(), py::arg("epsilon"),
           py::arg("p") = 2.0, py::arg("delta") = 0.25, py::arg("r_cut") = 0.0)
      .def_readonly("epsilon", &SchurParameters::epsilon)
      .def_readonly("p", &SchurParameters::p)
      .def_readonly("delta", &SchurParameters::delta);

  m.def("s_operator",
        [](const Symbol& s, Complex z, const SchurParameters& p, const QuadratureRule& r) {
          return s_operator(s, DiskPoint(z), p, r);
        });
  m.def("lemma1_ratio",
        [](const Symbol& s, Complex z, const SchurParameters& p, const QuadratureRule& r) {
          return lemma1_ratio(s, DiskPoint(z), p, r);
        });
  m.def("schur_ratio",
        [](const Symbol& f, const Symbol& g, Complex u, const SchurParameters& p,
           const QuadratureRule& r) {
          return schur_ratio({f, g}, DiskPoint(u), p, r);
        });
  m.def("luecking_k",
        [](Complex w, Complex z, const SchurParameters& p, const QuadratureRule& r) {
          LueckingResult res = luecking_k(DiskPoint(w), DiskPoint(z), p, r);
          return py::make_tuple(res.k, res.bound_ratio);
        });

  m.def("run_scenario", [](const std::string& mode, const std::string& scenario_json) {
    Scenario s = Scenario::from_json(scenario_json);
    DiagnosticReport rep;
    if (mode == "boundedness") rep = run_boundedness(s);
    else if (mode == "compactness") rep = run_compactness(s);
    else if (mode == "corollary") rep = run_corollary_mode(s);
    else throw std::invalid_argument("unknown mode " + mode);
    return rep.json;
  });
}
