#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "confarea/area.hpp"
#include "confarea/chebyshev.hpp"
#include "confarea/cli.hpp"
#include "confarea/error.hpp"
#include "confarea/interpolation.hpp"
#include "confarea/json_io.hpp"
#include "confarea/quadrature.hpp"
#include "confarea/regions.hpp"
#include "confarea/verify.hpp"

namespace py = pybind11;
using namespace confarea;

namespace {

FormalSeries series_from_pairs(const std::vector<std::pair<int, Complex>>& terms, int min_exp, int max_exp) {
  return FormalSeries::make(terms, min_exp, max_exp);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Areas of conformal images, Chebyshev/Bergman orthogonality and interpolation rates";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_RuntimeError);
  py::register_exception<PrincipalValueError>(m, "PrincipalValueError", PyExc_RuntimeError);

  py::enum_<AreaMethod>(m, "AreaMethod")
      .value("series", AreaMethod::series)
      .value("closed_form", AreaMethod::closed_form)
      .value("quadrature", AreaMethod::quadrature);
  py::enum_<MapOrientation>(m, "MapOrientation")
      .value("interior_map", MapOrientation::interior_map)
      .value("exterior_map", MapOrientation::exterior_map);
  py::enum_<FunctionalVariant>(m, "FunctionalVariant")
      .value("coefficient", FunctionalVariant::coefficient)
      .value("quadrature", FunctionalVariant::quadrature);
  py::enum_<TailMode>(m, "TailMode").value("none", TailMode::none).value("euler_maclaurin", TailMode::euler_maclaurin);
  py::enum_<NodalForm>(m, "NodalForm")
      .value("product", NodalForm::product)
      .value("joukowski", NodalForm::joukowski)
      .value("chebyshev", NodalForm::chebyshev);
  py::enum_<ChebyshevFamily>(m, "ChebyshevFamily").value("U", ChebyshevFamily::U).value("P", ChebyshevFamily::P);

  py::class_<FormalSeries>(m, "FormalSeries")
      .def(py::init(&series_from_pairs), py::arg("terms"), py::arg("min_exp"), py::arg("max_exp"))
      .def_property_readonly("min_exp", &FormalSeries::min_exp)
      .def_property_readonly("max_exp", &FormalSeries::max_exp)
      .def_property_readonly("terms", &FormalSeries::terms)
      .def("coeff", &FormalSeries::coeff)
      .def("__call__", [](const FormalSeries& s, Complex z) { return evaluate(s, z); })
      .def("derivative", [](const FormalSeries& s) { return derivative(s); })
      .def("__eq__", [](const FormalSeries& a, const FormalSeries& b) { return a == b; })
      .def("__repr__", [](const FormalSeries& s) { return "FormalSeries(" + to_json(s).dump() + ")"; });

  m.def("cauchy_product", &cauchy_product, py::arg("f"), py::arg("g"), py::arg("trunc"));
  m.def("hadamard_product", &hadamard_product, py::arg("f"), py::arg("g"), py::arg("trunc"));
  m.def("binomial_expansion", [](int m_, int trunc) { return binomial_expansion(m_, trunc).terms; },
        py::arg("m"), py::arg("trunc"));
  m.def("log_derivative_coeffs", &log_derivative_coeffs, py::arg("f"), py::arg("trunc"));

  py::class_<AreaReport>(m, "AreaReport")
      .def_readonly("value", &AreaReport::value)
      .def_readonly("method", &AreaReport::method)
      .def_readonly("order", &AreaReport::order)
      .def_readonly("est_error", &AreaReport::est_error)
      .def_readonly("warnings", &AreaReport::warnings)
      .def("to_json", [](const AreaReport& r) { return to_json(r).dump(); })
      .def("__repr__", [](const AreaReport& r) { return "AreaReport(" + to_json(r).dump() + ")"; });

  py::class_<LaurentTail>(m, "LaurentTail")
      .def(py::init<std::vector<Complex>>(), py::arg("b"))
      .def_property_readonly("coefficients", &LaurentTail::coefficients)
      .def("__call__", &LaurentTail::map);

  py::class_<TailCheck>(m, "TailCheck")
      .def_readonly("admissible", &TailCheck::admissible)
      .def_readonly("slack", &TailCheck::slack);

  m.def("gronwall_area", &gronwall_area, py::arg("tail"), py::arg("r"));
  m.def("gronwall_area_quadrature", &gronwall_area_quadrature, py::arg("tail"), py::arg("r"),
        py::arg("nodes") = 512);
  m.def("univalent_tail_check", &univalent_tail_check, py::arg("tail"));
  m.def("annulus_norm", &annulus_norm, py::arg("f"), py::arg("r"), py::arg("R"));
  m.def("circle_mean_square", &circle_mean_square, py::arg("f"), py::arg("r"));
  m.def("circle_mean_square_quadrature", &circle_mean_square_quadrature, py::arg("f"), py::arg("r"),
        py::arg("nodes") = 256);
  m.def("radial_area", &radial_area, py::arg("f"), py::arg("r"), py::arg("orientation"));
  m.def("green_boundary_area", &green_boundary_area, py::arg("f"), py::arg("r"), py::arg("nodes") = 256);
  m.def("dirichlet_area", &dirichlet_area, py::arg("f"));
  m.def("double_contour_functional", &double_contour_functional, py::arg("f"),
        py::arg("variant") = FunctionalVariant::coefficient, py::arg("nodes") = 64);
  m.def("area_from_functional", &area_from_functional, py::arg("functional"));
  m.def("zfprime_area", &zfprime_area, py::arg("f"), py::arg("trunc"));

  m.def("gamma", &confarea::gamma, py::arg("x"));
  m.def("lemniscate_tail", &lemniscate_tail, py::arg("m"), py::arg("trunc"));
  m.def("lemniscate_area_series", &lemniscate_area_series, py::arg("m"), py::arg("trunc") = 200,
        py::arg("mode") = TailMode::euler_maclaurin);
  m.def("lemniscate_area_closed", &lemniscate_area_closed, py::arg("m"));
  m.def("lemniscate_area_polar", &lemniscate_area_polar, py::arg("m"), py::arg("order") = 32);
  m.def("binomial_sq_sum", [](double a) { const auto r = binomial_sq_sum(a); return py::make_tuple(r.numeric, r.closed_form); },
        py::arg("alpha"));
  m.def("binomial_sq_weighted_sum",
        [](double a) { const auto r = binomial_sq_weighted_sum(a); return py::make_tuple(r.numeric, r.closed_form); },
        py::arg("alpha"));
  m.def("cardioid_area", &cardioid_area, py::arg("order") = 64, py::arg("scale") = 0.5);
  m.def("pointmass_I", &pointmass_I, py::arg("zp"));
  m.def("pointmass_J", &pointmass_J, py::arg("zp"));
  m.def("pointmass_I_oracle", &pointmass_I_oracle, py::arg("zp"));
  m.def("pointmass_J_oracle", &pointmass_J_oracle, py::arg("zp"));

  py::class_<EllipseGeometry>(m, "EllipseGeometry")
      .def_static("from_c", &EllipseGeometry::from_c, py::arg("c"))
      .def_property_readonly("c", &EllipseGeometry::c)
      .def_property_readonly("a", &EllipseGeometry::a)
      .def_property_readonly("b", &EllipseGeometry::b)
      .def_property_readonly("rho", &EllipseGeometry::rho);
  m.def("chebyshev_T", &chebyshev_T, py::arg("n"), py::arg("z"));
  m.def("chebyshev_U", &chebyshev_U, py::arg("n"), py::arg("z"));
  m.def("bergman_norm_U", &bergman_norm_U, py::arg("n"), py::arg("geom"));
  m.def("orthonormal_P", &orthonormal_P, py::arg("n"), py::arg("geom"), py::arg("z"));
  m.def("gram_matrix", &gram_matrix, py::arg("family"), py::arg("nmax"), py::arg("geom"), py::arg("order") = 32);
  m.def("tprime_area", &tprime_area, py::arg("n"), py::arg("geom"));
  m.def("tprime_area_quadrature", &tprime_area_quadrature, py::arg("n"), py::arg("geom"), py::arg("order") = 32);

  m.def("chebyshev_nodes", [](int n) { return chebyshev_nodes(n).nodes(); }, py::arg("n"));
  m.def("joukowski", &joukowski, py::arg("w"));
  m.def("inverse_joukowski", &inverse_joukowski, py::arg("z"));
  m.def("nodal_polynomial", &nodal_polynomial, py::arg("n"), py::arg("z"), py::arg("form") = NodalForm::chebyshev);
  m.def(
      "lagrange_interpolate",
      [](std::function<Complex(Complex)> f, double R, int n, Complex z) {
        return lagrange_interpolate(AnalyticSampler(std::move(f), R), n, z);
      },
      py::arg("f"), py::arg("R"), py::arg("n"), py::arg("z"));
  m.def(
      "interpolation_error_curve",
      [](std::function<Complex(Complex)> f, double R, const std::vector<int>& ns,
         std::optional<std::vector<double>> pts) {
        const auto eval = pts ? *pts : default_eval_points();
        std::vector<std::pair<int, double>> out;
        for (const auto& p : interpolation_error_curve(AnalyticSampler(std::move(f), R), ns, eval)) {
          out.emplace_back(p.n, p.max_error);
        }
        return out;
      },
      py::arg("f"), py::arg("R"), py::arg("n_range"), py::arg("eval_points") = py::none());
  m.def(
      "convergence_rate",
      [](const std::vector<std::pair<int, double>>& curve) {
        std::vector<ErrorPoint> pts;
        for (const auto& [n, e] : curve) pts.push_back({n, e});
        return convergence_rate(pts).log_R;
      },
      py::arg("curve"));
  m.def("expected_log_R", &expected_log_R, py::arg("singularity"));

  m.def("curve_area_shoelace", [](const std::vector<Complex>& pts) { return curve_area_shoelace(pts); },
        py::arg("points"));
  m.def("principal_value_radial", &principal_value_radial, py::arg("g"), py::arg("singularity"),
        py::arg("nodes_per_panel") = 16, py::arg("lower") = 0.0, py::arg("upper") = 1.0);

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name) {
        py::list out;
        for (const auto& r : run_suite(name)) {
          py::dict d;
          d["suite"] = r.suite;
          d["name"] = r.name;
          d["residual"] = r.residual;
          d["tolerance"] = r.tolerance;
          d["pass"] = r.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("name"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
