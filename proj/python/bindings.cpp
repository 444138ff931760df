#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lagkit/cli.hpp"
#include "lagkit/constructor.hpp"
#include "lagkit/errors.hpp"
#include "lagkit/geometry.hpp"
#include "lagkit/report.hpp"
#include "lagkit/verifier.hpp"

namespace py = pybind11;
using namespace lagkit;

namespace {

std::string check_json(const ImmersionSpec& spec, int samples, std::uint64_t seed, double tol,
                       double tol_third, std::optional<std::vector<std::string>> checks,
                       std::optional<double> quadric) {
  VerifierConfig cfg;
  cfg.sampling.num_points = samples;
  cfg.sampling.seed = seed;
  cfg.tol.jet = tol;
  cfg.tol.third = tol_third;
  if (checks) cfg.only = std::set<std::string>(checks->begin(), checks->end());
  std::optional<AmbientQuadric> q;
  if (quadric) q = AmbientQuadric::from_curvature(*quadric);
  return report_json(run_suite(spec, cfg, q));
}

std::string crosscheck_to_json(const ImmersionSpec& spec, int order, std::optional<double> step,
                               int points, std::uint64_t seed) {
  CrosscheckConfig cfg;
  cfg.max_order = order;
  cfg.step = step;
  cfg.sampling.num_points = points;
  cfg.sampling.seed = seed;
  return crosscheck_json(crosscheck(spec, cfg));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lagrangian/Legendrian immersion verifier";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<ImmersionSpec>(m, "Spec")
      .def_readonly("name", &ImmersionSpec::name)
      .def_property_readonly("num_params", &ImmersionSpec::num_params)
      .def_property_readonly("ambient_dim", &ImmersionSpec::ambient_dim)
      .def_property_readonly("signature",
                             [](const ImmersionSpec& s) {
                               return std::pair(s.signature.n(), s.signature.s());
                             })
      .def_property_readonly("params",
                             [](const ImmersionSpec& s) {
                               std::vector<std::tuple<std::string, double, double>> out;
                               for (const auto& p : s.params) out.emplace_back(p.name, p.lower, p.upper);
                               return out;
                             })
      .def_readonly("expected_index", &ImmersionSpec::expected_index)
      .def_readonly("quadric", &ImmersionSpec::quadric_c)
      .def("serialize", &serialize_spec)
      .def("__eq__", [](const ImmersionSpec& a, const ImmersionSpec& b) {
        return structurally_equal(a, b);
      })
      .def("__repr__", [](const ImmersionSpec& s) {
        return "<Spec " + (s.name.empty() ? std::string("<unnamed>") : s.name) + ": " +
               std::to_string(s.num_params()) + " params into C^" +
               std::to_string(s.signature.n()) + "_" + std::to_string(s.signature.s()) + ">";
      });

  m.def("parse", [](const std::string& text) {
    ImmersionSpec s = parse_spec(text);
    s.validate();
    return s;
  }, py::arg("text"));
  m.def("catalog", [](const std::string& name) { return catalog(name); }, py::arg("name"));
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def("catalog_json", &catalog_json);
  m.def("circle_product", &circle_product, py::arg("psi"), py::arg("t_name") = "t");
  m.def("affine_image",
        [](const ImmersionSpec& s, double lambda, const std::vector<std::complex<double>>& offset) {
          std::vector<Complex> c;
          for (const auto& z : offset) c.push_back({z.real(), z.imag()});
          return affine_image(s, lambda, ComplexVec(c, s.signature));
        },
        py::arg("spec"), py::arg("scale"), py::arg("offset"));
  m.def("evaluate", [](const ImmersionSpec& s, const std::vector<double>& p) {
    return evaluate_map_values(s, p);
  }, py::arg("spec"), py::arg("point"));
  m.def("metric", [](const ImmersionSpec& s, const std::vector<double>& p) {
    const GeometryFrame f = build_frame(s, p, false);
    std::vector<std::vector<double>> g(f.dim, std::vector<double>(f.dim));
    for (std::size_t i = 0; i < f.dim; ++i)
      for (std::size_t j = 0; j < f.dim; ++j) g[i][j] = f.g(i, j);
    return g;
  }, py::arg("spec"), py::arg("point"));
  m.def("sectional_curvature", [](const ImmersionSpec& s, const std::vector<double>& p,
                                  std::size_t i, std::size_t j) {
    return sectional_curvature(build_frame(s, p, true), i, j);
  }, py::arg("spec"), py::arg("point"), py::arg("i"), py::arg("j"));
  m.def("_check_json", &check_json, py::arg("spec"), py::arg("samples") = 20,
        py::arg("seed") = 42, py::arg("tol") = 1e-8, py::arg("tol_third") = 1e-6,
        py::arg("checks") = py::none(), py::arg("quadric") = py::none());
  m.def("_crosscheck_json", &crosscheck_to_json, py::arg("spec"), py::arg("order") = 2,
        py::arg("step") = py::none(), py::arg("points") = 20, py::arg("seed") = 42);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
