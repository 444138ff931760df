#include "lagkit/constructor.hpp"

#include <numbers>

#include "lagkit/errors.hpp"

namespace lagkit {

ImmersionSpec circle_product(const ImmersionSpec& psi, const std::string& t_name) {
  psi.validate();
  if (psi.num_params() + 1 != psi.ambient_dim()) {
    throw UsageError("circle_product needs an (n-1)-parameter map into C^n; got " +
                     std::to_string(psi.num_params()) + " parameters in C^" +
                     std::to_string(psi.ambient_dim()));
  }
  for (const auto& p : psi.params) {
    if (p.name == t_name) throw UsageError("parameter name '" + t_name + "' already in use");
  }

  ImmersionSpec out;
  out.name = psi.name.empty() ? std::string() : psi.name + "_circle_product";
  out.signature = psi.signature;
  out.quadric_c = psi.quadric_c;
  if (psi.expected_index) {
    const bool timelike_t = psi.quadric_c && *psi.quadric_c < 0.0;
    out.expected_index = *psi.expected_index + (timelike_t ? 1 : 0);
  }
  out.params.push_back({t_name, 0.0, 2.0 * std::numbers::pi});
  out.params.insert(out.params.end(), psi.params.begin(), psi.params.end());
  const ExprPtr phase = call(Function::exp, binary(BinaryOp::mul, imaginary_unit(), param(0, t_name)));
  for (const auto& c : psi.components) {
    out.components.push_back(binary(BinaryOp::mul, phase, shift_parameters(c, 1)));
  }
  out.validate();
  return out;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  return {
      {"real_circle_S3",
       "great circle (cos u, sin u) in S^3; Legendrian",
       R"(name real_circle_S3;
params u:[0,6.283185307179586];
signature 2 0;
expected_index 0;
quadric 1;
map cos(u), sin(u);
)",
       {"legendrian", "horizontal", "umbilical", "index", "gauss", "codazzi"},
       {}},
      {"clifford_torus",
       "exp(i*t) * (cos u, sin u) in C^2; flat spherical Lagrangian torus",
       R"(name clifford_torus;
params t:[0,6.283185307179586], u:[0,6.283185307179586];
signature 2 0;
expected_index 0;
quadric 1;
map exp(i*t)*cos(u), exp(i*t)*sin(u);
)",
       {"lagrangian", "sphere_fit", "cubic_symmetry", "structure.v_tangent", "structure.v_unit",
        "structure.h_zv", "structure.h_vv", "structure.nabla_v", "product_metric", "umbilical",
        "index", "gauss", "codazzi"},
       {}},
      {"real_sphere_S5",
       "real unit 2-sphere (cos u cos v, cos u sin v, sin u) in S^5; Legendrian",
       R"(name real_sphere_S5;
params u:[-1.2,1.2], v:[0,6.283185307179586];
signature 3 0;
expected_index 0;
quadric 1;
map cos(u)*cos(v), cos(u)*sin(v), sin(u);
)",
       {"legendrian", "horizontal", "umbilical", "index", "gauss", "codazzi"},
       {}},
      {"product_S1xS2",
       "exp(i*t) * real_sphere_S5; spherical Lagrangian S^1 x S^2 in C^3",
       R"(name product_S1xS2;
params t:[0,6.283185307179586], u:[-1.2,1.2], v:[0,6.283185307179586];
signature 3 0;
expected_index 0;
quadric 1;
map exp(i*t)*(cos(u)*cos(v)), exp(i*t)*(cos(u)*sin(v)), exp(i*t)*sin(u);
)",
       {"lagrangian", "sphere_fit", "cubic_symmetry", "structure.v_tangent", "structure.v_unit",
        "structure.h_zv", "structure.h_vv", "structure.nabla_v", "product_metric", "umbilical",
        "index", "gauss", "codazzi"},
       {}},
      {"minimal_legendrian_torus_S5",
       "(e^{iu}, e^{iv}, e^{-i(u+v)})/sqrt(3) in S^5; minimal Legendrian torus",
       R"(name minimal_legendrian_torus_S5;
params u:[0,6.283185307179586], v:[0,6.283185307179586];
signature 3 0;
expected_index 0;
quadric 1;
map exp(i*u)/sqrt(3), exp(i*v)/sqrt(3), exp(-i*(u + v))/sqrt(3);
)",
       {"legendrian", "horizontal", "umbilical", "index", "gauss", "codazzi"},
       {}},
      {"product_S1xT2",
       "exp(i*t) * minimal_legendrian_torus_S5; spherical Lagrangian 3-torus in C^3",
       R"(name product_S1xT2;
params t:[0,6.283185307179586], u:[0,6.283185307179586], v:[0,6.283185307179586];
signature 3 0;
expected_index 0;
quadric 1;
map exp(i*t)*(exp(i*u)/sqrt(3)), exp(i*t)*(exp(i*v)/sqrt(3)), exp(i*t)*(exp(-i*(u + v))/sqrt(3));
)",
       {"lagrangian", "sphere_fit", "cubic_symmetry", "structure.v_tangent", "structure.v_unit",
        "structure.h_zv", "structure.h_vv", "structure.nabla_v", "product_metric", "umbilical",
        "index", "gauss", "codazzi"},
       {}},
      {"whitney_sphere",
       "Whitney immersion of S^2 into C^2 on the chart x0 = sin u; Lagrangian, not spherical",
       R"(name whitney_sphere;
params u:[-1.2,1.2], v:[0,6.283185307179586];
signature 2 0;
expected_index 0;
map (1 + i*sin(u))/(1 + sin(u)^2)*cos(u)*cos(v), (1 + i*sin(u))/(1 + sin(u)^2)*cos(u)*sin(v);
)",
       {"lagrangian", "cubic_symmetry", "index", "gauss", "codazzi"},
       {"sphere_fit"}},
      {"pseudo_legendrian_H3",
       "(cosh u, sinh u) in H^3_1(-1) inside C^2_1; spacelike Legendrian curve",
       R"(name pseudo_legendrian_H3;
params u:[-1,1];
signature 2 1;
expected_index 0;
quadric -1;
map cosh(u), sinh(u);
)",
       {"legendrian", "horizontal", "umbilical", "index", "gauss", "codazzi"},
       {}},
      {"pseudo_legendrian_S3_index1",
       "(sinh u, cosh u) in S^3_2(1) inside C^2_1; timelike Legendrian curve",
       R"(name pseudo_legendrian_S3_index1;
params u:[-1,1];
signature 2 1;
expected_index 1;
quadric 1;
map sinh(u), cosh(u);
)",
       {"legendrian", "horizontal", "umbilical", "index", "gauss", "codazzi"},
       {}},
      {"theorem43_example",
       "exp(i*t) * pseudo_legendrian_H3; Lagrangian in H^3_1(-1) with timelike t",
       R"(name theorem43_example;
params t:[0,6.283185307179586], u:[-1,1];
signature 2 1;
expected_index 1;
quadric -1;
map exp(i*t)*cosh(u), exp(i*t)*sinh(u);
)",
       {"lagrangian", "sphere_fit", "cubic_symmetry", "structure.v_tangent", "structure.v_unit",
        "structure.h_zv", "structure.h_vv", "structure.nabla_v", "product_metric", "umbilical",
        "index", "gauss", "codazzi"},
       {}},
      {"theorem42_example",
       "exp(i*t) * pseudo_legendrian_S3_index1; Lagrangian in S^3_2(1) of index 1",
       R"(name theorem42_example;
params t:[0,6.283185307179586], u:[-1,1];
signature 2 1;
expected_index 1;
quadric 1;
map exp(i*t)*sinh(u), exp(i*t)*cosh(u);
)",
       {"lagrangian", "sphere_fit", "cubic_symmetry", "structure.v_tangent", "structure.v_unit",
        "structure.h_zv", "structure.h_vv", "structure.nabla_v", "product_metric", "umbilical",
        "index", "gauss", "codazzi"},
       {}},
      {"control_non_lagrangian",
       "graph of z -> z^2/2 in C^2; a complex curve, never Lagrangian",
       R"(name control_non_lagrangian;
params x:[-1,1], y:[-1,1];
signature 2 0;
expected_index 0;
map x + i*y, (x + i*y)^2/2;
)",
       {"index", "gauss", "codazzi"},
       {"lagrangian", "sphere_fit"}},
      {"control_non_horizontal",
       "Hopf fibre (e^{iu}, 0) in S^3; vertical, so not horizontal",
       R"(name control_non_horizontal;
params u:[0,6.283185307179586];
signature 2 0;
expected_index 0;
quadric 1;
map exp(i*u), 0;
)",
       {"umbilical", "index", "gauss", "codazzi"},
       {"legendrian", "horizontal"}},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool in_catalog(std::string_view name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return true;
  }
  return false;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw UsageError("unknown catalog entry '" + std::string(name) + "'");
}

ImmersionSpec catalog(std::string_view name) {
  ImmersionSpec spec = parse_spec(catalog_entry(name).source);
  spec.validate();
  return spec;
}

}  // namespace lagkit
