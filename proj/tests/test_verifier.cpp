#include <gtest/gtest.h>

#include <cmath>

#include "lagkit/constructor.hpp"
#include "lagkit/errors.hpp"
#include "lagkit/geometry.hpp"
#include "lagkit/report.hpp"
#include "lagkit/verifier.hpp"

using namespace lagkit;

namespace {

const AmbientQuadric kUnit = AmbientQuadric::from_curvature(1.0);

double center_offset(const SphereFit& fit, const ComplexVec& c0) {
  return (fit.center - c0).euclidean_norm();
}

}  // namespace

TEST(Lagrangian, Examples) {
  const VerifierConfig cfg;
  const CheckResult c = check_lagrangian(catalog("clifford_torus"), cfg);
  EXPECT_TRUE(c.pass);
  EXPECT_LT(c.max_residual, 1e-11);
  EXPECT_EQ(c.points_evaluated, 20);
  EXPECT_TRUE(check_lagrangian(catalog("whitney_sphere"), cfg).pass);
  const CheckResult bad = check_lagrangian(catalog("control_non_lagrangian"), cfg);
  EXPECT_FALSE(bad.pass);
  EXPECT_GT(bad.max_residual, 0.1);
  EXPECT_EQ(bad.worst_point.size(), 2u);
}

TEST(Lagrangian, NotHalfDimensional) {
  const CheckResult c = check_lagrangian(catalog("real_circle_S3"), VerifierConfig{});
  EXPECT_EQ(c.status, CheckStatus::error);
  EXPECT_FALSE(c.pass);
  EXPECT_NE(c.message.find("not half-dimensional"), std::string::npos);
}

TEST(SphereFit, Clifford) {
  const FitOutcome f = fit_hypersphere(catalog("clifford_torus"), VerifierConfig{});
  ASSERT_TRUE(f.fit);
  EXPECT_TRUE(f.check.pass);
  EXPECT_LT(f.fit->center.euclidean_norm(), 1e-10);
  EXPECT_NEAR(f.fit->radius_sq_signed, 1.0, 1e-10);
  EXPECT_LT(f.fit->rms_residual, 1e-10);
}

TEST(SphereFit, TranslatedClifford) {
  const ComplexVec c0({{0.3, 0.0}, {0.0, 0.7}}, Signature(2, 0));
  const ImmersionSpec moved = affine_image(catalog("clifford_torus"), 1.0, c0);
  const FitOutcome f = fit_hypersphere(moved, VerifierConfig{});
  ASSERT_TRUE(f.fit);
  EXPECT_LT(center_offset(*f.fit, c0), 1e-8);
  EXPECT_NEAR(f.fit->radius_sq_signed, 1.0, 1e-8);
}

TEST(SphereFit, WhitneyFails) {
  const FitOutcome f = fit_hypersphere(catalog("whitney_sphere"), VerifierConfig{});
  ASSERT_TRUE(f.fit);
  EXPECT_FALSE(f.check.pass);
  EXPECT_GT(f.fit->rms_residual, 0.05);
}

TEST(SphereFit, TooFewPointsAndRankDeficiency) {
  VerifierConfig cfg;
  cfg.sampling.num_points = 5;
  const FitOutcome few = fit_hypersphere(catalog("clifford_torus"), cfg);
  EXPECT_EQ(few.check.status, CheckStatus::error);
  EXPECT_FALSE(few.fit);
  // A straight segment in C^2 has a 1-dimensional affine hull.
  const ImmersionSpec line = parse_spec("params u:[0,1]; signature 2 0; map u, 2*u;");
  const FitOutcome rank = fit_hypersphere(line, VerifierConfig{});
  EXPECT_EQ(rank.check.status, CheckStatus::error);
  EXPECT_NE(rank.check.message.find("rank"), std::string::npos);
}

TEST(Legendrian, Examples) {
  const VerifierConfig cfg;
  const CheckResult circle = check_legendrian(catalog("real_circle_S3"), cfg, kUnit);
  EXPECT_TRUE(circle.pass);
  EXPECT_LT(circle.max_residual, 1e-11);
  EXPECT_TRUE(check_legendrian(catalog("minimal_legendrian_torus_S5"), cfg, kUnit).pass);
  EXPECT_TRUE(check_legendrian(catalog("pseudo_legendrian_H3"), cfg,
                               AmbientQuadric::from_curvature(-1.0))
                  .pass);
  // Wrong quadric: the pseudo-hyperbolic curve is not on the unit pseudo-sphere.
  EXPECT_FALSE(check_legendrian(catalog("pseudo_legendrian_H3"), cfg, kUnit).pass);
  EXPECT_EQ(check_legendrian(catalog("clifford_torus"), cfg, kUnit).status, CheckStatus::error);
}

TEST(Legendrian, PseudoHyperbolicCharacteristicField) {
  // Tangent spacelike, V = J psi timelike with <V,V> = -1.
  const ImmersionSpec s = catalog("pseudo_legendrian_H3");
  const double p[] = {0.4};
  const GeometryFrame f = build_frame(s, p, false);
  EXPECT_NEAR(f.g(0, 0), 1.0, 1e-14);
  const ComplexVec v = apply_J(f.position);
  EXPECT_NEAR(real_inner(v, v), -1.0, 1e-14);
}

TEST(Horizontal, Examples) {
  const VerifierConfig cfg;
  EXPECT_TRUE(check_horizontal(catalog("real_circle_S3"), cfg).pass);
  EXPECT_TRUE(check_horizontal(catalog("minimal_legendrian_torus_S5"), cfg).pass);
  const CheckResult bad = check_horizontal(catalog("control_non_horizontal"), cfg);
  EXPECT_FALSE(bad.pass);
  EXPECT_NEAR(bad.max_residual, 1.0, 1e-12);
}

TEST(CubicSymmetry, Examples) {
  const VerifierConfig cfg;
  EXPECT_LT(check_cubic_symmetry(catalog("clifford_torus"), cfg).max_residual, 1e-10);
  EXPECT_LT(check_cubic_symmetry(catalog("whitney_sphere"), cfg).max_residual, 1e-9);
  // A complex curve has J L_k tangent, so both sides vanish there too.
  EXPECT_LT(check_cubic_symmetry(catalog("control_non_lagrangian"), cfg).max_residual, 1e-12);
}

TEST(Structure, Clifford) {
  const StructureOutcome s = check_theorem_structure(catalog("clifford_torus"), VerifierConfig{});
  ASSERT_EQ(s.checks.size(), 5u);
  for (const auto& c : s.checks) {
    EXPECT_TRUE(c.pass) << c.name;
    EXPECT_LT(c.max_residual, 1e-9) << c.name;
  }
  ASSERT_TRUE(s.transform);
  EXPECT_NEAR(s.transform->scale, 1.0, 1e-10);
  EXPECT_EQ(s.epsilon, 1.0);
}

TEST(Structure, ProductSphere) {
  const StructureOutcome s = check_theorem_structure(catalog("product_S1xS2"), VerifierConfig{});
  for (const auto& c : s.checks) EXPECT_TRUE(c.pass) << c.name;
}

TEST(Structure, PrerequisiteFailuresAreStructured) {
  const StructureOutcome w = check_theorem_structure(catalog("whitney_sphere"), VerifierConfig{});
  for (const auto& c : w.checks) {
    EXPECT_EQ(c.status, CheckStatus::skipped);
    EXPECT_NE(c.message.find("sphere_fit"), std::string::npos);
  }
  EXPECT_FALSE(w.normalized);
  const StructureOutcome n =
      check_theorem_structure(catalog("control_non_lagrangian"), VerifierConfig{});
  EXPECT_NE(n.checks.front().message.find("lagrangian"), std::string::npos);
}

TEST(Structure, WhitneyIsNotAMetricProduct) {
  // Normalized by its own best-fit sphere, the Whitney metric has no circle factor.
  const ImmersionSpec w = catalog("whitney_sphere");
  const FitOutcome f = fit_hypersphere(w, VerifierConfig{});
  ASSERT_TRUE(f.fit);
  const ImmersionSpec x =
      transformed_spec(w, {f.fit->center, std::sqrt(std::abs(f.fit->radius_sq_signed))});
  EXPECT_FALSE(check_product_metric(x, VerifierConfig{}, 1.0).pass);
}

TEST(ProductMetric, Examples) {
  const VerifierConfig cfg;
  EXPECT_LT(check_product_metric(catalog("clifford_torus"), cfg, 1.0).max_residual, 1e-12);
  EXPECT_LT(check_product_metric(catalog("product_S1xS2"), cfg, 1.0).max_residual, 1e-10);
  const ImmersionSpec t43 = catalog("theorem43_example");
  EXPECT_TRUE(check_product_metric(t43, cfg, -1.0).pass);
  const double p[] = {1.0, 0.3};
  const GeometryFrame f = build_frame(t43, p, false);
  EXPECT_NEAR(f.g(0, 0), -1.0, 1e-14);
  EXPECT_NEAR(f.g(1, 1), 1.0, 1e-14);
  EXPECT_NEAR(f.g(0, 1), 0.0, 1e-14);
  EXPECT_FALSE(check_product_metric(t43, cfg, 1.0).pass);
}

TEST(Umbilical, Examples) {
  const VerifierConfig cfg;
  EXPECT_LT(check_umbilical_relation(catalog("real_circle_S3"), cfg, kUnit).max_residual, 1e-11);
  EXPECT_TRUE(check_umbilical_relation(catalog("pseudo_legendrian_H3"), cfg,
                                       AmbientQuadric::from_curvature(-1.0))
                  .pass);
  const CheckResult off = check_umbilical_relation(catalog("whitney_sphere"), cfg, kUnit);
  EXPECT_EQ(off.status, CheckStatus::error);
  EXPECT_NE(off.message.find("membership"), std::string::npos);
}

TEST(Umbilical, OtherRadius) {
  const ImmersionSpec s = parse_spec(
      "params u:[0,6.283185307179586]; signature 2 0; map 2*cos(u), 2*sin(u);");
  EXPECT_TRUE(check_umbilical_relation(s, VerifierConfig{}, AmbientQuadric::from_curvature(0.25)).pass);
}

TEST(IndexCheck, CatalogAndMismatch) {
  EXPECT_TRUE(check_index(catalog("theorem42_example"), VerifierConfig{}).pass);
  ImmersionSpec s = catalog("pseudo_legendrian_S3_index1");
  EXPECT_TRUE(check_index(s, VerifierConfig{}).pass);
  s.expected_index = 0;
  const CheckResult c = check_index(s, VerifierConfig{});
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.max_residual, 1.0);
}

TEST(Suite, CatalogExpectations) {
  for (const auto& e : catalog_entries()) {
    const CheckReport r = run_suite(catalog(e.name), VerifierConfig{});
    for (const auto& name : e.expected_pass) {
      ASSERT_TRUE(r.checks.count(name)) << e.name << " " << name;
      EXPECT_TRUE(r.checks.at(name).pass) << e.name << " " << name << " "
                                          << r.checks.at(name).message;
    }
    for (const auto& name : e.expected_fail) {
      ASSERT_TRUE(r.checks.count(name)) << e.name << " " << name;
      EXPECT_FALSE(r.checks.at(name).pass) << e.name << " " << name;
    }
    EXPECT_EQ(r.all_passed(), e.expected_fail.empty()) << e.name;
  }
}

TEST(Suite, ReportInvariants) {
  for (const auto& e : catalog_entries()) {
    const CheckReport r = run_suite(catalog(e.name), VerifierConfig{});
    for (const auto& [name, c] : r.checks) {
      if (c.status != CheckStatus::ok) continue;
      EXPECT_EQ(c.pass, c.max_residual <= c.tolerance) << e.name << " " << name;
      EXPECT_GE(c.points_evaluated, 1);
      EXPECT_LE(c.mean_residual, c.max_residual + 1e-300);
    }
  }
}

TEST(Suite, WhitneyShape) {
  const CheckReport r = run_suite(catalog("whitney_sphere"), VerifierConfig{});
  EXPECT_TRUE(r.checks.at("lagrangian").pass);
  EXPECT_FALSE(r.checks.at("sphere_fit").pass);
  EXPECT_EQ(r.checks.at("structure.h_vv").status, CheckStatus::skipped);
  EXPECT_FALSE(r.all_passed());
}

TEST(Suite, SinglePoint) {
  VerifierConfig cfg;
  cfg.sampling.num_points = 1;
  const CheckReport r = run_suite(catalog("clifford_torus"), cfg);
  EXPECT_EQ(r.checks.at("lagrangian").points_evaluated, 1);
  EXPECT_EQ(r.checks.at("sphere_fit").status, CheckStatus::error);
}

TEST(Suite, OnlyFilter) {
  VerifierConfig cfg;
  cfg.only = std::set<std::string>{"structure", "gauss"};
  const CheckReport r = run_suite(catalog("clifford_torus"), cfg);
  EXPECT_EQ(r.checks.size(), 6u);
  EXPECT_TRUE(r.checks.count("structure.nabla_v"));
  EXPECT_FALSE(r.checks.count("lagrangian"));
  EXPECT_TRUE(r.all_passed());
}

TEST(Suite, LegendrianWithoutDeclaredQuadricUsesFit) {
  ImmersionSpec s = catalog("minimal_legendrian_torus_S5");
  s.quadric_c.reset();
  const CheckReport r = run_suite(s, VerifierConfig{});
  EXPECT_TRUE(r.checks.at("sphere_fit").pass);
  EXPECT_TRUE(r.checks.at("legendrian").pass);
  EXPECT_TRUE(r.all_passed());
}

TEST(Equivariance, DilationTranslation) {
  const ComplexVec c0({{0.3, 0.0}, {0.0, 0.7}}, Signature(2, 0));
  for (double lambda : {2.5, -0.4}) {
    const ImmersionSpec moved = affine_image(catalog("clifford_torus"), lambda, c0);
    const VerifierConfig cfg;
    EXPECT_TRUE(check_lagrangian(moved, cfg).pass);
    const FitOutcome f = fit_hypersphere(moved, cfg);
    ASSERT_TRUE(f.fit);
    EXPECT_LT(center_offset(*f.fit, c0), 1e-7);
    EXPECT_NEAR(std::sqrt(f.fit->radius_sq_signed), std::abs(lambda), 1e-7);
    const CheckReport r = run_suite(moved, cfg);
    EXPECT_TRUE(r.all_passed());
    ASSERT_TRUE(r.transform);
    EXPECT_NEAR(r.transform->scale, std::abs(lambda), 1e-7);
  }
}

TEST(Json, SchemaFields) {
  const std::string j = report_json(run_suite(catalog("clifford_torus"), VerifierConfig{}));
  for (const char* key : {"\"spec_name\"", "\"transform\"", "\"center\"", "\"scale\"",
                          "\"checks\"", "\"max\"", "\"mean\"", "\"tol\"", "\"pass\"",
                          "\"worst_point\"", "\"sphere_fit\"", "\"radius_sq_signed\"",
                          "\"rms_residual\""}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
  EXPECT_EQ(j, report_json(run_suite(catalog("clifford_torus"), VerifierConfig{})));
  const std::string w = report_json(run_suite(catalog("whitney_sphere"), VerifierConfig{}));
  EXPECT_NE(w.find("\"max\": null"), std::string::npos);
}
