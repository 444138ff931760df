#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "lagkit/constructor.hpp"
#include "lagkit/differentiation.hpp"
#include "lagkit/errors.hpp"
#include "lagkit/geometry.hpp"
#include "lagkit/verifier.hpp"

using namespace lagkit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kLegendrian[] = {"real_circle_S3", "real_sphere_S5",
                                   "minimal_legendrian_torus_S5", "pseudo_legendrian_H3",
                                   "pseudo_legendrian_S3_index1"};

}  // namespace

TEST(CircleProduct, RealCircleIsClifford) {
  ImmersionSpec t = circle_product(catalog("real_circle_S3"));
  EXPECT_EQ(t.name, "real_circle_S3_circle_product");
  t.name = "clifford_torus";
  EXPECT_EQ(serialize_spec(t), catalog_entry("clifford_torus").source);
}

TEST(CircleProduct, MatchesCatalogProducts) {
  const std::pair<const char*, const char*> pairs[] = {
      {"real_sphere_S5", "product_S1xS2"},
      {"minimal_legendrian_torus_S5", "product_S1xT2"},
      {"pseudo_legendrian_H3", "theorem43_example"},
      {"pseudo_legendrian_S3_index1", "theorem42_example"}};
  for (const auto& [psi, product] : pairs) {
    ImmersionSpec t = circle_product(catalog(psi));
    t.name = product;
    EXPECT_TRUE(structurally_equal(t, catalog(product))) << psi;
  }
}

TEST(CircleProduct, TimelikeCircleDirection) {
  const ImmersionSpec t = circle_product(catalog("pseudo_legendrian_H3"));
  EXPECT_EQ(t.expected_index, 1);
  const double p[] = {0.5, 0.2};
  EXPECT_NEAR(build_frame(t, p, false).g(0, 0), -1.0, 1e-14);
}

TEST(CircleProduct, Errors) {
  EXPECT_THROW(circle_product(catalog("clifford_torus")), UsageError);
  EXPECT_THROW(circle_product(catalog("real_circle_S3"), "u"), UsageError);
  const ImmersionSpec named = circle_product(catalog("real_circle_S3"), "s");
  EXPECT_EQ(named.params[0].name, "s");
}

TEST(CircleProduct, SerializationNatural) {
  for (const char* name : kLegendrian) {
    const ImmersionSpec t = circle_product(catalog(name));
    EXPECT_TRUE(structurally_equal(parse_spec(serialize_spec(t)), t)) << name;
  }
}

TEST(CircleProduct, SoundnessOnEveryLegendrianEntry) {
  const VerifierConfig cfg;
  for (const char* name : kLegendrian) {
    const ImmersionSpec psi = catalog(name);
    ASSERT_TRUE(check_legendrian(psi, cfg, AmbientQuadric::from_curvature(*psi.quadric_c)).pass);
    const CheckReport r = run_suite(circle_product(psi), cfg);
    for (const auto& [check, c] : r.checks) {
      EXPECT_TRUE(c.pass) << name << " " << check << " " << c.message;
      if (c.tolerance == cfg.tol.jet) EXPECT_LT(c.max_residual, 1e-8) << name << " " << check;
    }
    ASSERT_TRUE(r.sphere_fit);
    EXPECT_LT(r.sphere_fit->center.euclidean_norm(), 1e-7) << name;
  }
}

TEST(Catalog, Listing) {
  EXPECT_GE(catalog_entries().size(), 12u);
  for (const char* name :
       {"real_circle_S3", "clifford_torus", "real_sphere_S5", "product_S1xS2",
        "minimal_legendrian_torus_S5", "whitney_sphere", "pseudo_legendrian_H3",
        "pseudo_legendrian_S3_index1", "theorem43_example", "theorem42_example",
        "control_non_lagrangian", "control_non_horizontal"}) {
    EXPECT_TRUE(in_catalog(name)) << name;
  }
  EXPECT_THROW(catalog("nope"), UsageError);
}

TEST(Catalog, WhitneyNorm) {
  // <L,L> = (1 - x0^2)/(1 + x0^2) with x0 = sin u.
  const ImmersionSpec w = catalog("whitney_sphere");
  for (double x0 : {0.0, 1.0 / std::sqrt(2.0)}) {
    const double p[] = {std::asin(x0), 0.9};
    double ll = 0.0;
    for (const auto& z : evaluate_map_values(w, p)) ll += std::norm(z);
    EXPECT_NEAR(ll, (1 - x0 * x0) / (1 + x0 * x0), 1e-14);
  }
}

TEST(Catalog, PseudoSphereIndexOne) {
  const ImmersionSpec s = catalog("pseudo_legendrian_S3_index1");
  const double p[] = {0.6};
  const GeometryFrame f = build_frame(s, p, false);
  EXPECT_NEAR(f.g(0, 0), -1.0, 1e-14);
  EXPECT_NEAR(quadric_residual(f.position, AmbientQuadric::from_curvature(1.0)), 0.0, 1e-14);
}

TEST(Catalog, RealCircle) {
  const ImmersionSpec s = catalog("real_circle_S3");
  EXPECT_EQ(s.expected_index, 0);
  EXPECT_EQ(s.signature, Signature(2, 0));
  EXPECT_TRUE(check_legendrian(s, VerifierConfig{}, AmbientQuadric::from_curvature(1.0)).pass);
}

TEST(Catalog, ShippedFilesAreCanonical) {
  for (const auto& e : catalog_entries()) {
    const std::string path = std::string(LAGKIT_SOURCE_DIR) + "/catalog/" + e.name + ".imm";
    const std::string text = read_file(path);
    EXPECT_EQ(text, serialize_spec(catalog(e.name))) << path;
    EXPECT_TRUE(structurally_equal(parse_spec(text), catalog(e.name))) << path;
  }
}
