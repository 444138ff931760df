#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "lagkit/errors.hpp"
#include "lagkit/hermitian.hpp"

using namespace lagkit;

namespace {

ComplexVec vec(std::initializer_list<Complex> zs, int s) {
  return ComplexVec(std::vector<Complex>(zs), Signature(static_cast<int>(zs.size()), s));
}

ComplexVec random_vec(std::mt19937_64& rng, Signature sig) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  ComplexVec v(sig);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = {u(rng), u(rng)};
  return v;
}

// Re b(z, w) written out with std::complex, independent of hermitian_form.
double brute_inner(const ComplexVec& z, const ComplexVec& w) {
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    const std::complex<double> a(z[j].re, z[j].im), b(w[j].re, w[j].im);
    sum += (static_cast<int>(j) < z.signature().s() ? -1.0 : 1.0) * std::conj(a) * b;
  }
  return sum.real();
}

}  // namespace

TEST(Signature, RejectsOutOfRange) {
  EXPECT_THROW(Signature(0, 0), DimensionError);
  EXPECT_THROW(Signature(2, 3), DimensionError);
  EXPECT_THROW(Signature(2, -1), DimensionError);
  EXPECT_NO_THROW(Signature(2, 2));
}

TEST(HermitianForm, NegativeFirstBlock) {
  const Complex b = hermitian_form(vec({{1, 0}, {0, 0}}, 1), vec({{1, 0}, {0, 0}}, 1));
  EXPECT_EQ(b.re, -1.0);
  EXPECT_EQ(b.im, 0.0);
}

TEST(HermitianForm, PositiveDefiniteBasis) {
  const ComplexVec e1 = basis_vector(0, Signature(3, 0));
  EXPECT_EQ(hermitian_form(e1, e1).re, 1.0);
}

TEST(HermitianForm, HyperbolicPair) {
  for (double u : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
    const ComplexVec z = vec({{std::cosh(u), 0}, {std::sinh(u), 0}}, 1);
    EXPECT_NEAR(hermitian_form(z, z).re, -1.0, 1e-12);
  }
}

TEST(HermitianForm, SignatureMismatchThrows) {
  EXPECT_THROW(hermitian_form(vec({{1, 0}, {0, 0}}, 0), vec({{1, 0}, {0, 0}}, 1)),
               DimensionError);
  EXPECT_THROW(real_inner(basis_vector(0, Signature(2, 0)), basis_vector(0, Signature(3, 0))),
               DimensionError);
}

TEST(RealInner, Examples) {
  EXPECT_EQ(real_inner(vec({{0, 1}, {0, 0}}, 1), vec({{0, 1}, {0, 0}}, 1)), -1.0);
  for (int s : {0, 1, 2}) {
    const Signature sig(2, s);
    EXPECT_EQ(real_inner(basis_vector(0, sig), apply_J(basis_vector(0, sig))), 0.0);
  }
  EXPECT_EQ(real_inner(vec({{1, 1}, {0, 0}}, 0), vec({{1, 1}, {0, 0}}, 0)), 2.0);
}

TEST(ApplyJ, Examples) {
  EXPECT_EQ(apply_J(vec({{1, 0}, {0, 0}}, 0)), vec({{0, 1}, {0, 0}}, 0));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const Signature sig(3, k % 4);
    const ComplexVec z = random_vec(rng, sig);
    EXPECT_EQ(apply_J(apply_J(z)), -z);
    const ComplexVec w = random_vec(rng, sig);
    EXPECT_NEAR(real_inner(apply_J(z), apply_J(w)), real_inner(z, w), 1e-12);
  }
}

TEST(SymplecticForm, Examples) {
  std::mt19937_64 rng(11);
  const ComplexVec z = random_vec(rng, Signature(3, 1));
  EXPECT_NEAR(symplectic_form(z, z), 0.0, 1e-15);

  const Signature sig(2, 0);
  const ComplexVec e1 = basis_vector(0, sig);
  const ComplexVec ie1 = apply_J(e1);
  // omega(X, Y) = <JX, Y>, evaluated independently as Re b(iX, Y).
  const double brute = brute_inner(apply_J(e1), ie1);
  EXPECT_EQ(brute, 1.0);
  EXPECT_EQ(symplectic_form(e1, ie1), brute);
  EXPECT_EQ(symplectic_form(e1, basis_vector(1, sig)), 0.0);
}

TEST(SymplecticForm, EqualsImaginaryPart) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const Signature sig(3, k % 4);
    const ComplexVec z = random_vec(rng, sig), w = random_vec(rng, sig);
    EXPECT_NEAR(symplectic_form(z, w), hermitian_form(z, w).im, 1e-12);
  }
}

TEST(Quadric, KindAndSign) {
  EXPECT_THROW(AmbientQuadric(AmbientQuadric::Kind::pseudo_sphere, -1.0), DimensionError);
  EXPECT_THROW(AmbientQuadric(AmbientQuadric::Kind::pseudo_hyperbolic, 2.0), DimensionError);
  EXPECT_THROW(AmbientQuadric::from_curvature(0.0), DimensionError);
  EXPECT_EQ(AmbientQuadric::from_curvature(-4.0).kind(), AmbientQuadric::Kind::pseudo_hyperbolic);
  EXPECT_EQ(AmbientQuadric::from_curvature(4.0).radius_sq(), 0.25);
}

TEST(Quadric, MembershipExamples) {
  EXPECT_EQ(quadric_residual(basis_vector(0, Signature(4, 0)), AmbientQuadric::from_curvature(1)),
            0.0);
  for (double u : {-1.5, 0.2, 1.1}) {
    EXPECT_NEAR(quadric_residual(vec({{std::cosh(u), 0}, {std::sinh(u), 0}}, 1),
                                 AmbientQuadric::from_curvature(-1)),
                0.0, 1e-12);
    EXPECT_NEAR(quadric_residual(vec({{std::sinh(u), 0}, {std::cosh(u), 0}}, 1),
                                 AmbientQuadric::from_curvature(1)),
                0.0, 1e-12);
  }
}

TEST(Properties, SymmetryAntisymmetryLinearity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 50; ++k) {
    const Signature sig(1 + k % 4, (k / 4) % (1 + k % 4 + 1));
    const ComplexVec x = random_vec(rng, sig), y = random_vec(rng, sig), z = random_vec(rng, sig);
    const double a = u(rng), b = u(rng);
    EXPECT_NEAR(real_inner(x, y), real_inner(y, x), 1e-12);
    EXPECT_NEAR(symplectic_form(x, y), -symplectic_form(y, x), 1e-12);
    const ComplexVec ax_by = a * x + b * y;
    EXPECT_NEAR(real_inner(ax_by, z), a * real_inner(x, z) + b * real_inner(y, z), 1e-12);
    EXPECT_NEAR(symplectic_form(ax_by, z),
                a * symplectic_form(x, z) + b * symplectic_form(y, z), 1e-12);
    EXPECT_NEAR(real_inner(x, y), brute_inner(x, y), 1e-12);
  }
}

TEST(Properties, RealIndexIsTwiceComplexIndex) {
  for (int n = 1; n <= 4; ++n) {
    for (int s = 0; s <= n; ++s) {
      const Signature sig(n, s);
      std::vector<ComplexVec> basis;
      for (int j = 0; j < n; ++j) {
        basis.push_back(basis_vector(j, sig));
        basis.push_back(apply_J(basis_vector(j, sig)));
      }
      std::vector<double> gram;
      for (const auto& a : basis) {
        for (const auto& b : basis) gram.push_back(real_inner(a, b));
      }
      EXPECT_EQ(negative_eigenvalue_count(gram, basis.size()), 2 * s);
    }
  }
}
