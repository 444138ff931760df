#include "lagkit/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "lagkit/errors.hpp"

namespace lagkit {

Signature::Signature(int n, int s) : n_(n), s_(s) {
  if (n < 1 || s < 0 || s > n) {
    throw DimensionError("invalid signature n=" + std::to_string(n) +
                         " s=" + std::to_string(s));
  }
}

ComplexVec::ComplexVec(std::vector<Complex> components, Signature signature)
    : components_(std::move(components)), signature_(signature) {
  if (components_.size() != static_cast<std::size_t>(signature_.n())) {
    throw DimensionError("component count " + std::to_string(components_.size()) +
                         " does not match signature n=" +
                         std::to_string(signature_.n()));
  }
}

ComplexVec::ComplexVec(Signature signature)
    : components_(static_cast<std::size_t>(signature.n())), signature_(signature) {}

namespace {

void require_same(const ComplexVec& z, const ComplexVec& w) {
  if (!(z.signature() == w.signature())) {
    throw DimensionError("signature mismatch between ambient vectors");
  }
}

}  // namespace

ComplexVec& ComplexVec::operator+=(const ComplexVec& o) {
  require_same(*this, o);
  for (std::size_t j = 0; j < components_.size(); ++j) components_[j] += o.components_[j];
  return *this;
}

ComplexVec& ComplexVec::operator-=(const ComplexVec& o) {
  require_same(*this, o);
  for (std::size_t j = 0; j < components_.size(); ++j) components_[j] -= o.components_[j];
  return *this;
}

ComplexVec& ComplexVec::operator*=(double s) {
  for (auto& c : components_) c = s * c;
  return *this;
}

ComplexVec& ComplexVec::add_scaled(double s, const ComplexVec& v) {
  require_same(*this, v);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    components_[j].re += s * v.components_[j].re;
    components_[j].im += s * v.components_[j].im;
  }
  return *this;
}

double ComplexVec::euclidean_norm() const {
  double sum = 0.0;
  for (const auto& c : components_) sum += c.norm_sq();
  return std::sqrt(sum);
}

ComplexVec basis_vector(std::size_t j, Signature signature) {
  ComplexVec e(signature);
  if (j >= e.size()) throw DimensionError("basis index out of range");
  e[j] = Complex{1.0, 0.0};
  return e;
}

Complex hermitian_form(const ComplexVec& z, const ComplexVec& w) {
  require_same(z, w);
  Complex sum;
  for (std::size_t j = 0; j < z.size(); ++j) {
    sum += z.signature().sign(j) * (z[j].conj() * w[j]);
  }
  return sum;
}

double real_inner(const ComplexVec& z, const ComplexVec& w) {
  require_same(z, w);
  double sum = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    sum += z.signature().sign(j) * (z[j].re * w[j].re + z[j].im * w[j].im);
  }
  return sum;
}

ComplexVec apply_J(const ComplexVec& z) {
  ComplexVec out = z;
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = Complex{-z[j].im, z[j].re};
  return out;
}

double symplectic_form(const ComplexVec& z, const ComplexVec& w) {
  return real_inner(apply_J(z), w);
}

AmbientQuadric::AmbientQuadric(Kind kind, double c) : kind_(kind), c_(c) {
  if (kind == Kind::pseudo_sphere && !(c > 0.0)) {
    throw DimensionError("pseudo sphere requires c > 0");
  }
  if (kind == Kind::pseudo_hyperbolic && !(c < 0.0)) {
    throw DimensionError("pseudo hyperbolic space requires c < 0");
  }
}

AmbientQuadric AmbientQuadric::from_curvature(double c) {
  return AmbientQuadric(c > 0.0 ? Kind::pseudo_sphere : Kind::pseudo_hyperbolic, c);
}

double quadric_residual(const ComplexVec& z, const AmbientQuadric& q) {
  return real_inner(z, z) - q.radius_sq();
}

int negative_eigenvalue_count(std::span<const double> symmetric, std::size_t dim) {
  if (symmetric.size() != dim * dim) throw DimensionError("matrix size mismatch");
  Eigen::MatrixXd m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = symmetric[i * dim + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  int count = 0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    if (solver.eigenvalues()(k) < 0.0) ++count;
  }
  return count;
}

}  // namespace lagkit
