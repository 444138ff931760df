#pragma once

// Flat complex space C^n_s: Hermitian form with s negated complex
// coordinates, its real part (a real inner product of index 2s), the complex
// structure J (multiplication by i) and the symplectic form.

#include <cstddef>
#include <span>
#include <vector>

#include "lagkit/complex.hpp"

namespace lagkit {

class Signature {
 public:
  // Throws DimensionError unless n >= 1 and 0 <= s <= n.
  Signature(int n, int s);

  int n() const { return n_; }
  int s() const { return s_; }
  // Sign of the j-th diagonal entry of the Hermitian form.
  double sign(std::size_t j) const { return static_cast<int>(j) < s_ ? -1.0 : 1.0; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int n_;
  int s_;
};

class ComplexVec {
 public:
  ComplexVec(std::vector<Complex> components, Signature signature);
  // Zero vector.
  explicit ComplexVec(Signature signature);

  const Signature& signature() const { return signature_; }
  std::size_t size() const { return components_.size(); }
  std::span<const Complex> components() const { return components_; }
  const Complex& operator[](std::size_t j) const { return components_[j]; }
  Complex& operator[](std::size_t j) { return components_[j]; }

  ComplexVec& operator+=(const ComplexVec& o);
  ComplexVec& operator-=(const ComplexVec& o);
  ComplexVec& operator*=(double s);
  friend ComplexVec operator+(ComplexVec a, const ComplexVec& b) { return a += b; }
  friend ComplexVec operator-(ComplexVec a, const ComplexVec& b) { return a -= b; }
  friend ComplexVec operator*(double s, ComplexVec a) { return a *= s; }
  ComplexVec operator-() const { return -1.0 * *this; }

  // a += s * v
  ComplexVec& add_scaled(double s, const ComplexVec& v);

  // Euclidean length of the underlying real 2n-vector. Used for residual
  // magnitudes, where the indefinite form would hide null vectors.
  double euclidean_norm() const;

  friend bool operator==(const ComplexVec&, const ComplexVec&) = default;

 private:
  std::vector<Complex> components_;
  Signature signature_;
};

// Unit vector e_j (zero-based).
ComplexVec basis_vector(std::size_t j, Signature signature);

// b(z,w) = -sum_{j<s} conj(z_j) w_j + sum_{j>=s} conj(z_j) w_j
Complex hermitian_form(const ComplexVec& z, const ComplexVec& w);

// <z,w> = Re b(z,w)
double real_inner(const ComplexVec& z, const ComplexVec& w);

ComplexVec apply_J(const ComplexVec& z);

// omega(z,w) = <Jz, w>, which equals Im b(z,w).
double symplectic_form(const ComplexVec& z, const ComplexVec& w);

// Level set <z,z> = 1/c of C^n_s.
class AmbientQuadric {
 public:
  enum class Kind { pseudo_sphere, pseudo_hyperbolic };

  // Throws DimensionError when the sign of c disagrees with kind or c == 0.
  AmbientQuadric(Kind kind, double c);
  // Kind inferred from the sign of c.
  static AmbientQuadric from_curvature(double c);

  Kind kind() const { return kind_; }
  double c() const { return c_; }
  double radius_sq() const { return 1.0 / c_; }

 private:
  Kind kind_;
  double c_;
};

double quadric_residual(const ComplexVec& z, const AmbientQuadric& q);

// Number of negative eigenvalues of a real symmetric matrix (row major,
// dim x dim). Used for metric index counts.
int negative_eigenvalue_count(std::span<const double> symmetric, std::size_t dim);

}  // namespace lagkit
