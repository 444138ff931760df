#pragma once

// Pointwise extrinsic geometry of a parametrized immersion L into C^n_s.
//
// Index conventions (all zero-based, row-major flattening):
//   first[i]                     L_i = dL/du_i
//   second[i*m+j]                L_ij
//   third[(i*m+j)*m+k]           L_ijk
//   metric[i*m+j]                g_ij = <L_i, L_j>
//   christoffel[(k*m+i)*m+j]     Gamma^k_ij
//   sff[i*m+j]                   h_ij = L_ij - Gamma^k_ij L_k
//   riemann[((i*m+j)*m+k)*m+l]   <R(d_i, d_j) d_k, d_l>
//
// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, so the Gauss
// equation reads <R(X,Y)Z,W> = <h(X,W),h(Y,Z)> - <h(X,Z),h(Y,W)>.

#include <cstddef>
#include <span>
#include <vector>

#include "lagkit/complex_jet.hpp"
#include "lagkit/dsl.hpp"
#include "lagkit/hermitian.hpp"

namespace lagkit {

// |det g| must be at least this times (max |g_ij|)^m.
inline constexpr double kNondegeneracyThreshold = 1e-10;

struct GeometryFrame {
  std::vector<double> point;
  std::size_t dim = 0;
  ComplexVec position{Signature{1, 0}};
  std::vector<ComplexVec> first;
  std::vector<ComplexVec> second;
  std::vector<ComplexVec> third;
  std::vector<double> metric;
  std::vector<double> metric_inverse;
  std::vector<double> metric_deriv;  // d_k g_ij at (k*m+i)*m+j
  std::vector<double> christoffel;
  std::vector<double> christoffel_deriv;  // d_l Gamma^k_ij at ((l*m+k)*m+i)*m+j
  std::vector<ComplexVec> sff;

  bool has_third() const { return !third.empty(); }
  const Signature& signature() const { return position.signature(); }

  double g(std::size_t i, std::size_t j) const { return metric[i * dim + j]; }
  double g_inv(std::size_t i, std::size_t j) const { return metric_inverse[i * dim + j]; }
  double gamma(std::size_t k, std::size_t i, std::size_t j) const {
    return christoffel[(k * dim + i) * dim + j];
  }
  const ComplexVec& L(std::size_t i) const { return first[i]; }
  const ComplexVec& L(std::size_t i, std::size_t j) const { return second[i * dim + j]; }
  const ComplexVec& L(std::size_t i, std::size_t j, std::size_t k) const {
    return third[(i * dim + j) * dim + k];
  }
  const ComplexVec& h(std::size_t i, std::size_t j) const { return sff[i * dim + j]; }
};

// Throws DegenerateMetric below the nondegeneracy threshold.
GeometryFrame build_frame(const ImmersionSpec& spec, std::span<const double> point,
                          bool need_third);
GeometryFrame build_frame_from_jets(const Signature& signature, std::span<const double> point,
                                    const std::vector<ComplexJet>& jets, bool need_third);

struct Projection {
  std::vector<double> tangential;  // coefficients a^k of v = a^k L_k + normal
  ComplexVec normal;
};

Projection project(const GeometryFrame& frame, const ComplexVec& v);

// Tangent vector a^k L_k.
ComplexVec tangent_vector(const GeometryFrame& frame, std::span<const double> coefficients);

// Max over i,j,k of |<h_ij, L_k>|.
double normality_residual(const GeometryFrame& frame);

// Negative eigenvalue count of the induced metric.
int metric_index(const GeometryFrame& frame);

std::vector<double> riemann_tensor(const GeometryFrame& frame);

// <R(d_i,d_j)d_j,d_i> / (g_ii g_jj - g_ij^2).
double sectional_curvature(const GeometryFrame& frame, std::size_t i, std::size_t j);

// Max over (i,j,k,l) of |R_ijkl - (<h_il,h_jk> - <h_ik,h_jl>)|.
double gauss_residual(const GeometryFrame& frame);

// (nabla h)_ijk = normal part of d_i(h_jk) - h(nabla_i d_j, d_k) - h(d_j, nabla_i d_k).
std::vector<ComplexVec> covariant_sff_derivative(const GeometryFrame& frame);

// Max over (i,j,k) of the Euclidean norm of (nabla h)_ijk - (nabla h)_jik.
double codazzi_residual(const GeometryFrame& frame);

}  // namespace lagkit
