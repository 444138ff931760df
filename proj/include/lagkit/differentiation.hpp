#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lagkit/complex_jet.hpp"
#include "lagkit/dsl.hpp"

namespace lagkit {

// Throws DomainError if the point (or a box around it of half-width reach in
// every coordinate) leaves the closed parameter box.
void require_in_domain(const ImmersionSpec& spec, std::span<const double> point,
                       double reach = 0.0);

// Component-wise jets of the immersion map at point.
std::vector<ComplexJet> evaluate_map_jets(const ImmersionSpec& spec,
                                          std::span<const double> point, int order);

// Plain complex values of the map, through the independent evaluator.
std::vector<std::complex<double>> evaluate_map_values(const ImmersionSpec& spec,
                                                      std::span<const double> point);

// Dense derivative tensors of every component: first[c][i], second[c][i*m+j],
// third[c][(i*m+j)*m+k].
struct DerivativeTensors {
  std::size_t num_vars = 0;
  int order = 0;
  std::vector<std::complex<double>> value;
  std::vector<std::vector<std::complex<double>>> first;
  std::vector<std::vector<std::complex<double>>> second;
  std::vector<std::vector<std::complex<double>>> third;
};

DerivativeTensors tensors_from_jets(const std::vector<ComplexJet>& jets);

// Central-difference estimates of the same tensors. Second derivatives use
// the standard 3-point / 4-point stencils; third derivatives are central
// differences of the finite-difference Hessian taken at step and step/2 and
// Richardson-combined, so the stencil reaches 2*step from the point
// (stencil_reach tells callers how much room to leave).
DerivativeTensors finite_difference_oracle(const ImmersionSpec& spec,
                                           std::span<const double> point, int order,
                                           double step);
double stencil_reach(int order, double step);

// Max |a - b| over all entries of the given derivative order (1, 2 or 3).
double max_deviation(const DerivativeTensors& a, const DerivativeTensors& b, int order);

// Seeded uniform sampling of the parameter box shrunk by margin on each side.
// splitmix64 stream; identical seeds give bit-identical samples.
struct SampleConfig {
  int num_points = 20;
  std::uint64_t seed = 42;
  double interior_margin = 1e-3;
};

std::vector<std::vector<double>> sample_points(const ImmersionSpec& spec,
                                               const SampleConfig& cfg);

}  // namespace lagkit

namespace lagkit {

// Jets against finite differences for every order 1..max_order.
struct CrosscheckConfig {
  int max_order = 2;
  // Step for max_order; lower orders keep their defaults (1e-4 for orders
  // 1-2, 1e-2 for order 3).
  std::optional<double> step;
  SampleConfig sampling;
};

struct CrosscheckOrder {
  int order;
  double step;
  double tolerance;  // 1e-6 for orders 1-2, 1e-3 for order 3
  double max_deviation;
  bool pass;
};

struct CrosscheckResult {
  std::vector<CrosscheckOrder> orders;
  int points_evaluated = 0;
  bool pass() const;
};

double default_crosscheck_step(int order);
double crosscheck_tolerance(int order);
CrosscheckResult crosscheck(const ImmersionSpec& spec, const CrosscheckConfig& cfg);

}  // namespace lagkit
