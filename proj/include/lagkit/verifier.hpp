#pragma once

// Named residual checks over seeded sample points, aggregated into reports.
//
// Check names:
//   lagrangian          max |<J L_i, L_j>|
//   sphere_fit          algebraic least-squares fit of <L,L> - 2<L,p> = k
//   cubic_symmetry      max |<h_ij, J L_k> - <h_jk, J L_i>|
//   structure.*         V = tangential part of J x on the re-normalized map:
//     v_tangent           |normal part of J x|
//     v_unit              |<V,V> - eps|
//     h_zv                |h(d_k, V) - J d_k|
//     h_vv                |h(V,V) + x|
//     nabla_v             |nabla_k V|
//   product_metric      g_t,u_j = 0, d_t g_ij = 0 (i,j >= 1), g_tt = eps
//   legendrian          max(|<psi,psi> - 1/c|, |<psi_i, J psi>|, |<J psi_i, psi_j>|)
//   horizontal          max |<psi_i, J psi>|
//   umbilical           max |<h_ij + c g_ij L, L>|
//   index               |negative eigenvalues of g - expected_index|
//   gauss               Gauss equation residual
//   codazzi             Codazzi equation residual
// Vector-valued residuals are measured with the Euclidean norm of C^n = R^2n.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lagkit/differentiation.hpp"
#include "lagkit/dsl.hpp"
#include "lagkit/hermitian.hpp"

namespace lagkit {

struct Tolerances {
  double jet = 1e-8;    // identities exact up to rounding in the jets
  double third = 1e-6;  // checks that use third derivatives (gauss, codazzi)
};

struct VerifierConfig {
  SampleConfig sampling;
  Tolerances tol;
  // When set, only checks whose name (or "prefix." group) is listed are
  // reported. Prerequisites still run internally.
  std::optional<std::set<std::string>> only;
};

enum class CheckStatus { ok, skipped, error };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::ok;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  int points_evaluated = 0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<double> worst_point;
  std::string message;
};

struct SphereFit {
  ComplexVec center;
  double radius_sq_signed;
  double rms_residual;
};

// x -> (x - center) / scale
struct Transform {
  ComplexVec center;
  double scale;
};

struct FitOutcome {
  CheckResult check;
  std::optional<SphereFit> fit;
};

struct StructureOutcome {
  std::vector<CheckResult> checks;
  std::optional<Transform> transform;
  std::optional<ImmersionSpec> normalized;
  double epsilon = 1.0;
};

struct CheckReport {
  std::string spec_name;
  std::map<std::string, CheckResult> checks;
  std::optional<SphereFit> sphere_fit;
  std::optional<Transform> transform;

  // True when every check that ran (not skipped) passed.
  bool all_passed() const;
};

CheckResult check_lagrangian(const ImmersionSpec& spec, const VerifierConfig& cfg);
FitOutcome fit_hypersphere(const ImmersionSpec& spec, const VerifierConfig& cfg);
CheckResult check_legendrian(const ImmersionSpec& spec, const VerifierConfig& cfg,
                             const AmbientQuadric& q);
CheckResult check_horizontal(const ImmersionSpec& spec, const VerifierConfig& cfg);
CheckResult check_cubic_symmetry(const ImmersionSpec& spec, const VerifierConfig& cfg);
StructureOutcome check_theorem_structure(const ImmersionSpec& spec, const VerifierConfig& cfg);
// With epsilon unset, g_tt is compared against its value at the first sample.
CheckResult check_product_metric(const ImmersionSpec& spec, const VerifierConfig& cfg,
                                 std::optional<double> epsilon = std::nullopt);
CheckResult check_umbilical_relation(const ImmersionSpec& spec, const VerifierConfig& cfg,
                                     const AmbientQuadric& q);
CheckResult check_index(const ImmersionSpec& spec, const VerifierConfig& cfg);
CheckResult check_gauss(const ImmersionSpec& spec, const VerifierConfig& cfg);
CheckResult check_codazzi(const ImmersionSpec& spec, const VerifierConfig& cfg);

// The map (L - center) / scale, built on the AST.
ImmersionSpec transformed_spec(const ImmersionSpec& spec, const Transform& t);
// lambda * L + offset, built on the AST.
ImmersionSpec affine_image(const ImmersionSpec& spec, double lambda, const ComplexVec& offset);

// `declared` overrides a quadric declared in the spec metadata.
CheckReport run_suite(const ImmersionSpec& spec, const VerifierConfig& cfg,
                      std::optional<AmbientQuadric> declared = std::nullopt);

}  // namespace lagkit
