#include "lagkit/verifier.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "lagkit/errors.hpp"
#include "lagkit/geometry.hpp"

namespace lagkit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Running max/mean of a per-point residual.
class Accumulator {
 public:
  Accumulator(std::string name, double tolerance) {
    r_.name = std::move(name);
    r_.tolerance = tolerance;
  }

  void add(const std::vector<double>& point, double value) {
    if (r_.points_evaluated == 0 || std::isnan(value) || value > r_.max_residual) {
      if (!std::isnan(r_.max_residual)) {
        r_.max_residual = value;
        r_.worst_point = point;
      }
    }
    sum_ += value;
    ++r_.points_evaluated;
  }

  void fail(const std::string& message) {
    r_.status = CheckStatus::error;
    r_.message = message;
  }

  CheckResult finish() {
    if (r_.points_evaluated > 0) r_.mean_residual = sum_ / r_.points_evaluated;
    if (r_.status == CheckStatus::error && r_.points_evaluated == 0) {
      r_.max_residual = r_.mean_residual = kNaN;
    }
    r_.pass = r_.status == CheckStatus::ok && r_.points_evaluated > 0 &&
              r_.max_residual <= r_.tolerance;
    return r_;
  }

 private:
  CheckResult r_;
  double sum_ = 0.0;
};

std::string describe_point(const std::vector<double>& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ", ";
    s += format_real(p[k]);
  }
  return s + ")";
}

// Evaluates residual(point) at every sample; the first error stops the check.
template <class F>
CheckResult pointwise(const std::string& name, const ImmersionSpec& spec,
                      const VerifierConfig& cfg, double tol, F&& residual) {
  Accumulator acc(name, tol);
  std::vector<double> current;
  try {
    for (const auto& p : sample_points(spec, cfg.sampling)) {
      current = p;
      acc.add(p, residual(p));
    }
  } catch (const Error& e) {
    acc.fail(std::string(e.what()) + (current.empty() ? "" : " at " + describe_point(current)));
  }
  return acc.finish();
}

CheckResult skipped(const std::string& name, double tol, const std::string& why) {
  CheckResult r;
  r.name = name;
  r.status = CheckStatus::skipped;
  r.tolerance = tol;
  r.max_residual = r.mean_residual = kNaN;
  r.message = why;
  return r;
}

CheckResult errored(const std::string& name, double tol, const std::string& why) {
  CheckResult r = skipped(name, tol, why);
  r.status = CheckStatus::error;
  return r;
}

const char* const kStructureNames[] = {"structure.v_tangent", "structure.v_unit",
                                       "structure.h_zv", "structure.h_vv",
                                       "structure.nabla_v"};

// Solves A x = b for jets by Gaussian elimination with partial pivoting on
// the values, so the derivatives of the solution come out of the jet algebra.
std::vector<Jet> jet_solve(std::vector<Jet> a, std::vector<Jet> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (std::abs(a[r * m + col].value()) > std::abs(a[piv * m + col].value())) piv = r;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[col * m + c], a[piv * m + c]);
      std::swap(b[col], b[piv]);
    }
    const Jet inv = reciprocal(a[col * m + col]);
    for (std::size_t r = col + 1; r < m; ++r) {
      const Jet factor = a[r * m + col] * inv;
      for (std::size_t c = col; c < m; ++c) a[r * m + c] -= factor * a[col * m + c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Jet> x(b);
  for (std::size_t k = m; k-- > 0;) {
    for (std::size_t c = k + 1; c < m; ++c) x[k] -= a[k * m + c] * x[c];
    x[k] = x[k] * reciprocal(a[k * m + k]);
  }
  return x;
}

// <a, b> for vectors of complex jets.
Jet jet_inner(const Signature& sig, const std::vector<ComplexJet>& a,
              const std::vector<ComplexJet>& b) {
  Jet sum(a.front().num_vars(), a.front().order());
  for (std::size_t c = 0; c < a.size(); ++c) {
    sum += sig.sign(c) * (a[c].re * b[c].re + a[c].im * b[c].im);
  }
  return sum;
}

struct Normalization {
  ImmersionSpec spec;
  Transform transform;
  double epsilon;
};

Normalization normalize_by_fit(const ImmersionSpec& spec, const SphereFit& fit) {
  const double eps = fit.radius_sq_signed > 0.0 ? 1.0 : -1.0;
  Transform t{fit.center, std::sqrt(std::abs(fit.radius_sq_signed))};
  return {transformed_spec(spec, t), t, eps};
}

}  // namespace

bool CheckReport::all_passed() const {
  for (const auto& [name, c] : checks) {
    if (c.status != CheckStatus::skipped && !c.pass) return false;
  }
  return true;
}

CheckResult check_lagrangian(const ImmersionSpec& spec, const VerifierConfig& cfg) {
  const std::string name = "lagrangian";
  if (spec.num_params() != spec.ambient_dim()) {
    return errored(name, cfg.tol.jet,
                   "not half-dimensional: " + std::to_string(spec.num_params()) +
                       " parameters in C^" + std::to_string(spec.ambient_dim()));
  }
  return pointwise(name, spec, cfg, cfg.tol.jet, [&](const std::vector<double>& p) {
    const GeometryFrame f = build_frame(spec, p, false);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.dim; ++i) {
      const ComplexVec jl = apply_J(f.L(i));
      for (std::size_t j = 0; j < f.dim; ++j) {
        worst = std::max(worst, std::abs(real_inner(jl, f.L(j))));
      }
    }
    return worst;
  });
}

FitOutcome fit_hypersphere(const ImmersionSpec& spec, const VerifierConfig& cfg) {
  const std::string name = "sphere_fit";
  const double tol = cfg.tol.jet;
  const std::size_t n = spec.ambient_dim();
  const std::size_t unknowns = 2 * n + 1;
  if (static_cast<std::size_t>(cfg.sampling.num_points) < unknowns + 1) {
    return {errored(name, tol,
                    "sphere fit needs at least " + std::to_string(unknowns + 1) + " points"),
            std::nullopt};
  }
  try {
    const auto points = sample_points(spec, cfg.sampling);
    const Signature& sig = spec.signature;
    Eigen::MatrixXd a(points.size(), unknowns);
    Eigen::VectorXd rhs(points.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
      const auto jets = evaluate_map_jets(spec, points[r], 0);
      double ll = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        const Complex z = jets[c].value();
        const double e = sig.sign(c);
        a(r, 2 * c) = 2.0 * e * z.re;
        a(r, 2 * c + 1) = 2.0 * e * z.im;
        ll += e * z.norm_sq();
      }
      a(r, 2 * n) = 1.0;
      rhs(r) = ll;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    qr.setThreshold(1e-10);
    qr.compute(a);
    if (static_cast<std::size_t>(qr.rank()) < unknowns) {
      throw IndeterminateFit("rank-deficient sphere fit (rank " + std::to_string(qr.rank()) +
                             " of " + std::to_string(unknowns) +
                             "); the sample spans no full-dimensional affine hull");
    }
    const Eigen::VectorXd x = qr.solve(rhs);
    const Eigen::VectorXd resid = a * x - rhs;

    ComplexVec center(sig);
    for (std::size_t c = 0; c < n; ++c) center[c] = Complex{x(2 * c), x(2 * c + 1)};
    const double k = x(2 * n);
    const double r2 = k + real_inner(center, center);

    Accumulator acc(name, tol);
    double sq = 0.0;
    for (std::size_t r = 0; r < points.size(); ++r) {
      acc.add(points[r], std::abs(resid(r)));
      sq += resid(r) * resid(r);
    }
    const double rms = std::sqrt(sq / static_cast<double>(points.size()));
    return {acc.finish(), SphereFit{center, r2, rms}};
  } catch (const Error& e) {
    return {errored(name, tol, e.what()), std::nullopt};
  }
}

CheckResult check_legendrian(const ImmersionSpec& spec, const VerifierConfig& cfg,
                             const AmbientQuadric& q) {
  const std::string name = "legendrian";
  if (spec.num_params() + 1 != spec.ambient_dim()) {
    return errored(name, cfg.tol.jet,
                   "Legendrian check needs n-1 parameters in C^n; got " +
                       std::to_string(spec.num_params()) + " in C^" +
                       std::to_string(spec.ambient_dim()));
  }
  return pointwise(name, spec, cfg, cfg.tol.jet, [&](const std::vector<double>& p) {
    const GeometryFrame f = build_frame(spec, p, false);
    const ComplexVec jpsi = apply_J(f.position);
    double worst = std::abs(quadric_residual(f.position, q));
    for (std::size_t i = 0; i < f.dim; ++i) {
      worst = std::max(worst, std::abs(real_inner(f.L(i), jpsi)));
      const ComplexVec jl = apply_J(f.L(i));
      for (std::size_t j = 0; j < f.dim; ++j) {
        worst = std::max(worst, std::abs(real_inner(jl, f.L(j))));
      }
    }
    return worst;
  });
}

CheckResult check_horizontal(const ImmersionSpec& spec, const VerifierConfig& cfg) {
  return pointwise("horizontal", spec, cfg, cfg.tol.jet, [&](const std::vector<double>& p) {
    const GeometryFrame f = build_frame(spec, p, false);
    const ComplexVec jpsi = apply_J(f.position);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.dim; ++i) {
      worst = std::max(worst, std::abs(real_inner(f.L(i), jpsi)));
    }
    return worst;
  });
}

CheckResult check_cubic_symmetry(const ImmersionSpec& spec, const VerifierConfig& cfg) {
  return pointwise("cubic_symmetry", spec, cfg, cfg.tol.jet, [&](const std::vector<double>& p) {
    const GeometryFrame f = build_frame(spec, p, false);
    const std::size_t m = f.dim;
    std::vector<ComplexVec> jl;
    for (std::size_t k = 0; k < m; ++k) jl.push_back(apply_J(f.L(k)));
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          const double a = real_inner(f.h(i, j), jl[k]);
          const double b = real_inner(f.h(j, k), jl[i]);
          worst = std::max(worst, std::abs(a - b));
        }
      }
    }
    return worst;
  });
}

StructureOutcome check_theorem_structure(const ImmersionSpec& spec, const VerifierConfig& cfg) {
  const double tol = cfg.tol.jet;
  StructureOutcome out;
  auto skip_all = [&](const std::string& why) {
    for (const char* n : kStructureNames) out.checks.push_back(skipped(n, tol, why));
    return out;
  };
  if (spec.num_params() != spec.ambient_dim()) {
    return skip_all("requires n parameters in C^n");
  }
  const CheckResult lag = check_lagrangian(spec, cfg);
  if (!lag.pass) return skip_all("prerequisite failed: lagrangian");
  const FitOutcome fit = fit_hypersphere(spec, cfg);
  if (!fit.check.pass || !fit.fit) {
    return skip_all("prerequisite failed: sphere_fit" +
                    (fit.check.message.empty() ? "" : " (" + fit.check.message + ")"));
  }

  Normalization norm = normalize_by_fit(spec, *fit.fit);
  out.transform = norm.transform;
  out.epsilon = norm.epsilon;
  const ImmersionSpec& x = norm.spec;
  const Signature& sig = x.signature;

  std::vector<Accumulator> acc;
  for (const char* n : kStructureNames) acc.emplace_back(n, tol);
  std::vector<double> current;
  try {
    for (const auto& p : sample_points(x, cfg.sampling)) {
      current = p;
      const auto jets = evaluate_map_jets(x, p, 2);
      const GeometryFrame f = build_frame_from_jets(sig, p, jets, false);
      const std::size_t m = f.dim;

      // V = tangential part of J x.
      const ComplexVec jx = apply_J(f.position);
      const Projection proj = project(f, jx);
      const std::vector<double>& a = proj.tangential;
      const ComplexVec v = tangent_vector(f, a);
      acc[0].add(p, proj.normal.euclidean_norm());
      acc[1].add(p, std::abs(real_inner(v, v) - norm.epsilon));

      double h_zv = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        ComplexVec hk(sig);
        for (std::size_t j = 0; j < m; ++j) hk.add_scaled(a[j], f.h(k, j));
        h_zv = std::max(h_zv, (hk - apply_J(f.L(k))).euclidean_norm());
      }
      acc[2].add(p, h_zv);

      ComplexVec hvv = f.position;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) hvv.add_scaled(a[i] * a[j], f.h(i, j));
      }
      acc[3].add(p, hvv.euclidean_norm());

      // Coefficients of V as jets: solve g a = <J x, L_l> with jet entries.
      std::vector<ComplexJet> pos;
      std::vector<std::vector<ComplexJet>> d(m);
      for (const auto& jet : jets) {
        pos.emplace_back(jet.re.truncated(1), jet.im.truncated(1));
        for (std::size_t l = 0; l < m; ++l) d[l].push_back(jet.partial(static_cast<int>(l)));
      }
      std::vector<ComplexJet> jpos;
      for (const auto& z : pos) jpos.emplace_back(-z.im, z.re);
      std::vector<Jet> gram;
      std::vector<Jet> rhs;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) gram.push_back(jet_inner(sig, d[i], d[j]));
        rhs.push_back(jet_inner(sig, jpos, d[i]));
      }
      const std::vector<Jet> coeff = jet_solve(gram, rhs);
      double nabla = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        std::vector<double> nv(m, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
          nv[j] = coeff[j].d(static_cast<int>(k));
          for (std::size_t i = 0; i < m; ++i) nv[j] += f.gamma(j, k, i) * coeff[i].value();
        }
        nabla = std::max(nabla, tangent_vector(f, nv).euclidean_norm());
      }
      acc[4].add(p, nabla);
    }
  } catch (const Error& e) {
    for (auto& a : acc) a.fail(std::string(e.what()) + " at " + describe_point(current));
  }
  for (auto& a : acc) out.checks.push_back(a.finish());
  out.normalized = std::move(norm.spec);
  return out;
}

CheckResult check_product_metric(const ImmersionSpec& spec, const VerifierConfig& cfg,
                                 std::optional<double> epsilon) {
  std::optional<double> g_tt_ref = epsilon;
  return pointwise("product_metric", spec, cfg, cfg.tol.jet, [&](const std::vector<double>& p) {
    const GeometryFrame f = build_frame(spec, p, false);
    const std::size_t m = f.dim;
    if (!g_tt_ref) g_tt_ref = f.g(0, 0);
    double worst = std::abs(f.g(0, 0) - *g_tt_ref);
    for (std::size_t j = 1; j < m; ++j) worst = std::max(worst, std::abs(f.g(0, j)));
    for (std::size_t i = 1; i < m; ++i) {
      for (std::size_t j = 1; j < m; ++j) {
        worst = std::max(worst, std::abs(f.metric_deriv[(0 * m + i) * m + j]));
      }
    }
    return worst;
  });
}

CheckResult check_umbilical_relation(const ImmersionSpec& spec, const VerifierConfig& cfg,
                                     const AmbientQuadric& q) {
  const double tol = cfg.tol.jet;
  return pointwise("umbilical", spec, cfg, tol, [&](const std::vector<double>& p) {
    const GeometryFrame f = build_frame(spec, p, false);
    const double membership = quadric_residual(f.position, q);
    if (!(std::abs(membership) <= tol)) {
      throw DomainError("membership failure: <L,L> - 1/c = " + format_real(membership));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < f.dim; ++i) {
      for (std::size_t j = 0; j < f.dim; ++j) {
        ComplexVec hq = f.h(i, j);
        hq.add_scaled(q.c() * f.g(i, j), f.position);
        worst = std::max(worst, std::abs(real_inner(hq, f.position)));
      }
    }
    return worst;
  });
}

CheckResult check_index(const ImmersionSpec& spec, const VerifierConfig& cfg) {
  if (!spec.expected_index) return skipped("index", 0.0, "no expected_index declared");
  const int expected = *spec.expected_index;
  return pointwise("index", spec, cfg, 0.0, [&](const std::vector<double>& p) {
    const GeometryFrame f = build_frame(spec, p, false);
    return static_cast<double>(std::abs(metric_index(f) - expected));
  });
}

CheckResult check_gauss(const ImmersionSpec& spec, const VerifierConfig& cfg) {
  return pointwise("gauss", spec, cfg, cfg.tol.third, [&](const std::vector<double>& p) {
    return gauss_residual(build_frame(spec, p, true));
  });
}

CheckResult check_codazzi(const ImmersionSpec& spec, const VerifierConfig& cfg) {
  return pointwise("codazzi", spec, cfg, cfg.tol.third, [&](const std::vector<double>& p) {
    return codazzi_residual(build_frame(spec, p, true));
  });
}

ImmersionSpec transformed_spec(const ImmersionSpec& spec, const Transform& t) {
  if (!(t.scale > 0.0)) throw UsageError("transform scale must be positive");
  if (t.center.size() != spec.ambient_dim()) throw DimensionError("transform center dimension");
  ImmersionSpec out = spec;
  out.quadric_c.reset();
  out.components.clear();
  for (std::size_t c = 0; c < spec.components.size(); ++c) {
    out.components.push_back(binary(
        BinaryOp::div, binary(BinaryOp::sub, spec.components[c], complex_constant(t.center[c])),
        real_constant(t.scale)));
  }
  return out;
}

ImmersionSpec affine_image(const ImmersionSpec& spec, double lambda, const ComplexVec& offset) {
  if (lambda == 0.0) throw UsageError("affine scale must be nonzero");
  if (offset.size() != spec.ambient_dim()) throw DimensionError("offset dimension");
  ImmersionSpec out = spec;
  out.name = spec.name.empty() ? std::string() : spec.name + "_affine";
  out.quadric_c.reset();
  out.components.clear();
  for (std::size_t c = 0; c < spec.components.size(); ++c) {
    out.components.push_back(
        binary(BinaryOp::add, binary(BinaryOp::mul, real_constant(lambda), spec.components[c]),
               complex_constant(offset[c])));
  }
  return out;
}

CheckReport run_suite(const ImmersionSpec& spec, const VerifierConfig& cfg,
                      std::optional<AmbientQuadric> declared) {
  CheckReport report;
  report.spec_name = spec.name;
  auto wanted = [&](const std::string& name) {
    if (!cfg.only) return true;
    if (cfg.only->count(name)) return true;
    const auto dot = name.find('.');
    return dot != std::string::npos && cfg.only->count(name.substr(0, dot)) > 0;
  };
  auto add = [&](CheckResult r) {
    if (wanted(r.name)) report.checks[r.name] = std::move(r);
  };

  if (!declared && spec.quadric_c) declared = AmbientQuadric::from_curvature(*spec.quadric_c);
  const std::size_t m = spec.num_params();
  const std::size_t n = spec.ambient_dim();

  if (m == n) {
    const CheckResult lag = check_lagrangian(spec, cfg);
    const bool lagrangian = lag.pass;
    add(lag);
    FitOutcome fit = fit_hypersphere(spec, cfg);
    report.sphere_fit = fit.fit;
    add(fit.check);
    if (lagrangian) {
      add(check_cubic_symmetry(spec, cfg));
    } else {
      add(skipped("cubic_symmetry", cfg.tol.jet, "prerequisite failed: lagrangian"));
    }
    StructureOutcome st = check_theorem_structure(spec, cfg);
    report.transform = st.transform;
    const std::string structure_note = st.checks.front().message;
    for (auto& c : st.checks) add(std::move(c));
    if (st.normalized) {
      add(check_product_metric(*st.normalized, cfg, st.epsilon));
    } else {
      add(skipped("product_metric", cfg.tol.jet, structure_note));
    }
    if (declared) {
      add(check_umbilical_relation(spec, cfg, *declared));
    } else if (st.normalized) {
      add(check_umbilical_relation(*st.normalized, cfg,
                                   AmbientQuadric::from_curvature(st.epsilon)));
    } else if (fit.check.pass && fit.fit) {
      Normalization norm = normalize_by_fit(spec, *fit.fit);
      report.transform = norm.transform;
      add(check_umbilical_relation(norm.spec, cfg, AmbientQuadric::from_curvature(norm.epsilon)));
    } else {
      add(skipped("umbilical", cfg.tol.jet, "no quadric declared or fitted"));
    }
  } else if (m + 1 == n) {
    const ImmersionSpec* target = &spec;
    std::optional<Normalization> norm;
    std::optional<AmbientQuadric> q = declared;
    if (!q) {
      FitOutcome fit = fit_hypersphere(spec, cfg);
      report.sphere_fit = fit.fit;
      const bool ok = fit.check.pass && fit.fit;
      add(fit.check);
      if (ok) {
        norm = normalize_by_fit(spec, *fit.fit);
        report.transform = norm->transform;
        target = &norm->spec;
        q = AmbientQuadric::from_curvature(norm->epsilon);
      }
    }
    if (q) {
      add(check_legendrian(*target, cfg, *q));
      add(check_horizontal(*target, cfg));
      add(check_umbilical_relation(*target, cfg, *q));
    } else {
      for (const char* name : {"legendrian", "horizontal", "umbilical"}) {
        add(skipped(name, cfg.tol.jet, "no quadric declared or fitted"));
      }
    }
  }

  if (spec.expected_index) add(check_index(spec, cfg));
  add(check_gauss(spec, cfg));
  add(check_codazzi(spec, cfg));
  return report;
}

}  // namespace lagkit
