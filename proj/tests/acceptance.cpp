// Acceptance suite: one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lagkit/constructor.hpp"
#include "lagkit/differentiation.hpp"
#include "lagkit/geometry.hpp"
#include "lagkit/verifier.hpp"

using namespace lagkit;

namespace {

// Collects failed conditions and the measured values worth printing.
struct Criterion {
  std::vector<std::string> failures;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double max_over(const ImmersionSpec& spec, const std::function<double(const GeometryFrame&)>& f,
                bool third) {
  double worst = 0.0;
  for (const auto& p : sample_points(spec, SampleConfig{})) {
    const double v = f(build_frame(spec, p, third));
    if (std::isnan(v) || v > worst) worst = v;
  }
  return worst;
}

void constructor_soundness(Criterion& c) {
  const VerifierConfig cfg;
  for (const char* name : {"real_circle_S3", "real_sphere_S5", "minimal_legendrian_torus_S5"}) {
    const ImmersionSpec l = circle_product(catalog(name));
    const std::string tag = std::string(name) + ": ";
    c.expect(check_lagrangian(l, cfg).pass, tag + "lagrangian");
    const FitOutcome fit = fit_hypersphere(l, cfg);
    c.expect(fit.check.pass && fit.fit, tag + "sphere fit");
    if (fit.fit) {
      const double off = fit.fit->center.euclidean_norm();
      const double dr = std::abs(fit.fit->radius_sq_signed - 1.0);
      c.expect(off < 1e-7, tag + "center " + sci(off));
      c.expect(dr <= 1e-8, tag + "r^2 - 1 = " + sci(dr));
    }
    const StructureOutcome st = check_theorem_structure(l, cfg);
    double worst = 0.0;
    for (const auto& r : st.checks) {
      c.expect(r.pass && r.max_residual < 1e-8, tag + r.name + " " + sci(r.max_residual));
      worst = std::max(worst, r.max_residual);
    }
    double pm = NAN;
    if (st.normalized) {
      const CheckResult r = check_product_metric(*st.normalized, cfg, st.epsilon);
      pm = r.max_residual;
      c.expect(r.pass && r.max_residual < 1e-8, tag + "product_metric " + sci(pm));
    } else {
      c.expect(false, tag + "no normalized spec");
    }
    c.notes << name << " structure<=" << sci(worst) << " product<=" << sci(pm) << "; ";
  }
}

void pseudo_variants(Criterion& c) {
  const VerifierConfig cfg;
  const std::pair<const char*, double> cases[] = {{"theorem42_example", 1.0},
                                                  {"theorem43_example", -1.0}};
  for (const auto& [name, eps] : cases) {
    const ImmersionSpec s = catalog(name);
    const std::string tag = std::string(name) + ": ";
    const CheckReport r = run_suite(s, cfg);
    c.expect(r.all_passed(), tag + "suite");
    const double dg = max_over(s, [&](const GeometryFrame& f) { return std::abs(f.g(0, 0) - eps); },
                               false);
    c.expect(dg <= 1e-10, tag + "g_tt deviation " + sci(dg));
    if (r.sphere_fit) {
      const double dr = std::abs(r.sphere_fit->radius_sq_signed - eps);
      c.expect(dr <= 1e-8, tag + "signed r^2 deviation " + sci(dr));
    } else {
      c.expect(false, tag + "no sphere fit");
    }
    const CheckResult idx = check_index(s, cfg);
    c.expect(idx.pass && idx.max_residual == 0.0, tag + "index");
    c.notes << name << " g_tt=" << (eps > 0 ? "+1" : "-1") << " index=" << *s.expected_index
            << "; ";
  }
}

void structural_identities(Criterion& c) {
  const StructureOutcome st = check_theorem_structure(catalog("clifford_torus"), VerifierConfig{});
  for (const auto& r : st.checks) {
    if (r.name == "structure.h_vv" || r.name == "structure.h_zv") {
      c.expect(r.status == CheckStatus::ok && r.points_evaluated == 20 && r.max_residual < 1e-9,
               r.name + " " + sci(r.max_residual));
      c.notes << r.name << "=" << sci(r.max_residual) << " ";
    }
  }
}

void class_identities(Criterion& c) {
  const VerifierConfig cfg;
  bool whitney_seen = false;
  int count = 0;
  for (const auto& e : catalog_entries()) {
    const ImmersionSpec s = catalog(e.name);
    if (s.num_params() != s.ambient_dim() || !check_lagrangian(s, cfg).pass) continue;
    ++count;
    whitney_seen |= e.name == "whitney_sphere";
    const double cubic = check_cubic_symmetry(s, cfg).max_residual;
    const double gauss = check_gauss(s, cfg).max_residual;
    const double codazzi = check_codazzi(s, cfg).max_residual;
    c.expect(cubic < 1e-9, e.name + " cubic " + sci(cubic));
    c.expect(gauss < 1e-7, e.name + " gauss " + sci(gauss));
    c.expect(codazzi < 1e-6, e.name + " codazzi " + sci(codazzi));
  }
  c.expect(whitney_seen, "whitney_sphere not among Lagrangian entries");
  c.notes << count << " Lagrangian entries";
}

void curvature_oracle(Criterion& c) {
  const ImmersionSpec p = catalog("product_S1xS2");
  const double dk = max_over(
      p, [](const GeometryFrame& f) { return std::abs(sectional_curvature(f, 1, 2) - 1.0); }, true);
  c.expect(dk <= 1e-6, "K(u,v) - 1 = " + sci(dk));
  const double rmax = max_over(
      catalog("clifford_torus"),
      [](const GeometryFrame& f) {
        double w = 0.0;
        for (double r : riemann_tensor(f)) w = std::max(w, std::abs(r));
        return w;
      },
      true);
  c.expect(rmax < 1e-8, "clifford max |R| " + sci(rmax));
  c.notes << "|K-1|<=" << sci(dk) << " clifford |R|<=" << sci(rmax);
}

void negative_controls(Criterion& c) {
  const VerifierConfig cfg;
  const FitOutcome w = fit_hypersphere(catalog("whitney_sphere"), cfg);
  const double rms = w.fit ? w.fit->rms_residual : NAN;
  c.expect(!w.check.pass && rms > 0.05, "whitney rms " + sci(rms));
  const CheckResult l = check_lagrangian(catalog("control_non_lagrangian"), cfg);
  c.expect(!l.pass && l.max_residual > 0.05, "non-lagrangian " + sci(l.max_residual));
  const CheckResult h = check_horizontal(catalog("control_non_horizontal"), cfg);
  c.expect(!h.pass && h.max_residual > 0.5, "non-horizontal " + sci(h.max_residual));
  c.notes << "whitney rms=" << sci(rms) << " lagrangian=" << sci(l.max_residual)
          << " horizontal=" << sci(h.max_residual);
}

void differentiation_oracle(Criterion& c) {
  double worst[4] = {0, 0, 0, 0};
  for (const auto& e : catalog_entries()) {
    CrosscheckConfig cfg;
    cfg.max_order = 3;
    const CrosscheckResult r = crosscheck(catalog(e.name), cfg);
    c.expect(r.points_evaluated == 20, e.name + " points");
    for (const auto& o : r.orders) {
      const double tol = o.order == 3 ? 1e-3 : 1e-6;
      const double step = o.order == 3 ? 1e-2 : 1e-4;
      c.expect(o.step == step && o.max_deviation < tol,
               e.name + " order " + std::to_string(o.order) + " " + sci(o.max_deviation));
      worst[o.order] = std::max(worst[o.order], o.max_deviation);
    }
  }
  c.notes << "max deviation d1=" << sci(worst[1]) << " d2=" << sci(worst[2])
          << " d3=" << sci(worst[3]);
}

void equivariance(Criterion& c) {
  const VerifierConfig cfg;
  const ComplexVec c0({{0.3, 0.0}, {0.0, 0.7}}, Signature(2, 0));
  const ImmersionSpec moved = affine_image(catalog("clifford_torus"), 2.5, c0);
  const FitOutcome fit = fit_hypersphere(moved, cfg);
  if (!fit.fit) {
    c.expect(false, "no fit");
    return;
  }
  const double off = (fit.fit->center - c0).euclidean_norm();
  const double radius = std::sqrt(fit.fit->radius_sq_signed);
  c.expect(off <= 1e-7, "center offset " + sci(off));
  c.expect(std::abs(radius - 2.5) <= 1e-7, "radius " + sci(radius));
  const CheckReport r = run_suite(moved, cfg);
  c.expect(r.all_passed(), "suite on moved spec");
  if (!r.transform) {
    c.expect(false, "no transform recorded");
    return;
  }
  const ImmersionSpec back = transformed_spec(moved, *r.transform);
  c.expect(check_lagrangian(back, cfg).pass, "lagrangian after re-normalization");
  c.expect(check_cubic_symmetry(back, cfg).pass, "cubic after re-normalization");
  c.expect(check_gauss(back, cfg).pass, "gauss after re-normalization");
  c.expect(check_codazzi(back, cfg).pass, "codazzi after re-normalization");
  c.notes << "center offset=" << sci(off) << " radius-2.5=" << sci(radius - 2.5)
          << " recorded scale=" << r.transform->scale;
}

std::string run_binary(const std::string& args, int& status) {
  const std::string cmd = std::string(LAGKIT_CLI) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  status = pclose(p);
  return out;
}

void determinism(Criterion& c) {
  int s1 = 0, s2 = 0;
  const std::string a = run_binary("check clifford_torus --json --seed 42", s1);
  const std::string b = run_binary("check clifford_torus --json --seed 42", s2);
  c.expect(s1 == 0 && s2 == 0, "exit status");
  c.expect(!a.empty() && a == b, "outputs differ");
  c.notes << a.size() << " bytes, identical=" << (a == b ? "yes" : "no");
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Criterion&)> criteria[] = {
      {"constructor soundness", constructor_soundness},
      {"pseudo variants", pseudo_variants},
      {"structural identities", structural_identities},
      {"class identities", class_identities},
      {"curvature oracle", curvature_oracle},
      {"negative controls", negative_controls},
      {"differentiation oracle", differentiation_oracle},
      {"equivariance", equivariance},
      {"determinism", determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [title, fn] : criteria) {
    Criterion c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", index++, title, c.notes.str().c_str());
    for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
