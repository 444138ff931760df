#include "lagkit/differentiation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lagkit/errors.hpp"

namespace lagkit {

void require_in_domain(const ImmersionSpec& spec, std::span<const double> point,
                       double reach) {
  if (point.size() != spec.num_params()) {
    throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, spec has " +
                         std::to_string(spec.num_params()) + " parameters");
  }
  for (std::size_t k = 0; k < point.size(); ++k) {
    const auto& p = spec.params[k];
    if (!(point[k] - reach >= p.lower && point[k] + reach <= p.upper)) {
      throw DomainError("coordinate " + p.name + "=" + format_real(point[k]) +
                        (reach > 0.0 ? " with stencil reach " + format_real(reach) : "") +
                        " outside [" + format_real(p.lower) + "," + format_real(p.upper) + "]");
    }
  }
}

std::vector<ComplexJet> evaluate_map_jets(const ImmersionSpec& spec,
                                          std::span<const double> point, int order) {
  require_in_domain(spec, point);
  const int m = static_cast<int>(spec.num_params());
  std::vector<Jet> env;
  env.reserve(point.size());
  for (int k = 0; k < m; ++k) env.push_back(Jet::variable(k, point[k], m, order));
  std::vector<ComplexJet> out;
  out.reserve(spec.components.size());
  for (const auto& c : spec.components) out.push_back(eval_expr(*c, env));
  return out;
}

std::vector<std::complex<double>> evaluate_map_values(const ImmersionSpec& spec,
                                                      std::span<const double> point) {
  std::vector<std::complex<double>> out;
  out.reserve(spec.components.size());
  for (const auto& c : spec.components) out.push_back(eval_numeric(*c, point));
  return out;
}

DerivativeTensors tensors_from_jets(const std::vector<ComplexJet>& jets) {
  DerivativeTensors t;
  if (jets.empty()) return t;
  const int m = jets.front().num_vars();
  t.num_vars = static_cast<std::size_t>(m);
  t.order = jets.front().order();
  auto c = [](Complex z) { return std::complex<double>(z.re, z.im); };
  for (const auto& jet : jets) {
    t.value.push_back(c(jet.value()));
    if (t.order >= 1) {
      auto& f = t.first.emplace_back();
      for (int i = 0; i < m; ++i) f.push_back(c(jet.d(i)));
    }
    if (t.order >= 2) {
      auto& s = t.second.emplace_back();
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) s.push_back(c(jet.d(i, j)));
      }
    }
    if (t.order >= 3) {
      auto& th = t.third.emplace_back();
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          for (int k = 0; k < m; ++k) th.push_back(c(jet.d(i, j, k)));
        }
      }
    }
  }
  return t;
}

double stencil_reach(int order, double step) { return order >= 3 ? 2.0 * step : step; }

namespace {

using CVec = std::vector<std::complex<double>>;

class Stencil {
 public:
  Stencil(const ImmersionSpec& spec, std::vector<double> x, double h)
      : spec_(spec), x_(std::move(x)), h_(h) {}

  CVec at(std::span<const std::pair<std::size_t, double>> offsets) const {
    std::vector<double> p = x_;
    for (auto [k, s] : offsets) p[k] += s * h_;
    return evaluate_map_values(spec_, p);
  }

  // Hessian at x + shift * h * e_shift_var (flattened per component).
  std::vector<CVec> hessian(std::size_t shift_var, double shift) const {
    const std::size_t m = x_.size();
    const std::size_t n = spec_.components.size();
    std::vector<CVec> out(n, CVec(m * m));
    using Off = std::pair<std::size_t, double>;
    auto eval = [&](std::initializer_list<Off> base) {
      std::vector<Off> offs(base);
      if (shift != 0.0) offs.push_back({shift_var, shift});
      return at(offs);
    };
    const CVec center = eval({});
    const double h2 = h_ * h_;
    for (std::size_t i = 0; i < m; ++i) {
      const CVec plus = eval({{i, 1.0}});
      const CVec minus = eval({{i, -1.0}});
      for (std::size_t c = 0; c < n; ++c) {
        out[c][i * m + i] = (plus[c] - 2.0 * center[c] + minus[c]) / h2;
      }
      for (std::size_t j = i + 1; j < m; ++j) {
        const CVec pp = eval({{i, 1.0}, {j, 1.0}});
        const CVec pm = eval({{i, 1.0}, {j, -1.0}});
        const CVec mp = eval({{i, -1.0}, {j, 1.0}});
        const CVec mm = eval({{i, -1.0}, {j, -1.0}});
        for (std::size_t c = 0; c < n; ++c) {
          const auto v = (pp[c] - pm[c] - mp[c] + mm[c]) / (4.0 * h2);
          out[c][i * m + j] = v;
          out[c][j * m + i] = v;
        }
      }
    }
    return out;
  }

 private:
  const ImmersionSpec& spec_;
  std::vector<double> x_;
  double h_;
};

}  // namespace

DerivativeTensors finite_difference_oracle(const ImmersionSpec& spec,
                                           std::span<const double> point, int order,
                                           double step) {
  if (order < 0 || order > 3) throw DimensionError("oracle order must be in 0..3");
  if (!(step > 0.0)) throw UsageError("finite-difference step must be positive");
  require_in_domain(spec, point, order > 0 ? stencil_reach(order, step) : 0.0);

  const std::size_t m = spec.num_params();
  const std::size_t n = spec.components.size();
  const Stencil st(spec, std::vector<double>(point.begin(), point.end()), step);

  DerivativeTensors t;
  t.num_vars = m;
  t.order = order;
  t.value = st.at({});
  if (order >= 1) {
    t.first.assign(n, CVec(m));
    for (std::size_t i = 0; i < m; ++i) {
      const std::pair<std::size_t, double> p[] = {{i, 1.0}};
      const std::pair<std::size_t, double> q[] = {{i, -1.0}};
      const CVec plus = st.at(p);
      const CVec minus = st.at(q);
      for (std::size_t c = 0; c < n; ++c) t.first[c][i] = (plus[c] - minus[c]) / (2.0 * step);
    }
  }
  if (order >= 2) t.second = st.hessian(0, 0.0);
  if (order >= 3) {
    // Central differences of the Hessian at steps h and h/2, combined by one
    // Richardson step: the h^2 error terms cancel and the reach stays 2h.
    auto third_at = [&](double h) {
      const Stencil sh(spec, std::vector<double>(point.begin(), point.end()), h);
      std::vector<CVec> out(n, CVec(m * m * m));
      for (std::size_t k = 0; k < m; ++k) {
        const auto plus = sh.hessian(k, 1.0);
        const auto minus = sh.hessian(k, -1.0);
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t ij = 0; ij < m * m; ++ij) {
            out[c][ij * m + k] = (plus[c][ij] - minus[c][ij]) / (2.0 * h);
          }
        }
      }
      return out;
    };
    const auto coarse = third_at(step);
    t.third = third_at(0.5 * step);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < t.third[c].size(); ++k) {
        t.third[c][k] = (4.0 * t.third[c][k] - coarse[c][k]) / 3.0;
      }
    }
  }
  return t;
}

double max_deviation(const DerivativeTensors& a, const DerivativeTensors& b, int order) {
  const auto* ta = order == 1 ? &a.first : order == 2 ? &a.second : &a.third;
  const auto* tb = order == 1 ? &b.first : order == 2 ? &b.second : &b.third;
  if (order < 1 || order > 3 || ta->size() != tb->size()) {
    throw DimensionError("derivative tensors not comparable at order " + std::to_string(order));
  }
  double worst = 0.0;
  for (std::size_t c = 0; c < ta->size(); ++c) {
    if ((*ta)[c].size() != (*tb)[c].size()) throw DimensionError("tensor size mismatch");
    for (std::size_t k = 0; k < (*ta)[c].size(); ++k) {
      worst = std::max(worst, std::abs((*ta)[c][k] - (*tb)[c][k]));
    }
  }
  return worst;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<std::vector<double>> sample_points(const ImmersionSpec& spec,
                                               const SampleConfig& cfg) {
  if (cfg.num_points < 1) throw UsageError("num_points must be >= 1");
  if (!(cfg.interior_margin > 0.0)) throw UsageError("interior margin must be positive");
  for (const auto& p : spec.params) {
    if (!(p.upper - p.lower > 2.0 * cfg.interior_margin)) {
      throw DomainError("domain of '" + p.name + "' narrower than twice the margin");
    }
  }
  std::uint64_t state = cfg.seed;
  std::vector<std::vector<double>> out(static_cast<std::size_t>(cfg.num_points));
  for (auto& point : out) {
    point.reserve(spec.num_params());
    for (const auto& p : spec.params) {
      const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
      const double lo = p.lower + cfg.interior_margin;
      const double hi = p.upper - cfg.interior_margin;
      point.push_back(lo + u * (hi - lo));
    }
  }
  return out;
}

}  // namespace lagkit

namespace lagkit {

bool CrosscheckResult::pass() const {
  for (const auto& o : orders) {
    if (!o.pass) return false;
  }
  return !orders.empty();
}

double default_crosscheck_step(int order) { return order >= 3 ? 1e-2 : 1e-4; }

double crosscheck_tolerance(int order) { return order >= 3 ? 1e-3 : 1e-6; }

CrosscheckResult crosscheck(const ImmersionSpec& spec, const CrosscheckConfig& cfg) {
  if (cfg.max_order < 1 || cfg.max_order > 3) throw UsageError("order must be 1, 2 or 3");
  if (cfg.step && !(*cfg.step > 0.0)) throw UsageError("step must be positive");
  CrosscheckResult result;
  double reach = 0.0;
  for (int k = 1; k <= cfg.max_order; ++k) {
    const double h = (k == cfg.max_order && cfg.step) ? *cfg.step : default_crosscheck_step(k);
    result.orders.push_back({k, h, crosscheck_tolerance(k), 0.0, false});
    reach = std::max(reach, stencil_reach(k, h));
  }
  // Keep every stencil inside the declared box.
  SampleConfig sampling = cfg.sampling;
  sampling.interior_margin += reach;
  for (const auto& p : sample_points(spec, sampling)) {
    const DerivativeTensors jets = tensors_from_jets(evaluate_map_jets(spec, p, cfg.max_order));
    for (auto& o : result.orders) {
      const DerivativeTensors fd = finite_difference_oracle(spec, p, o.order, o.step);
      const double d = max_deviation(jets, fd, o.order);
      if (std::isnan(d) || d > o.max_deviation) o.max_deviation = d;
    }
    ++result.points_evaluated;
  }
  for (auto& o : result.orders) o.pass = o.max_deviation < o.tolerance;
  return result;
}

}  // namespace lagkit
