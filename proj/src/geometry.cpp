#include "lagkit/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "lagkit/differentiation.hpp"
#include "lagkit/errors.hpp"

namespace lagkit {

namespace {

ComplexVec vec_from(const std::vector<ComplexJet>& jets, const Signature& sig,
                    auto&& component) {
  std::vector<Complex> c;
  c.reserve(jets.size());
  for (const auto& j : jets) c.push_back(component(j));
  return ComplexVec(std::move(c), sig);
}

void require_third(const GeometryFrame& f) {
  if (!f.has_third()) throw UsageError("frame was built without third derivatives");
}

}  // namespace

GeometryFrame build_frame(const ImmersionSpec& spec, std::span<const double> point,
                          bool need_third) {
  const auto jets = evaluate_map_jets(spec, point, need_third ? 3 : 2);
  return build_frame_from_jets(spec.signature, point, jets, need_third);
}

GeometryFrame build_frame_from_jets(const Signature& sig, std::span<const double> point,
                                    const std::vector<ComplexJet>& jets, bool need_third) {
  if (jets.size() != static_cast<std::size_t>(sig.n())) {
    throw DimensionError("jet count does not match ambient dimension");
  }
  const std::size_t m = static_cast<std::size_t>(jets.front().num_vars());
  if (jets.front().order() < (need_third ? 3 : 2)) {
    throw DimensionError("jets of insufficient order for the frame");
  }

  GeometryFrame f;
  f.point.assign(point.begin(), point.end());
  f.dim = m;
  f.position = vec_from(jets, sig, [](const ComplexJet& j) { return j.value(); });
  for (std::size_t i = 0; i < m; ++i) {
    f.first.push_back(
        vec_from(jets, sig, [&](const ComplexJet& j) { return j.d(static_cast<int>(i)); }));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      f.second.push_back(vec_from(jets, sig, [&](const ComplexJet& jet) {
        return jet.d(static_cast<int>(i), static_cast<int>(j));
      }));
    }
  }
  if (need_third) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          f.third.push_back(vec_from(jets, sig, [&](const ComplexJet& jet) {
            return jet.d(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
          }));
        }
      }
    }
  }

  // Induced metric and its inverse.
  f.metric.resize(m * m);
  Eigen::MatrixXd g(m, m);
  double gmax = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double v = real_inner(f.first[i], f.first[j]);
      f.metric[i * m + j] = v;
      g(i, j) = v;
      gmax = std::max(gmax, std::abs(v));
    }
  }
  const double det = g.determinant();
  if (!(std::abs(det) >= kNondegeneracyThreshold * std::pow(gmax, static_cast<double>(m))) ||
      gmax == 0.0) {
    throw DegenerateMetric("induced metric degenerate (|det g| = " + format_real(std::abs(det)) +
                           ")");
  }
  const Eigen::MatrixXd ginv = g.fullPivLu().inverse();
  f.metric_inverse.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) f.metric_inverse[i * m + j] = 0.5 * (ginv(i, j) + ginv(j, i));
  }

  // d_k g_ij = <L_ik, L_j> + <L_i, L_jk>.
  f.metric_deriv.resize(m * m * m);
  auto dg = [&](std::size_t k, std::size_t i, std::size_t j) -> double& {
    return f.metric_deriv[(k * m + i) * m + j];
  };
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        dg(k, i, j) = real_inner(f.L(i, k), f.L(j)) + real_inner(f.L(i), f.L(j, k));
      }
    }
  }

  // Gamma_{a,ij} = (d_i g_ja + d_j g_ia - d_a g_ij) / 2, raised with g^{-1}.
  std::vector<double> gamma_first(m * m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        gamma_first[(a * m + i) * m + j] = 0.5 * (dg(i, j, a) + dg(j, i, a) - dg(a, i, j));
      }
    }
  }
  f.christoffel.assign(m * m * m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::size_t a = 0; a < m; ++a) s += f.g_inv(k, a) * gamma_first[(a * m + i) * m + j];
        f.christoffel[(k * m + i) * m + j] = s;
      }
    }
  }

  // h_ij = L_ij - Gamma^k_ij L_k.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ComplexVec h = f.L(i, j);
      for (std::size_t k = 0; k < m; ++k) h.add_scaled(-f.gamma(k, i, j), f.L(k));
      f.sff.push_back(std::move(h));
    }
  }

  if (need_third) {
    // d_l d_k g_ij = <L_ikl, L_j> + <L_ik, L_jl> + <L_il, L_jk> + <L_i, L_jkl>.
    std::vector<double> ddg(m * m * m * m);
    auto idx4 = [m](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
      return ((a * m + b) * m + c) * m + d;
    };
    for (std::size_t l = 0; l < m; ++l) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            ddg[idx4(l, k, i, j)] = real_inner(f.L(i, k, l), f.L(j)) +
                                    real_inner(f.L(i, k), f.L(j, l)) +
                                    real_inner(f.L(i, l), f.L(j, k)) +
                                    real_inner(f.L(i), f.L(j, k, l));
          }
        }
      }
    }
    // d_l g^{ka} = -g^{kc} d_l g_cd g^{da}
    std::vector<double> dginv(m * m * m, 0.0);
    for (std::size_t l = 0; l < m; ++l) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t a = 0; a < m; ++a) {
          double s = 0.0;
          for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t d = 0; d < m; ++d) s += f.g_inv(k, c) * dg(l, c, d) * f.g_inv(d, a);
          }
          dginv[(l * m + k) * m + a] = -s;
        }
      }
    }
    f.christoffel_deriv.assign(m * m * m * m, 0.0);
    for (std::size_t l = 0; l < m; ++l) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t a = 0; a < m; ++a) {
              const double dgamma_first =
                  0.5 * (ddg[idx4(l, i, j, a)] + ddg[idx4(l, j, i, a)] - ddg[idx4(l, a, i, j)]);
              s += dginv[(l * m + k) * m + a] * gamma_first[(a * m + i) * m + j] +
                   f.g_inv(k, a) * dgamma_first;
            }
            f.christoffel_deriv[idx4(l, k, i, j)] = s;
          }
        }
      }
    }
  }
  return f;
}

Projection project(const GeometryFrame& frame, const ComplexVec& v) {
  const std::size_t m = frame.dim;
  std::vector<double> b(m);
  for (std::size_t k = 0; k < m; ++k) b[k] = real_inner(v, frame.L(k));
  Projection p{std::vector<double>(m, 0.0), v};
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) p.tangential[k] += frame.g_inv(k, l) * b[l];
  }
  for (std::size_t k = 0; k < m; ++k) p.normal.add_scaled(-p.tangential[k], frame.L(k));
  return p;
}

ComplexVec tangent_vector(const GeometryFrame& frame, std::span<const double> a) {
  ComplexVec v(frame.signature());
  for (std::size_t k = 0; k < frame.dim; ++k) v.add_scaled(a[k], frame.L(k));
  return v;
}

double normality_residual(const GeometryFrame& frame) {
  double worst = 0.0;
  for (const auto& h : frame.sff) {
    for (const auto& t : frame.first) worst = std::max(worst, std::abs(real_inner(h, t)));
  }
  return worst;
}

int metric_index(const GeometryFrame& frame) {
  return negative_eigenvalue_count(frame.metric, frame.dim);
}

std::vector<double> riemann_tensor(const GeometryFrame& f) {
  require_third(f);
  const std::size_t m = f.dim;
  auto dgamma = [&](std::size_t l, std::size_t k, std::size_t i, std::size_t j) {
    return f.christoffel_deriv[((l * m + k) * m + i) * m + j];
  };
  // R^a_{kij}: component a of R(d_i, d_j) d_k.
  std::vector<double> up(m * m * m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t a = 0; a < m; ++a) {
          double s = dgamma(i, a, j, k) - dgamma(j, a, i, k);
          for (std::size_t b = 0; b < m; ++b) {
            s += f.gamma(b, j, k) * f.gamma(a, i, b) - f.gamma(b, i, k) * f.gamma(a, j, b);
          }
          up[((i * m + j) * m + k) * m + a] = s;
        }
      }
    }
  }
  std::vector<double> r(m * m * m * m, 0.0);
  for (std::size_t ijk = 0; ijk < m * m * m; ++ijk) {
    for (std::size_t l = 0; l < m; ++l) {
      double s = 0.0;
      for (std::size_t a = 0; a < m; ++a) s += f.g(l, a) * up[ijk * m + a];
      r[ijk * m + l] = s;
    }
  }
  return r;
}

double sectional_curvature(const GeometryFrame& f, std::size_t i, std::size_t j) {
  const auto r = riemann_tensor(f);
  const std::size_t m = f.dim;
  const double num = r[((i * m + j) * m + j) * m + i];
  const double den = f.g(i, i) * f.g(j, j) - f.g(i, j) * f.g(i, j);
  if (std::abs(den) < kNondegeneracyThreshold) throw DegenerateMetric("degenerate 2-plane");
  return num / den;
}

double gauss_residual(const GeometryFrame& f) {
  const auto r = riemann_tensor(f);
  const std::size_t m = f.dim;
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          const double rhs =
              real_inner(f.h(i, l), f.h(j, k)) - real_inner(f.h(i, k), f.h(j, l));
          worst = std::max(worst, std::abs(r[((i * m + j) * m + k) * m + l] - rhs));
        }
      }
    }
  }
  return worst;
}

std::vector<ComplexVec> covariant_sff_derivative(const GeometryFrame& f) {
  require_third(f);
  const std::size_t m = f.dim;
  auto dgamma = [&](std::size_t l, std::size_t k, std::size_t i, std::size_t j) {
    return f.christoffel_deriv[((l * m + k) * m + i) * m + j];
  };
  std::vector<ComplexVec> out;
  out.reserve(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        // d_i h_jk = L_ijk - d_i Gamma^a_jk L_a - Gamma^a_jk L_ai
        ComplexVec dh = f.L(i, j, k);
        for (std::size_t a = 0; a < m; ++a) {
          dh.add_scaled(-dgamma(i, a, j, k), f.L(a));
          dh.add_scaled(-f.gamma(a, j, k), f.L(a, i));
        }
        ComplexVec nabla = project(f, dh).normal;
        for (std::size_t a = 0; a < m; ++a) {
          nabla.add_scaled(-f.gamma(a, i, j), f.h(a, k));
          nabla.add_scaled(-f.gamma(a, i, k), f.h(j, a));
        }
        out.push_back(std::move(nabla));
      }
    }
  }
  return out;
}

double codazzi_residual(const GeometryFrame& f) {
  const auto nh = covariant_sff_derivative(f);
  const std::size_t m = f.dim;
  double worst = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        worst = std::max(worst,
                         (nh[(i * m + j) * m + k] - nh[(j * m + i) * m + k]).euclidean_norm());
      }
    }
  }
  return worst;
}

}  // namespace lagkit
