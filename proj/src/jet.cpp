#include "lagkit/jet.hpp"

#include <cmath>
#include <string>

#include "lagkit/errors.hpp"

namespace lagkit {

std::size_t jet_coefficient_count(int num_vars, int order) {
  const auto m = static_cast<std::size_t>(num_vars);
  std::size_t count = 1;
  std::size_t block = 1;
  for (int k = 1; k <= order; ++k) {
    block *= m;
    count += block;
  }
  return count;
}

Jet::Jet(int num_vars, int order) : m_(num_vars), order_(order) {
  if (num_vars < 1 || order < 0 || order > kMaxOrder) {
    throw DimensionError("invalid jet shape m=" + std::to_string(num_vars) +
                         " order=" + std::to_string(order));
  }
  c_.assign(jet_coefficient_count(num_vars, order), 0.0);
}

Jet Jet::constant(double value, int num_vars, int order) {
  Jet j(num_vars, order);
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(int var_index, double point_value, int num_vars, int order) {
  if (var_index < 0 || var_index >= num_vars) {
    throw DimensionError("variable index " + std::to_string(var_index) +
                         " out of range for m=" + std::to_string(num_vars));
  }
  Jet j = constant(point_value, num_vars, order);
  if (order >= 1) j.c_[1 + var_index] = 1.0;
  return j;
}

Jet Jet::partial(int var) const {
  if (order_ < 1) throw DimensionError("partial of an order-0 jet");
  if (var < 0 || var >= m_) throw DimensionError("partial index out of range");
  Jet out(m_, order_ - 1);
  out.c_[0] = d(var);
  if (out.order_ >= 1) {
    for (int i = 0; i < m_; ++i) out.d_ref(i) = d(var, i);
  }
  if (out.order_ >= 2) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) out.d_ref(i, j) = d(var, i, j);
    }
  }
  return out;
}

Jet Jet::truncated(int new_order) const {
  if (new_order > order_) throw DimensionError("cannot raise jet order");
  Jet out(m_, new_order);
  std::copy_n(c_.begin(), out.c_.size(), out.c_.begin());
  return out;
}

namespace {

void require_same_shape(const Jet& a, const Jet& b) {
  if (a.num_vars() != b.num_vars() || a.order() != b.order()) {
    throw DimensionError("jet shape mismatch");
  }
}

}  // namespace

Jet Jet::operator-() const {
  Jet out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

// Leibniz rule, block by block.
Jet operator*(const Jet& f, const Jet& g) {
  require_same_shape(f, g);
  const int m = f.m_;
  Jet h(m, f.order_);
  const double f0 = f.value();
  const double g0 = g.value();
  h.c_[0] = f0 * g0;
  if (h.order_ >= 1) {
    for (int i = 0; i < m; ++i) h.d_ref(i) = f.d(i) * g0 + f0 * g.d(i);
  }
  if (h.order_ >= 2) {
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        h.d_ref(i, j) = h.d_ref(j, i) =
            f.d(i, j) * g0 + f.d(i) * g.d(j) + f.d(j) * g.d(i) + f0 * g.d(i, j);
      }
    }
  }
  if (h.order_ >= 3) {
    // Computed once per sorted index triple and mirrored, so the stored
    // tensor is exactly symmetric.
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        for (int k = j; k < m; ++k) {
          const double v = f.d(i, j, k) * g0 + f.d(i, j) * g.d(k) +
                           f.d(i, k) * g.d(j) + f.d(j, k) * g.d(i) +
                           f.d(i) * g.d(j, k) + f.d(j) * g.d(i, k) +
                           f.d(k) * g.d(i, j) + f0 * g.d(i, j, k);
          h.d_ref(i, j, k) = h.d_ref(i, k, j) = h.d_ref(j, i, k) = v;
          h.d_ref(j, k, i) = h.d_ref(k, i, j) = h.d_ref(k, j, i) = v;
        }
      }
    }
  }
  return h;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

// With delta = f - f(x0) nilpotent of degree order+1, phi(f) equals the
// truncated Taylor polynomial of phi evaluated on delta.
Jet Jet::compose(const Jet& f, const std::array<double, 4>& phi) {
  Jet delta = f;
  delta.c_[0] = 0.0;
  Jet out = constant(phi[0], f.m_, f.order_);
  if (f.order_ == 0) return out;
  out += phi[1] * delta;
  if (f.order_ >= 2) {
    const Jet delta2 = delta * delta;
    out += (phi[2] / 2.0) * delta2;
    if (f.order_ >= 3) out += (phi[3] / 6.0) * (delta2 * delta);
  }
  return out;
}

Jet exp(const Jet& a) {
  const double e = std::exp(a.value());
  return Jet::compose(a, {e, e, e, e});
}

Jet sin(const Jet& a) {
  const double s = std::sin(a.value());
  const double c = std::cos(a.value());
  return Jet::compose(a, {s, c, -s, -c});
}

Jet cos(const Jet& a) {
  const double s = std::sin(a.value());
  const double c = std::cos(a.value());
  return Jet::compose(a, {c, -s, -c, s});
}

Jet sinh(const Jet& a) {
  const double s = std::sinh(a.value());
  const double c = std::cosh(a.value());
  return Jet::compose(a, {s, c, s, c});
}

Jet cosh(const Jet& a) {
  const double s = std::sinh(a.value());
  const double c = std::cosh(a.value());
  return Jet::compose(a, {c, s, c, s});
}

Jet sqrt(const Jet& a) {
  const double x = a.value();
  if (!(x > Jet::kDivisionThreshold)) {
    throw SingularEvaluation("sqrt of non-positive value " + std::to_string(x));
  }
  const double r = std::sqrt(x);
  return Jet::compose(a, {r, 0.5 / r, -0.25 / (r * x), 0.375 / (r * x * x)});
}

Jet reciprocal(const Jet& a) {
  const double x = a.value();
  if (std::abs(x) < Jet::kDivisionThreshold) {
    throw SingularEvaluation("division by near-zero value " + std::to_string(x));
  }
  const double r = 1.0 / x;
  return Jet::compose(a, {r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r});
}

Jet pow(const Jet& a, int exponent) {
  if (exponent < 0) return reciprocal(pow(a, -exponent));
  Jet result = Jet::constant(1.0, a.num_vars(), a.order());
  Jet base = a;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace lagkit
