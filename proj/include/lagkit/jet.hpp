#pragma once

// Truncated multivariate Taylor arithmetic up to third order.
//
// A Jet carries the value of a real function of m variables together with all
// its partial derivatives up to `order` (raw derivatives, not Taylor
// coefficients divided by factorials). The Hessian and third-order blocks are
// stored densely and kept symmetric by every operation.

#include <array>
#include <cstddef>
#include <vector>

namespace lagkit {

class Jet {
 public:
  static constexpr int kMaxOrder = 3;
  // Denominators below this magnitude raise SingularEvaluation.
  static constexpr double kDivisionThreshold = 1e-300;

  // Zero jet. Throws DimensionError unless num_vars >= 1 and 0 <= order <= 3.
  Jet(int num_vars, int order);

  static Jet constant(double value, int num_vars, int order);
  // Independent variable x_var_index evaluated at point_value.
  static Jet variable(int var_index, double point_value, int num_vars, int order);

  int num_vars() const { return m_; }
  int order() const { return order_; }

  double value() const { return c_[0]; }
  double d(int i) const { return c_[1 + i]; }
  double d(int i, int j) const { return c_[hess_offset() + i * m_ + j]; }
  double d(int i, int j, int k) const {
    return c_[third_offset() + (i * m_ + j) * m_ + k];
  }

  // Mutable access for builders; callers must keep the blocks symmetric.
  double& value_ref() { return c_[0]; }
  double& d_ref(int i) { return c_[1 + i]; }
  double& d_ref(int i, int j) { return c_[hess_offset() + i * m_ + j]; }
  double& d_ref(int i, int j, int k) { return c_[third_offset() + (i * m_ + j) * m_ + k]; }

  // Jet of d f / d x_var, one order lower. Requires order >= 1.
  Jet partial(int var) const;
  // Same jet truncated to a lower order.
  Jet truncated(int new_order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  Jet& operator+=(double s) {
    c_[0] += s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator-(Jet a, double s) { return a += -s; }
  friend Jet operator-(double s, const Jet& a) { return (-a) += s; }

  // phi(f) given phi and its first three derivatives at f.value().
  static Jet compose(const Jet& f, const std::array<double, 4>& phi_derivs);

  // Raw coefficient block: value, gradient, Hessian, third tensor.
  const std::vector<double>& coefficients() const { return c_; }

 private:
  std::size_t hess_offset() const { return 1 + static_cast<std::size_t>(m_); }
  std::size_t third_offset() const {
    return 1 + static_cast<std::size_t>(m_) + static_cast<std::size_t>(m_ * m_);
  }

  int m_;
  int order_;
  std::vector<double> c_;
};

Jet exp(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet sqrt(const Jet& a);
Jet reciprocal(const Jet& a);
Jet pow(const Jet& a, int exponent);

// Number of stored coefficients for (m, order).
std::size_t jet_coefficient_count(int num_vars, int order);

}  // namespace lagkit
