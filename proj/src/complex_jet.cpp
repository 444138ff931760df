#include "lagkit/complex_jet.hpp"

#include <cmath>

#include "lagkit/errors.hpp"

namespace lagkit {

ComplexJet ComplexJet::constant(Complex value, int num_vars, int order) {
  return {Jet::constant(value.re, num_vars, order), Jet::constant(value.im, num_vars, order)};
}

ComplexJet ComplexJet::variable(int var_index, double point_value, int num_vars, int order) {
  return {Jet::variable(var_index, point_value, num_vars, order),
          Jet::constant(0.0, num_vars, order)};
}

ComplexJet operator*(const ComplexJet& a, const ComplexJet& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexJet operator*(const Complex& s, const ComplexJet& a) {
  return {s.re * a.re - s.im * a.im, s.re * a.im + s.im * a.re};
}

ComplexJet operator/(const ComplexJet& a, const ComplexJet& b) {
  if (b.value().norm_sq() < Jet::kDivisionThreshold) {
    throw SingularEvaluation("complex division by near-zero value");
  }
  const Jet inv = reciprocal(b.norm_sq());
  const ComplexJet num = a * b.conj();
  return {num.re * inv, num.im * inv};
}

ComplexJet ComplexJet::compose_holomorphic(const ComplexJet& f,
                                           const std::array<Complex, 4>& phi) {
  ComplexJet delta = f;
  delta.re.value_ref() = 0.0;
  delta.im.value_ref() = 0.0;
  ComplexJet out = constant(phi[0], f.num_vars(), f.order());
  if (f.order() == 0) return out;
  out += phi[1] * delta;
  if (f.order() >= 2) {
    const ComplexJet delta2 = delta * delta;
    out += (0.5 * phi[2]) * delta2;
    if (f.order() >= 3) out += ((1.0 / 6.0) * phi[3]) * (delta2 * delta);
  }
  return out;
}

namespace {

Complex complex_reciprocal(const Complex& w) {
  const double n = w.norm_sq();
  return {w.re / n, -w.im / n};
}

}  // namespace

ComplexJet exp(const ComplexJet& z) {
  const Complex v = z.value();
  const double e = std::exp(v.re);
  const Complex ev{e * std::cos(v.im), e * std::sin(v.im)};
  return ComplexJet::compose_holomorphic(z, {ev, ev, ev, ev});
}

ComplexJet sin(const ComplexJet& z) {
  const Complex v = z.value();
  const Complex s{std::sin(v.re) * std::cosh(v.im), std::cos(v.re) * std::sinh(v.im)};
  const Complex c{std::cos(v.re) * std::cosh(v.im), -std::sin(v.re) * std::sinh(v.im)};
  return ComplexJet::compose_holomorphic(z, {s, c, -s, -c});
}

ComplexJet cos(const ComplexJet& z) {
  const Complex v = z.value();
  const Complex s{std::sin(v.re) * std::cosh(v.im), std::cos(v.re) * std::sinh(v.im)};
  const Complex c{std::cos(v.re) * std::cosh(v.im), -std::sin(v.re) * std::sinh(v.im)};
  return ComplexJet::compose_holomorphic(z, {c, -s, -c, s});
}

ComplexJet sinh(const ComplexJet& z) {
  const Complex v = z.value();
  const Complex sh{std::sinh(v.re) * std::cos(v.im), std::cosh(v.re) * std::sin(v.im)};
  const Complex ch{std::cosh(v.re) * std::cos(v.im), std::sinh(v.re) * std::sin(v.im)};
  return ComplexJet::compose_holomorphic(z, {sh, ch, sh, ch});
}

ComplexJet cosh(const ComplexJet& z) {
  const Complex v = z.value();
  const Complex sh{std::sinh(v.re) * std::cos(v.im), std::cosh(v.re) * std::sin(v.im)};
  const Complex ch{std::cosh(v.re) * std::cos(v.im), std::sinh(v.re) * std::sin(v.im)};
  return ComplexJet::compose_holomorphic(z, {ch, sh, ch, sh});
}

ComplexJet sqrt(const ComplexJet& z) {
  const Complex v = z.value();
  if (v.norm_sq() < Jet::kDivisionThreshold) {
    throw SingularEvaluation("sqrt at its branch point 0");
  }
  const Complex w = principal_sqrt(v);
  const Complex inv = complex_reciprocal(w);
  const Complex inv3 = inv * inv * inv;
  return ComplexJet::compose_holomorphic(
      z, {w, 0.5 * inv, -0.25 * inv3, 0.375 * (inv3 * inv * inv)});
}

ComplexJet pow(const ComplexJet& z, int exponent) {
  if (exponent < 0) {
    return ComplexJet::constant(Complex{1.0}, z.num_vars(), z.order()) / pow(z, -exponent);
  }
  ComplexJet result = ComplexJet::constant(Complex{1.0}, z.num_vars(), z.order());
  ComplexJet base = z;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace lagkit
