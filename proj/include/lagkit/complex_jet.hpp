#pragma once

#include <array>

#include "lagkit/complex.hpp"
#include "lagkit/jet.hpp"

namespace lagkit {

// Complex-valued jet as a (real, imaginary) pair of real jets.
struct ComplexJet {
  Jet re;
  Jet im;

  ComplexJet(int num_vars, int order) : re(num_vars, order), im(num_vars, order) {}
  ComplexJet(Jet real, Jet imag) : re(std::move(real)), im(std::move(imag)) {}

  static ComplexJet constant(Complex value, int num_vars, int order);
  // Real variable x_var_index embedded on the real axis.
  static ComplexJet variable(int var_index, double point_value, int num_vars, int order);

  int num_vars() const { return re.num_vars(); }
  int order() const { return re.order(); }
  Complex value() const { return {re.value(), im.value()}; }
  Complex d(int i) const { return {re.d(i), im.d(i)}; }
  Complex d(int i, int j) const { return {re.d(i, j), im.d(i, j)}; }
  Complex d(int i, int j, int k) const { return {re.d(i, j, k), im.d(i, j, k)}; }

  ComplexJet partial(int var) const { return {re.partial(var), im.partial(var)}; }

  ComplexJet operator-() const { return {-re, -im}; }
  ComplexJet& operator+=(const ComplexJet& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexJet& operator-=(const ComplexJet& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ComplexJet operator+(ComplexJet a, const ComplexJet& b) { return a += b; }
  friend ComplexJet operator-(ComplexJet a, const ComplexJet& b) { return a -= b; }
  friend ComplexJet operator*(const ComplexJet& a, const ComplexJet& b);
  friend ComplexJet operator/(const ComplexJet& a, const ComplexJet& b);
  friend ComplexJet operator*(const Complex& s, const ComplexJet& a);

  // |z|^2 as a real jet.
  Jet norm_sq() const { return re * re + im * im; }
  ComplexJet conj() const { return {re, -im}; }

  // phi(f) for holomorphic phi, given phi and its first three (complex)
  // derivatives at f.value().
  static ComplexJet compose_holomorphic(const ComplexJet& f,
                                        const std::array<Complex, 4>& phi_derivs);
};

ComplexJet exp(const ComplexJet& z);
ComplexJet sin(const ComplexJet& z);
ComplexJet cos(const ComplexJet& z);
ComplexJet sinh(const ComplexJet& z);
ComplexJet cosh(const ComplexJet& z);
// Principal branch; singular at 0.
ComplexJet sqrt(const ComplexJet& z);
ComplexJet pow(const ComplexJet& z, int exponent);

}  // namespace lagkit
