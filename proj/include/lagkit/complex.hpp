#pragma once

#include <cmath>

namespace lagkit {

// Complex scalar stored as a real pair. Kept deliberately minimal so that the
// same real-pair arithmetic can be mirrored on jets.
struct Complex {
  double re = 0.0;
  double im = 0.0;

  constexpr Complex() = default;
  constexpr Complex(double r, double i = 0.0) : re(r), im(i) {}

  constexpr Complex conj() const { return {re, -im}; }
  constexpr double norm_sq() const { return re * re + im * im; }
  double abs() const { return std::hypot(re, im); }

  constexpr Complex operator-() const { return {-re, -im}; }
  constexpr Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend constexpr Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend constexpr Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend constexpr Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr Complex operator*(double s, const Complex& a) {
    return {s * a.re, s * a.im};
  }
  friend constexpr Complex operator*(const Complex& a, double s) { return s * a; }
  friend constexpr bool operator==(const Complex&, const Complex&) = default;
};

inline constexpr Complex kImag{0.0, 1.0};

// Principal branch, cut along the negative real axis (sign of im decides).
inline Complex principal_sqrt(const Complex& z) {
  const double r = z.abs();
  const double re = std::sqrt(0.5 * (r + z.re));
  const double im = std::copysign(std::sqrt(0.5 * (r - z.re)), z.im);
  return {re, im};
}

}  // namespace lagkit
