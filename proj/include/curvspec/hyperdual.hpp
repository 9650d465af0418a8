#pragma once

#include <cmath>

#include "curvspec/errors.hpp"

namespace curvspec {

// Hyper-dual number a + b*e1 + c*e2 + d*e1*e2 with e1^2 = e2^2 = 0.
// Seeding e1/e2 on two coordinates propagates the exact value, the two first
// derivatives, and the mixed second derivative through any smooth composition.
struct HyperDual {
  double v = 0.0;   // value
  double d1 = 0.0;  // d/dx1
  double d2 = 0.0;  // d/dx2
  double dd = 0.0;  // d^2/dx1 dx2

  HyperDual() = default;
  HyperDual(double value) : v(value) {}
  HyperDual(double value, double e1, double e2, double e12)
      : v(value), d1(e1), d2(e2), dd(e12) {}
};

inline HyperDual operator-(const HyperDual& a) {
  return {-a.v, -a.d1, -a.d2, -a.dd};
}

inline HyperDual operator+(const HyperDual& a, const HyperDual& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.dd + b.dd};
}

inline HyperDual operator-(const HyperDual& a, const HyperDual& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.dd - b.dd};
}

inline HyperDual operator*(const HyperDual& a, const HyperDual& b) {
  return {a.v * b.v,
          a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + a.v * b.d2,
          a.dd * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.dd};
}

// Composition with a scalar function given f(v), f'(v), f''(v).
inline HyperDual compose(const HyperDual& a, double f, double fp, double fpp) {
  return {f, fp * a.d1, fp * a.d2, fp * a.dd + fpp * a.d1 * a.d2};
}

inline HyperDual inverse(const HyperDual& a) {
  double iv = 1.0 / a.v;
  return compose(a, iv, -iv * iv, 2.0 * iv * iv * iv);
}

inline HyperDual operator/(const HyperDual& a, const HyperDual& b) {
  return a * inverse(b);
}

inline HyperDual sin(const HyperDual& a) {
  return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v));
}

inline HyperDual cos(const HyperDual& a) {
  return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v));
}

inline HyperDual tan(const HyperDual& a) {
  double t = std::tan(a.v);
  double s = 1.0 + t * t;  // sec^2
  return compose(a, t, s, 2.0 * t * s);
}

inline HyperDual sinh(const HyperDual& a) {
  return compose(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v));
}

inline HyperDual cosh(const HyperDual& a) {
  return compose(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v));
}

inline HyperDual tanh(const HyperDual& a) {
  double t = std::tanh(a.v);
  double s = 1.0 - t * t;  // sech^2
  return compose(a, t, s, -2.0 * t * s);
}

inline HyperDual exp(const HyperDual& a) {
  double e = std::exp(a.v);
  return compose(a, e, e, e);
}

inline HyperDual log(const HyperDual& a) {
  if (a.v <= 0.0) throw DomainError("log of non-positive value");
  return compose(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}

inline HyperDual sqrt(const HyperDual& a) {
  if (a.v < 0.0) throw DomainError("sqrt of negative value");
  double r = std::sqrt(a.v);
  return compose(a, r, 0.5 / r, -0.25 / (r * a.v));
}

inline HyperDual abs(const HyperDual& a) {
  double s = a.v < 0.0 ? -1.0 : 1.0;
  return compose(a, std::fabs(a.v), s, 0.0);
}

// a^p for a constant exponent.  Uses the power rule directly so that
// integer exponents stay valid for negative bases.
inline HyperDual pow(const HyperDual& a, double p) {
  double f = std::pow(a.v, p);
  double fp = p * std::pow(a.v, p - 1.0);
  double fpp = p * (p - 1.0) * std::pow(a.v, p - 2.0);
  return compose(a, f, fp, fpp);
}

// General a^b via exp(b*log(a)); requires a positive base.
inline HyperDual pow(const HyperDual& a, const HyperDual& b) {
  if (b.d1 == 0.0 && b.d2 == 0.0 && b.dd == 0.0) return pow(a, b.v);
  if (a.v <= 0.0) throw DomainError("pow of non-positive base with non-constant exponent");
  return exp(b * log(a));
}

}  // namespace curvspec
