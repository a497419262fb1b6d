#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "quatcomm/scalar.hpp"
#include "quatcomm/vector3.hpp"

namespace quatcomm {

/// Quaternion re + h.im over a scalar backend S (double or Rational).
/// Values are immutable in spirit: every operation returns a new value.
template <class S>
struct Quaternion {
  S re{};
  Vector3<S> im{};

  Quaternion() = default;
  explicit Quaternion(S real) : re(std::move(real)) {}
  Quaternion(S real, Vector3<S> imag) : re(std::move(real)), im(std::move(imag)) {}
  Quaternion(S real, S x, S y, S z)
      : re(std::move(real)), im(std::move(x), std::move(y), std::move(z)) {}

  bool operator==(const Quaternion&) const = default;

  static Quaternion zero() { return {}; }
  static Quaternion one() { return Quaternion(S(1)); }
  static Quaternion i() { return {S(0), Vector3<S>::unit_x()}; }
  static Quaternion j() { return {S(0), Vector3<S>::unit_y()}; }
  static Quaternion k() { return {S(0), Vector3<S>::unit_z()}; }
};

/// Pure quaternion h.v with zero real part.
template <class S>
Quaternion<S> pure(const Vector3<S>& v) {
  return {S(0), v};
}

template <class S>
Quaternion<S> operator+(const Quaternion<S>& a, const Quaternion<S>& b) {
  return {a.re + b.re, a.im + b.im};
}

template <class S>
Quaternion<S> operator-(const Quaternion<S>& a, const Quaternion<S>& b) {
  return {a.re - b.re, a.im - b.im};
}

template <class S>
Quaternion<S> operator-(const Quaternion<S>& a) {
  return {-a.re, -a.im};
}

/// Product in vector form: ab = (a0 b0 - a.b) + h.(a0 b + b0 a + a x b).
template <class S>
Quaternion<S> operator*(const Quaternion<S>& a, const Quaternion<S>& b) {
  return {a.re * b.re - dot(a.im, b.im),
          a.re * b.im + b.re * a.im + cross(a.im, b.im)};
}

template <class S>
Quaternion<S> operator*(const S& s, const Quaternion<S>& q) {
  return {s * q.re, s * q.im};
}

template <class S>
Quaternion<S> operator*(const Quaternion<S>& q, const S& s) {
  return s * q;
}

template <class S>
Quaternion<S> operator/(const Quaternion<S>& q, const S& s) {
  if (s == S(0)) throw std::domain_error("quaternion division by zero scalar");
  return {q.re / s, Vector3<S>{q.im.x / s, q.im.y / s, q.im.z / s}};
}

template <class S>
Quaternion<S> conj(const Quaternion<S>& q) {
  return {q.re, -q.im};
}

template <class S>
S norm_sq(const Quaternion<S>& q) {
  return q.re * q.re + norm_sq(q.im);
}

inline double norm(const Quaternion<double>& q) { return std::sqrt(norm_sq(q)); }

/// Exact norm; defined only when norm_sq is a perfect square (mode_error otherwise).
inline Rational norm(const Quaternion<Rational>& q) { return exact_sqrt(norm_sq(q)); }

template <class S>
bool is_zero(const Quaternion<S>& q) {
  return q == Quaternion<S>::zero();
}

template <class S>
Quaternion<S> inverse(const Quaternion<S>& q) {
  if (is_zero(q)) throw std::domain_error("inverse of the zero quaternion");
  return conj(q) / norm_sq(q);
}

/// Norm-based closeness for the float backend.
inline bool nearly_equal(const Quaternion<double>& a, const Quaternion<double>& b,
                         const Tolerance& tol = {}) {
  const double diff = norm(a - b);
  if (diff <= tol.abs) return true;
  return diff <= tol.rel * std::max(norm(a), norm(b));
}

}  // namespace quatcomm
