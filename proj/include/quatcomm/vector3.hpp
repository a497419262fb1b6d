#pragma once

#include <utility>

#include "quatcomm/scalar.hpp"

namespace quatcomm {

template <class S>
struct Vector3 {
  S x{};
  S y{};
  S z{};

  Vector3() = default;
  Vector3(S x_, S y_, S z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  bool operator==(const Vector3&) const = default;

  static Vector3 zero() { return {}; }
  static Vector3 unit_x() { return {S(1), S(0), S(0)}; }
  static Vector3 unit_y() { return {S(0), S(1), S(0)}; }
  static Vector3 unit_z() { return {S(0), S(0), S(1)}; }
};

template <class S>
Vector3<S> operator+(const Vector3<S>& a, const Vector3<S>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

template <class S>
Vector3<S> operator-(const Vector3<S>& a, const Vector3<S>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

template <class S>
Vector3<S> operator-(const Vector3<S>& a) {
  return {-a.x, -a.y, -a.z};
}

template <class S>
Vector3<S> operator*(const S& s, const Vector3<S>& v) {
  return {s * v.x, s * v.y, s * v.z};
}

template <class S>
Vector3<S> operator*(const Vector3<S>& v, const S& s) {
  return s * v;
}

template <class S>
S dot(const Vector3<S>& a, const Vector3<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
Vector3<S> cross(const Vector3<S>& a, const Vector3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class S>
S norm_sq(const Vector3<S>& v) {
  return dot(v, v);
}

/// Scalar triple product (a x b) . c; vanishes iff a, b, c are linearly dependent.
template <class S>
S det3(const Vector3<S>& a, const Vector3<S>& b, const Vector3<S>& c) {
  return dot(cross(a, b), c);
}

}  // namespace quatcomm
