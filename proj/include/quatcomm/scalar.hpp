#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "quatcomm/errors.hpp"

namespace quatcomm {

using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

/// Exact scalar backend: arbitrary-precision rational, kept in lowest terms
/// with a positive denominator. Plain value semantics (expression templates
/// off) so it composes with generic code the same way double does.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";
};

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

/// Float-mode comparison tolerance: relative to the larger operand magnitude,
/// with an absolute floor for values near zero. Exact-mode comparisons ignore it.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

inline bool nearly_equal(double a, double b, const Tolerance& tol = {}) {
  const double diff = std::fabs(a - b);
  if (diff <= tol.abs) return true;
  return diff <= tol.rel * std::max(std::fabs(a), std::fabs(b));
}

/// Exact square root of a nonnegative rational. Throws mode_error when the
/// value is not a perfect square (the exact backend never approximates).
inline Rational exact_sqrt(const Rational& value) {
  if (value < 0) throw std::domain_error("exact_sqrt: negative value");
  const BigInt num(numerator(value));
  const BigInt den(denominator(value));
  const BigInt sqrt_num = boost::multiprecision::sqrt(num);
  const BigInt sqrt_den = boost::multiprecision::sqrt(den);
  if (sqrt_num * sqrt_num != num || sqrt_den * sqrt_den != den) {
    throw mode_error("exact_sqrt: value is not a perfect square; use the float backend");
  }
  return Rational(sqrt_num, sqrt_den);
}

}  // namespace quatcomm
