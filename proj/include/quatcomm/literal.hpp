#pragma once

#include <string>
#include <string_view>

#include "quatcomm/quaternion.hpp"

namespace quatcomm {

// Quaternion literals: optional-signed terms joined by +/-, each term a
// coefficient optionally followed by one of the units i, j, k (bare units
// allowed, repeated units accumulate, whitespace ignored). Coefficients are
// decimal in float mode ("1+2i-3j+0.5k") and integer or integer/integer in
// exact mode ("1/2+1/3i"). format() emits a canonical form that reparses to
// an equal value.

std::string format_scalar(double value);
std::string format_scalar(const Rational& value);

std::string format_quaternion(const Quaternion<double>& q);
std::string format_quaternion(const Quaternion<Rational>& q);

Quaternion<double> parse_float_quaternion(std::string_view text);
Quaternion<Rational> parse_exact_quaternion(std::string_view text);

template <class S>
Quaternion<S> parse_quaternion(std::string_view text);

template <>
inline Quaternion<double> parse_quaternion<double>(std::string_view text) {
  return parse_float_quaternion(text);
}

template <>
inline Quaternion<Rational> parse_quaternion<Rational>(std::string_view text) {
  return parse_exact_quaternion(text);
}

}  // namespace quatcomm
