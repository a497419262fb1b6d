#pragma once

#include <cmath>
#include <vector>

#include "quatcomm/errors.hpp"
#include "quatcomm/quaternion.hpp"

namespace quatcomm {

// Float backend only: the exact backend has no square roots or trig.
inline constexpr double k_polar_degenerate_threshold = 1e-12;
inline constexpr double k_derivative_series_threshold = 1e-6;
inline constexpr int k_default_exp_series_terms = 40;
inline constexpr int k_default_derivative_series_terms = 30;

/// psi = f + I g with f real, g >= 0 and I a pure unit quaternion (I^2 = -1).
/// Below eps_g the axis direction is unrecoverable: degenerate is set and the
/// axis falls back to i by convention.
struct PolarForm {
  double f = 0.0;
  double g = 0.0;
  Quaternion<double> axis = Quaternion<double>::i();
  bool degenerate = false;
};

inline PolarForm polar_decompose(const Quaternion<double>& q,
                                 double eps_g = k_polar_degenerate_threshold) {
  PolarForm polar;
  polar.f = q.re;
  polar.g = std::sqrt(norm_sq(q.im));
  if (polar.g < eps_g) {
    polar.degenerate = true;
  } else {
    polar.axis = pure((1.0 / polar.g) * q.im);
  }
  return polar;
}

/// Closed-form exponential e^q = e^f (cos g + I sin g). Degenerate (real) input
/// maps to e^f.
inline Quaternion<double> qexp(const Quaternion<double>& q) {
  const PolarForm polar = polar_decompose(q);
  const double ef = std::exp(polar.f);
  if (polar.degenerate) return Quaternion<double>(ef);
  return Quaternion<double>(ef * std::cos(polar.g)) + (ef * std::sin(polar.g)) * polar.axis;
}

/// Partial sum of the power series sum_{n<terms} q^n / n!. Independent oracle
/// for qexp.
inline Quaternion<double> qexp_series(const Quaternion<double>& q,
                                      int terms = k_default_exp_series_terms) {
  if (terms < 1) throw precondition_error("qexp_series needs at least one term");
  Quaternion<double> sum = Quaternion<double>::one();
  Quaternion<double> term = Quaternion<double>::one();
  for (int n = 1; n < terms; ++n) {
    term = term * q / static_cast<double>(n);
    sum = sum + term;
  }
  return sum;
}

/// Value and first derivative of a quaternion-valued function of a real
/// variable at one point.
struct JetPair {
  Quaternion<double> value;
  Quaternion<double> derivative;
};

/// Derivative of the polar axis I = im(psi)/g, computed algebraically from the
/// jet: I' = v'/g - v (v.v')/g^3 with v = im(psi), v' = im(psi').
/// Anticommutes with I: I I' + I' I = 0.
inline Quaternion<double> axis_derivative(const JetPair& jet) {
  const Vector3<double>& v = jet.value.im;
  const Vector3<double>& vp = jet.derivative.im;
  const double g_sq = norm_sq(v);
  if (g_sq == 0.0) {
    throw precondition_error("axis_derivative is undefined for a real-valued jet");
  }
  const double g = std::sqrt(g_sq);
  const double radial = dot(v, vp);
  return pure((1.0 / g) * vp - (radial / (g_sq * g)) * v);
}

/// Term-by-term derivative of the power series, valid with no commutation
/// assumption: sum_{n=1..terms} (1/n!) sum_{k=0}^{n-1} psi^k psi' psi^(n-1-k).
/// Independent oracle for the closed form and the fallback near g = 0.
inline Quaternion<double> qexp_derivative_series(const JetPair& jet,
                                                 int terms = k_default_derivative_series_terms) {
  if (terms < 1) throw precondition_error("qexp_derivative_series needs at least one term");
  std::vector<Quaternion<double>> powers(static_cast<std::size_t>(terms));
  powers[0] = Quaternion<double>::one();
  for (int p = 1; p < terms; ++p) {
    powers[static_cast<std::size_t>(p)] = powers[static_cast<std::size_t>(p - 1)] * jet.value;
  }
  Quaternion<double> sum;
  double inv_factorial = 1.0;
  for (int n = 1; n <= terms; ++n) {
    inv_factorial /= static_cast<double>(n);
    Quaternion<double> inner;
    for (int k = 0; k <= n - 1; ++k) {
      const Quaternion<double>& left = powers[static_cast<std::size_t>(k)];
      const Quaternion<double>& right = powers[static_cast<std::size_t>(n - 1 - k)];
      inner = inner + left * jet.derivative * right;
    }
    sum = sum + inv_factorial * inner;
  }
  return sum;
}

/// Closed-form derivative of exp(psi(x)):
///   psi' e^psi - I' (g e^psi - e^f sin g)
/// with f, g, I, I' read off the jet and the left-multiplication order kept
/// as written. Near the real axis (g below the threshold) I' has a 1/g
/// singularity, so the series derivative takes over.
inline Quaternion<double> qexp_derivative(const JetPair& jet) {
  const double g = std::sqrt(norm_sq(jet.value.im));
  if (g < k_derivative_series_threshold) {
    return qexp_derivative_series(jet);
  }
  const Quaternion<double> exp_psi = qexp(jet.value);
  const double ef_sin_g = std::exp(jet.value.re) * std::sin(g);
  const Quaternion<double> axis_prime = axis_derivative(jet);
  return jet.derivative * exp_psi - axis_prime * (g * exp_psi - Quaternion<double>(ef_sin_g));
}

}  // namespace quatcomm
