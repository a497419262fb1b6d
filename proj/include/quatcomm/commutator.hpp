#pragma once

#include <span>
#include <utility>
#include <vector>

#include "quatcomm/permutation.hpp"
#include "quatcomm/quaternion.hpp"

namespace quatcomm {

/// [a,b] = ab - ba. Always a pure quaternion: equals 2 h.(a x b).
template <class S>
Quaternion<S> commutator(const Quaternion<S>& a, const Quaternion<S>& b) {
  return a * b - b * a;
}

/// Right-nested multicommutator [q_s(1), [q_s(2), ..., [q_s(n-1), q_s(n)]...]].
template <class S>
Quaternion<S> nested_commutator(std::span<const Quaternion<S>> qs, const Permutation& sigma) {
  const int n = static_cast<int>(qs.size());
  if (n < 2) throw arity_error("nested_commutator needs at least two quaternions");
  if (sigma.size() != n) throw precondition_error("permutation size does not match tuple size");
  Quaternion<S> acc = commutator(qs[static_cast<std::size_t>(sigma(n - 2))],
                                 qs[static_cast<std::size_t>(sigma(n - 1))]);
  for (int i = n - 3; i >= 0; --i) {
    acc = commutator(qs[static_cast<std::size_t>(sigma(i))], acc);
  }
  return acc;
}

/// Flat form of the multicommutator:
///   2^(n-1) h.(v_s(1) x (v_s(2) x (... x v_s(n))))
/// with v_i the imaginary parts, cross products right-nested, and the
/// permutation applied to the operand order (no separate sign factor).
/// Agrees with nested_commutator exactly: each nesting level contributes
/// one factor of 2 through [a,b] = 2 h.(a x b).
template <class S>
Quaternion<S> flat_commutator(std::span<const Quaternion<S>> qs, const Permutation& sigma) {
  const int n = static_cast<int>(qs.size());
  if (n < 2) throw arity_error("flat_commutator needs at least two quaternions");
  if (sigma.size() != n) throw precondition_error("permutation size does not match tuple size");
  Vector3<S> acc = qs[static_cast<std::size_t>(sigma(n - 1))].im;
  for (int i = n - 2; i >= 0; --i) {
    acc = cross(qs[static_cast<std::size_t>(sigma(i))].im, acc);
  }
  S scale(1);
  for (int i = 1; i < n; ++i) scale = scale * S(2);
  return pure(scale * acc);
}

enum class ClaimVerdict { Confirmed, Refuted, Degenerate };

/// Verdict on "all multicommutators of a tuple agree up to sign" for one tuple.
/// reference is the identity-permutation value; witnesses lists every
/// permutation whose multicommutator is neither +reference nor -reference.
template <class S>
struct SignClaimReport {
  ClaimVerdict verdict = ClaimVerdict::Degenerate;
  Quaternion<S> reference;
  std::vector<std::pair<Permutation, Quaternion<S>>> witnesses;
};

/// Enumerates all n! multicommutators (lexicographic permutation order) and
/// checks each against +/- the identity-permutation value. Exact backend only:
/// the verdict must not depend on a tolerance.
template <class S>
  requires is_exact_v<S>
SignClaimReport<S> verify_sign_claim(std::span<const Quaternion<S>> qs) {
  const int n = static_cast<int>(qs.size());
  if (n < 2) throw arity_error("verify_sign_claim needs at least two quaternions");
  SignClaimReport<S> report;
  report.reference = nested_commutator(qs, Permutation::identity(n));
  bool all_zero = true;
  for (const Permutation& sigma : Permutation::all(n)) {
    Quaternion<S> value = nested_commutator(qs, sigma);
    if (!is_zero(value)) all_zero = false;
    if (value != report.reference && value != -report.reference) {
      report.witnesses.emplace_back(sigma, std::move(value));
    }
  }
  if (all_zero) {
    report.verdict = ClaimVerdict::Degenerate;
  } else if (report.witnesses.empty() && !is_zero(report.reference)) {
    report.verdict = ClaimVerdict::Confirmed;
  } else {
    report.verdict = ClaimVerdict::Refuted;
  }
  return report;
}

}  // namespace quatcomm
