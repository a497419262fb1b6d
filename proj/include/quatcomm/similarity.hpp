#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "quatcomm/permutation.hpp"
#include "quatcomm/quaternion.hpp"

namespace quatcomm {

/// Product q_s(1) q_s(2) ... q_s(n) in permutation order. Grouping is
/// irrelevant (associativity); evaluated left to right.
template <class S>
Quaternion<S> multiproduct(std::span<const Quaternion<S>> qs, const Permutation& sigma) {
  const int n = static_cast<int>(qs.size());
  if (n < 1) throw arity_error("multiproduct needs at least one quaternion");
  if (sigma.size() != n) throw precondition_error("permutation size does not match tuple size");
  Quaternion<S> acc = qs[static_cast<std::size_t>(sigma(0))];
  for (int i = 1; i < n; ++i) acc = acc * qs[static_cast<std::size_t>(sigma(i))];
  return acc;
}

/// Similarity invariant: two quaternions are similar (q = s^-1 p s) iff their
/// keys agree — equal real part and equal squared norm.
template <class S>
struct SimilarityKey {
  S re{};
  S norm_sq{};
  bool operator==(const SimilarityKey&) const = default;
};

template <class S>
SimilarityKey<S> similarity_key(const Quaternion<S>& q) {
  return {q.re, norm_sq(q)};
}

template <class S>
bool keys_equal(const SimilarityKey<S>& a, const SimilarityKey<S>& b, const Tolerance& tol = {}) {
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return a == b;
  } else {
    return nearly_equal(a.re, b.re, tol) && nearly_equal(a.norm_sq, b.norm_sq, tol);
  }
}

template <class S>
bool is_similar(const Quaternion<S>& p, const Quaternion<S>& q, const Tolerance& tol = {}) {
  return keys_equal(similarity_key(p), similarity_key(q), tol);
}

namespace detail {

/// Nonzero vector orthogonal to v (v != 0): cross with the least-aligned basis vector.
template <class S>
Vector3<S> orthogonal_vector(const Vector3<S>& v) {
  using std::abs;
  const std::array<S, 3> mags = {abs(v.x), abs(v.y), abs(v.z)};
  int least = 0;
  if (mags[1] < mags[0]) least = 1;
  if (mags[2] < mags[static_cast<std::size_t>(least)]) least = 2;
  const Vector3<S> e = least == 0   ? Vector3<S>::unit_x()
                       : least == 1 ? Vector3<S>::unit_y()
                                    : Vector3<S>::unit_z();
  return cross(v, e);
}

}  // namespace detail

/// Conjugator s != 0 with s^-1 p s = q for similar p, q. The generic case is
/// the half-angle rotation about im(p) x im(q), left unnormalized:
///   s = N - pure(im p) pure(im q),  N = (|im p|^2 + |im q|^2) / 2,
/// which is rational whenever the inputs are (tan(theta/2) = |u x v| / (N + u.v)).
/// When im(q) = -im(p) the rotation axis degenerates; any pure quaternion
/// orthogonal to im(p) conjugates p to q instead. Conjugation is scale
/// invariant, so no normalization is needed anywhere.
template <class S>
Quaternion<S> similarity_witness(const Quaternion<S>& p, const Quaternion<S>& q,
                                 const Tolerance& tol = {}) {
  if (!is_similar(p, q, tol)) {
    throw precondition_error("similarity_witness: inputs are not similar");
  }
  if (p.im == q.im) return Quaternion<S>::one();
  const S n_mean = (norm_sq(p.im) + norm_sq(q.im)) / S(2);
  const Quaternion<S> s = Quaternion<S>(n_mean) - pure(p.im) * pure(q.im);
  bool antipodal;
  if constexpr (is_exact_v<S>) {
    antipodal = is_zero(s);
  } else {
    antipodal = norm(s) <= 1e-6 * (1.0 + n_mean);
  }
  if (!antipodal) return s;
  return pure(detail::orthogonal_vector(p.im));
}

/// One similarity class of permuted products: members share a key.
/// equality_groups (exact backend only) refines members by true product
/// equality; each group lists member indices with identical products.
template <class S>
struct SimilarityClass {
  SimilarityKey<S> key;
  std::vector<std::pair<Permutation, Quaternion<S>>> members;
  std::vector<std::vector<std::size_t>> equality_groups;
};

template <class S>
struct ClassPartition {
  int tuple_size = 0;
  bool heuristic = false;  // float backend: tolerance bucketing, not ground truth
  std::vector<SimilarityClass<S>> classes;
  std::size_t class_count() const { return classes.size(); }
};

namespace detail {

template <class S>
void refine_equality_groups(SimilarityClass<S>& cls) {
  if constexpr (is_exact_v<S>) {
    std::map<std::array<S, 4>, std::size_t> group_by_value;
    for (std::size_t m = 0; m < cls.members.size(); ++m) {
      const Quaternion<S>& q = cls.members[m].second;
      const std::array<S, 4> key = {q.re, q.im.x, q.im.y, q.im.z};
      auto [it, inserted] = group_by_value.try_emplace(key, cls.equality_groups.size());
      if (inserted) cls.equality_groups.emplace_back();
      cls.equality_groups[it->second].push_back(m);
    }
  } else {
    (void)cls;
  }
}

}  // namespace detail

/// Groups all n! permuted products of a tuple by similarity key. Classes are
/// ordered by the lexicographic rank of their first member, members within a
/// class in lexicographic permutation order. A zero factor short-circuits to
/// the single class {0}. n above max_n is refused (factorial blowup guard).
template <class S>
ClassPartition<S> enumerate_class_partition(std::span<const Quaternion<S>> qs, int max_n = 8,
                                            const Tolerance& tol = {}) {
  const int n = static_cast<int>(qs.size());
  if (n < 1) throw arity_error("class partition needs at least one quaternion");
  if (n > max_n) throw size_limit_error("class partition limited to tuples of size max_n");

  ClassPartition<S> partition;
  partition.tuple_size = n;
  partition.heuristic = !is_exact_v<S>;
  const std::vector<Permutation> perms = Permutation::all(n);

  const bool any_zero =
      std::any_of(qs.begin(), qs.end(), [](const Quaternion<S>& q) { return is_zero(q); });
  if (any_zero) {
    SimilarityClass<S> cls;
    cls.key = similarity_key(Quaternion<S>::zero());
    for (const Permutation& sigma : perms) cls.members.emplace_back(sigma, Quaternion<S>::zero());
    detail::refine_equality_groups(cls);
    partition.classes.push_back(std::move(cls));
    return partition;
  }

  std::vector<Quaternion<S>> products;
  products.reserve(perms.size());
  for (const Permutation& sigma : perms) products.push_back(multiproduct(qs, sigma));

  if constexpr (is_exact_v<S>) {
    std::map<std::pair<S, S>, std::size_t> class_by_key;
    for (std::size_t rank = 0; rank < perms.size(); ++rank) {
      const SimilarityKey<S> key = similarity_key(products[rank]);
      auto [it, inserted] = class_by_key.try_emplace({key.re, key.norm_sq}, partition.classes.size());
      if (inserted) {
        SimilarityClass<S> cls;
        cls.key = key;
        partition.classes.push_back(std::move(cls));
      }
      partition.classes[it->second].members.emplace_back(perms[rank], products[rank]);
    }
  } else {
    // Tolerance bucketing: sort ranks by key, cluster against each cluster's
    // first (canonical) key, then restore first-occurrence ordering.
    std::vector<std::size_t> order(perms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<SimilarityKey<S>> keys;
    keys.reserve(products.size());
    for (const auto& prod : products) keys.push_back(similarity_key(prod));
    std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
      if (keys[lhs].re != keys[rhs].re) return keys[lhs].re < keys[rhs].re;
      if (keys[lhs].norm_sq != keys[rhs].norm_sq) return keys[lhs].norm_sq < keys[rhs].norm_sq;
      return lhs < rhs;
    });
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t rank : order) {
      if (!clusters.empty() && keys_equal(keys[clusters.back().front()], keys[rank], tol)) {
        clusters.back().push_back(rank);
      } else {
        clusters.push_back({rank});
      }
    }
    for (auto& cluster : clusters) std::sort(cluster.begin(), cluster.end());
    std::sort(clusters.begin(), clusters.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
    for (const auto& cluster : clusters) {
      SimilarityClass<S> cls;
      cls.key = keys[cluster.front()];
      for (std::size_t rank : cluster) cls.members.emplace_back(perms[rank], products[rank]);
      partition.classes.push_back(std::move(cls));
    }
  }

  for (auto& cls : partition.classes) detail::refine_equality_groups(cls);
  return partition;
}

/// re(abc) - re(acb) by direct multiplication. Satisfies
/// (re(abc) - re(acb))^2 = 4 det3(im a, im b, im c)^2; the sign of the
/// relation is an empirical observation recorded by the harness.
template <class S>
S triple_re_difference(const Quaternion<S>& a, const Quaternion<S>& b, const Quaternion<S>& c) {
  return (a * b * c).re - (a * c * b).re;
}

/// abc ~ acb iff the imaginary parts are linearly dependent (det = 0).
/// Decisive on the exact backend; a toleranced verdict on the float backend.
template <class S>
bool triple_similar_criterion(const Quaternion<S>& a, const Quaternion<S>& b,
                              const Quaternion<S>& c, const Tolerance& tol = {}) {
  const S det = det3(a.im, b.im, c.im);
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return det == S(0);
  } else {
    const double scale = std::sqrt(norm_sq(a.im) * norm_sq(b.im) * norm_sq(c.im));
    return std::fabs(det) <= std::max(tol.abs, tol.rel * scale);
  }
}

/// Closed form for re(abcd) - re(adcb):
///   -2 [ (a0 b + b0 a).(c x d) + (a x b).(c0 d + d0 c) ]
/// Treated as a claim: the harness compares it against the direct difference.
template <class S>
S quad_re_difference_formula(const Quaternion<S>& a, const Quaternion<S>& b,
                             const Quaternion<S>& c, const Quaternion<S>& d) {
  const Vector3<S> ab_vec = a.re * b.im + b.re * a.im;
  const Vector3<S> cd_vec = c.re * d.im + d.re * c.im;
  return S(-2) * (dot(ab_vec, cross(c.im, d.im)) + dot(cross(a.im, b.im), cd_vec));
}

/// Coefficients of a linear relation alpha a + beta b + gamma c + delta d = 0
/// among four imaginary parts, normalized so the first nonzero entry is 1.
/// nullity flags degenerate spans (> 1 independent relation exists).
template <class S>
struct DependenceCoefficients {
  S alpha{};
  S beta{};
  S gamma{};
  S delta{};
  int nullity = 1;

  std::array<S, 4> as_array() const { return {alpha, beta, gamma, delta}; }
};

/// Exact null-space element of the 3x4 matrix [im a | im b | im c | im d]
/// via Gaussian elimination over the rationals. Four vectors in 3-space are
/// always dependent, so a nonzero relation always exists.
template <class S>
  requires is_exact_v<S>
DependenceCoefficients<S> dependence_coefficients(const Quaternion<S>& a, const Quaternion<S>& b,
                                                  const Quaternion<S>& c, const Quaternion<S>& d) {
  std::array<std::array<S, 4>, 3> m = {{{a.im.x, b.im.x, c.im.x, d.im.x},
                                        {a.im.y, b.im.y, c.im.y, d.im.y},
                                        {a.im.z, b.im.z, c.im.z, d.im.z}}};
  std::vector<std::pair<int, int>> pivots;
  int row = 0;
  for (int col = 0; col < 4 && row < 3; ++col) {
    int sel = -1;
    for (int r = row; r < 3; ++r) {
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != S(0)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(row)]);
    const S lead = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (int cc = col; cc < 4; ++cc) {
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cc)] =
          m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cc)] / lead;
    }
    for (int r = 0; r < 3; ++r) {
      if (r == row) continue;
      const S factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor == S(0)) continue;
      for (int cc = col; cc < 4; ++cc) {
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -
            factor * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cc)];
      }
    }
    pivots.emplace_back(row, col);
    ++row;
  }

  std::array<bool, 4> is_pivot_col = {false, false, false, false};
  for (const auto& [pr, pc] : pivots) is_pivot_col[static_cast<std::size_t>(pc)] = true;
  int free_col = 0;
  while (free_col < 4 && is_pivot_col[static_cast<std::size_t>(free_col)]) ++free_col;

  std::array<S, 4> x{};
  x[static_cast<std::size_t>(free_col)] = S(1);
  for (const auto& [pr, pc] : pivots) {
    x[static_cast<std::size_t>(pc)] =
        -m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(free_col)];
  }

  for (const S& value : x) {
    if (value != S(0)) {
      const S lead = value;
      for (S& entry : x) entry = entry / lead;
      break;
    }
  }

  DependenceCoefficients<S> coeffs;
  coeffs.alpha = x[0];
  coeffs.beta = x[1];
  coeffs.gamma = x[2];
  coeffs.delta = x[3];
  coeffs.nullity = 4 - static_cast<int>(pivots.size());
  return coeffs;
}

/// Criterion value a0 alpha - b0 beta + c0 gamma - d0 delta for a relation
/// annihilating the imaginary parts. Its vanishing is the claimed test for
/// abcd ~ adcb when the imaginary parts span 3-space.
template <class S>
  requires is_exact_v<S>
S quad_criterion(const Quaternion<S>& a, const Quaternion<S>& b, const Quaternion<S>& c,
                 const Quaternion<S>& d, const DependenceCoefficients<S>& coeffs) {
  const bool all_zero = coeffs.alpha == S(0) && coeffs.beta == S(0) && coeffs.gamma == S(0) &&
                        coeffs.delta == S(0);
  if (all_zero) throw precondition_error("quad_criterion: coefficients are all zero");
  const Vector3<S> combo = coeffs.alpha * a.im + coeffs.beta * b.im + coeffs.gamma * c.im +
                           coeffs.delta * d.im;
  if (!(combo == Vector3<S>::zero())) {
    throw precondition_error("quad_criterion: coefficients do not annihilate the imaginary parts");
  }
  return a.re * coeffs.alpha - b.re * coeffs.beta + c.re * coeffs.gamma - d.re * coeffs.delta;
}

}  // namespace quatcomm
