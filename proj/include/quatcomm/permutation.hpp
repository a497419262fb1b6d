#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "quatcomm/errors.hpp"

namespace quatcomm {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Bijection on {0..n-1} with cached parity. Indexes multiproducts and
/// multicommutators; enumeration order is lexicographic on the mapping.
class Permutation {
public:
  explicit Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    const int n = static_cast<int>(mapping_.size());
    if (n < 1) throw arity_error("permutation must act on at least one element");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : mapping_) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
        throw precondition_error("permutation mapping is not a bijection on {0..n-1}");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    parity_ = parity_from_inversions(mapping_);
  }

  static Permutation identity(int n) {
    if (n < 1) throw arity_error("permutation must act on at least one element");
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
  }

  /// Cyclic rotation sigma(i) = (i + k) mod n.
  static Permutation cyclic_rotation(int n, int k) {
    if (n < 1) throw arity_error("permutation must act on at least one element");
    std::vector<int> m(static_cast<std::size_t>(n));
    const int shift = ((k % n) + n) % n;
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = (i + shift) % n;
    return Permutation(std::move(m));
  }

  /// All n! permutations in lexicographic order of their mapping sequences.
  static std::vector<Permutation> all(int n, int max_n = 10) {
    if (n < 1) throw arity_error("permutation must act on at least one element");
    if (n > max_n) throw size_limit_error("refusing to enumerate more than max_n! permutations");
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    do {
      out.push_back(Permutation(m));
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
  }

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator()(int i) const { return mapping_[static_cast<std::size_t>(i)]; }
  int parity() const { return parity_; }
  const std::vector<int>& mapping() const { return mapping_; }

  bool operator==(const Permutation& other) const { return mapping_ == other.mapping_; }

private:
  static int parity_from_inversions(const std::vector<int>& m) {
    int inversions = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (m[i] > m[j]) ++inversions;
      }
    }
    return (inversions % 2 == 0) ? 1 : -1;
  }

  std::vector<int> mapping_;
  int parity_ = 1;
};

}  // namespace quatcomm
