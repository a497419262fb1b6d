#include <doctest.h>

#include <span>
#include <vector>

#include "quatcomm/sampling.hpp"
#include "quatcomm/similarity.hpp"

using namespace quatcomm;

using QF = Quaternion<double>;
using QR = Quaternion<Rational>;

namespace {

std::span<const QR> as_span(const std::vector<QR>& v) { return {v.data(), v.size()}; }

std::vector<QR> random_tuple(SplitMix64& rng, int n, int bound = 9) {
  std::vector<QR> tuple;
  for (int i = 0; i < n; ++i) tuple.push_back(next_exact_quaternion(rng, bound));
  return tuple;
}

}  // namespace

TEST_CASE("multiproduct follows the permutation order") {
  SplitMix64 rng(5);
  const QR a = next_exact_quaternion(rng);
  const QR b = next_exact_quaternion(rng);
  const std::vector<QR> pair = {a, b};
  CHECK(multiproduct(as_span(pair), Permutation::identity(2)) == a * b);

  const std::vector<QR> ijk = {QR::i(), QR::j(), QR::k()};
  CHECK(multiproduct(as_span(ijk), Permutation::identity(3)) == -QR::one());
  CHECK(multiproduct(as_span(ijk), Permutation({0, 2, 1})) == QR::one());

  const std::vector<QR> empty;
  CHECK_THROWS_AS(multiproduct(as_span(empty), Permutation::identity(1)), arity_error);
}

TEST_CASE("similarity is equality of real part and squared norm") {
  SplitMix64 rng(15);
  const QR q = next_exact_quaternion(rng);
  CHECK(is_similar(q, q));
  CHECK(is_similar(QR::i(), QR::j()));
  CHECK_FALSE(is_similar(QR::i(), QR::one() + QR::i()));
}

TEST_CASE("similarity witness: trivial and antipodal cases") {
  SplitMix64 rng(25);
  const QR q = next_exact_quaternion(rng);
  CHECK(similarity_witness(q, q) == QR::one());

  // conjugating i to -i needs an axis orthogonal to i
  const QR s = similarity_witness(QR::i(), -QR::i());
  CHECK(s.re == Rational(0));
  CHECK(dot(s.im, QR::i().im) == Rational(0));
  CHECK(inverse(s) * (QR::i() * s) == -QR::i());

  CHECK_THROWS_AS(similarity_witness(QR::i(), QR::one()), precondition_error);
}

TEST_CASE("similarity witness: generic case stays rational and substitutes back") {
  const QR s_ij = similarity_witness(QR::i(), QR::j());
  CHECK(inverse(s_ij) * (QR::i() * s_ij) == QR::j());

  SplitMix64 rng(35);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const QR p = next_exact_quaternion(rng);
    const QR s = next_exact_quaternion(rng);
    if (is_zero(s)) continue;
    const QR q = inverse(s) * (p * s);
    REQUIRE(is_similar(p, q));
    const QR w = similarity_witness(p, q);
    REQUIRE_FALSE(is_zero(w));
    CHECK(inverse(w) * (p * w) == q);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("similarity witness on the float backend") {
  SplitMix64 rng(45);
  for (int t = 0; t < 200; ++t) {
    const QF p = next_float_quaternion(rng);
    QF s = next_float_quaternion(rng);
    if (norm(s) < 0.1) continue;
    const QF q = inverse(s) * (p * s);
    if (!is_similar(p, q)) continue;  // rounding can break exact key equality
    const QF w = similarity_witness(p, q);
    CHECK(nearly_equal(inverse(w) * (p * w), q, Tolerance{1e-7, 1e-9}));
  }
}

TEST_CASE("class partition: noncommuting pair lands in one class") {
  SplitMix64 rng(55);
  for (int t = 0; t < 20; ++t) {
    const std::vector<QR> pair = random_tuple(rng, 2);
    const auto partition = enumerate_class_partition(as_span(pair));
    CHECK(partition.class_count() == 1);
    CHECK(partition.classes[0].members.size() == 2);
    CHECK_FALSE(partition.heuristic);
    if (!(pair[0] * pair[1] == pair[1] * pair[0])) {
      // similar but not equal: two singleton equality groups
      CHECK(partition.classes[0].equality_groups.size() == 2);
    }
  }
}

TEST_CASE("class partition: commuting pair has one equality group") {
  const std::vector<QR> pair = {QR{Rational(1), Rational(1), Rational(0), Rational(0)},
                                QR{Rational(3), Rational(-2), Rational(0), Rational(0)}};
  const auto partition = enumerate_class_partition(as_span(pair));
  REQUIRE(partition.class_count() == 1);
  REQUIRE(partition.classes[0].equality_groups.size() == 1);
  CHECK(partition.classes[0].equality_groups[0].size() == 2);
}

TEST_CASE("class partition: generic triple gives two classes of three") {
  SplitMix64 rng(65);
  int generic = 0;
  for (int t = 0; t < 50; ++t) {
    const std::vector<QR> triple = random_tuple(rng, 3);
    if (det3(triple[0].im, triple[1].im, triple[2].im) == Rational(0)) continue;
    const auto partition = enumerate_class_partition(as_span(triple));
    REQUIRE(partition.class_count() == 2);
    CHECK(partition.classes[0].members.size() == 3);
    CHECK(partition.classes[1].members.size() == 3);
    ++generic;
  }
  CHECK(generic > 30);
}

TEST_CASE("class partition: dependent imaginary parts collapse to one class") {
  SplitMix64 rng(75);
  for (int t = 0; t < 20; ++t) {
    const QR a = next_exact_quaternion(rng);
    const QR b = next_exact_quaternion(rng);
    const QR c{next_rational(rng), a.im + b.im};
    const std::vector<QR> triple = {a, b, c};
    const auto partition = enumerate_class_partition(as_span(triple));
    CHECK(partition.class_count() == 1);
    CHECK(partition.classes[0].members.size() == 6);
  }
}

TEST_CASE("class partition: zero factor short-circuits to the single class {0}") {
  SplitMix64 rng(85);
  const std::vector<QR> triple = {next_exact_quaternion(rng), QR::zero(),
                                  next_exact_quaternion(rng)};
  const auto partition = enumerate_class_partition(as_span(triple));
  REQUIRE(partition.class_count() == 1);
  CHECK(partition.classes[0].members.size() == 6);
  for (const auto& [sigma, product] : partition.classes[0].members) {
    CHECK(is_zero(product));
  }
  REQUIRE(partition.classes[0].equality_groups.size() == 1);
}

TEST_CASE("class partition: size limits") {
  const std::vector<QR> empty;
  CHECK_THROWS_AS(enumerate_class_partition(as_span(empty)), arity_error);
  SplitMix64 rng(95);
  const std::vector<QR> nine = random_tuple(rng, 9);
  CHECK_THROWS_AS(enumerate_class_partition(as_span(nine)), size_limit_error);
  CHECK_THROWS_AS(enumerate_class_partition(as_span(nine), 4), size_limit_error);
}

TEST_CASE("class partition covers all permutations with disjoint keys") {
  SplitMix64 rng(105);
  for (int n = 2; n <= 4; ++n) {
    const std::vector<QR> tuple = random_tuple(rng, n);
    const auto partition = enumerate_class_partition(as_span(tuple));
    std::size_t covered = 0;
    for (const auto& cls : partition.classes) covered += cls.members.size();
    CHECK(covered == factorial(n));
    for (std::size_t x = 0; x < partition.classes.size(); ++x) {
      for (std::size_t y = x + 1; y < partition.classes.size(); ++y) {
        CHECK_FALSE(partition.classes[x].key == partition.classes[y].key);
      }
      for (const auto& [sigma, product] : partition.classes[x].members) {
        CHECK(similarity_key(product) == partition.classes[x].key);
      }
    }
  }
}

TEST_CASE("cyclic rotations land in the same class") {
  SplitMix64 rng(115);
  for (int n = 2; n <= 5; ++n) {
    const std::vector<QR> tuple = random_tuple(rng, n);
    const std::span<const QR> qs = as_span(tuple);
    const QR base = multiproduct(qs, Permutation::identity(n));
    for (int k = 1; k < n; ++k) {
      CHECK(is_similar(base, multiproduct(qs, Permutation::cyclic_rotation(n, k))));
    }
  }
}

TEST_CASE("float-backend partition is labeled heuristic") {
  SplitMix64 rng(125);
  std::vector<QF> triple = {next_float_quaternion(rng), next_float_quaternion(rng),
                            next_float_quaternion(rng)};
  const auto partition =
      enumerate_class_partition(std::span<const QF>(triple.data(), triple.size()));
  CHECK(partition.heuristic);
  CHECK(partition.class_count() == 2);  // generic triple
  CHECK(partition.classes[0].equality_groups.empty());
}

TEST_CASE("norm_sq of a shifted product is rotation invariant") {
  SplitMix64 rng(135);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 20; ++t) {
      const std::vector<QR> tuple = random_tuple(rng, n);
      const std::span<const QR> qs = as_span(tuple);
      const Rational shift = next_rational(rng);
      const QR shifted_base = multiproduct(qs, Permutation::identity(n)) - Quaternion<Rational>(shift);
      for (int k = 1; k < n; ++k) {
        const QR shifted_rot =
            multiproduct(qs, Permutation::cyclic_rotation(n, k)) - Quaternion<Rational>(shift);
        CHECK(norm_sq(shifted_base) == norm_sq(shifted_rot));
      }
    }
  }
}

TEST_CASE("every permuted product has the same squared norm") {
  SplitMix64 rng(145);
  for (int n = 2; n <= 4; ++n) {
    const std::vector<QR> tuple = random_tuple(rng, n);
    const std::span<const QR> qs = as_span(tuple);
    Rational expected(1);
    for (const QR& q : tuple) expected = expected * norm_sq(q);
    for (const Permutation& sigma : Permutation::all(n)) {
      CHECK(norm_sq(multiproduct(qs, sigma)) == expected);
    }
  }
}

TEST_CASE("triple re-difference examples") {
  CHECK(triple_re_difference(QR::i(), QR::j(), QR::k()) == Rational(-2));
  CHECK(det3(QR::i().im, QR::j().im, QR::k().im) == Rational(1));
  CHECK(triple_re_difference(QR::i(), QR::i(), QR::j()) == Rational(0));
}

TEST_CASE("triple re-difference squared equals four det squared") {
  SplitMix64 rng(155);
  for (int t = 0; t < 200; ++t) {
    std::vector<QR> triple;
    if (t % 5 == 0) {
      const QR a = next_exact_quaternion(rng);
      const QR b = next_exact_quaternion(rng);
      const Rational alpha = next_rational(rng);
      const Rational beta = next_rational(rng);
      triple = {a, b, QR{next_rational(rng), alpha * a.im + beta * b.im}};
    } else {
      triple = random_tuple(rng, 3);
    }
    const Rational diff = triple_re_difference(triple[0], triple[1], triple[2]);
    const Rational det = det3(triple[0].im, triple[1].im, triple[2].im);
    CHECK(diff * diff == Rational(4) * det * det);
  }
}

TEST_CASE("triple similarity criterion matches the direct similarity check") {
  CHECK_FALSE(triple_similar_criterion(QR::i(), QR::j(), QR::k()));
  CHECK(triple_similar_criterion(QR::i(), QR::i(), QR::j()));

  SplitMix64 rng(165);
  for (int t = 0; t < 200; ++t) {
    std::vector<QR> triple;
    if (t % 2 == 0) {
      const QR a = next_exact_quaternion(rng);
      const QR b = next_exact_quaternion(rng);
      const Rational alpha = next_rational(rng);
      const Rational beta = next_rational(rng);
      triple = {a, b, QR{next_rational(rng), alpha * a.im + beta * b.im}};
    } else {
      triple = random_tuple(rng, 3);
    }
    const bool criterion = triple_similar_criterion(triple[0], triple[1], triple[2]);
    const bool direct = is_similar(triple[0] * triple[1] * triple[2],
                                   triple[0] * triple[2] * triple[1]);
    CHECK(criterion == direct);
  }
}

TEST_CASE("quad re-difference closed form") {
  SplitMix64 rng(175);
  const QR q = next_exact_quaternion(rng);
  CHECK(quad_re_difference_formula(q, q, q, q) == Rational(0));

  // closed form agrees with direct multiplication
  for (int t = 0; t < 200; ++t) {
    const QR a = next_exact_quaternion(rng);
    const QR b = next_exact_quaternion(rng);
    const QR c = next_exact_quaternion(rng);
    const QR d = next_exact_quaternion(rng);
    const Rational direct = (a * b * c * d).re - (a * d * c * b).re;
    CHECK(quad_re_difference_formula(a, b, c, d) == direct);
  }

  // imaginary parts confined to a plane force a zero difference
  for (int t = 0; t < 50; ++t) {
    Vector3<Rational> u = next_exact_vector(rng);
    Vector3<Rational> v = next_exact_vector(rng);
    if (cross(u, v) == Vector3<Rational>::zero()) continue;
    std::vector<QR> quad;
    for (int m = 0; m < 4; ++m) {
      const Rational su = next_rational(rng);
      const Rational sv = next_rational(rng);
      quad.push_back(QR{next_rational(rng), su * u + sv * v});
    }
    CHECK(quad_re_difference_formula(quad[0], quad[1], quad[2], quad[3]) == Rational(0));
    CHECK((quad[0] * quad[1] * quad[2] * quad[3]).re ==
          (quad[0] * quad[3] * quad[2] * quad[1]).re);
  }
}

TEST_CASE("dependence coefficients: pinned examples") {
  const QR spanning{Rational(0), Rational(1), Rational(1), Rational(1)};
  const auto c1 = dependence_coefficients(QR::i(), QR::j(), QR::k(), spanning);
  CHECK(c1.alpha == Rational(1));
  CHECK(c1.beta == Rational(1));
  CHECK(c1.gamma == Rational(1));
  CHECK(c1.delta == Rational(-1));
  CHECK(c1.nullity == 1);

  const auto c2 = dependence_coefficients(QR::i(), QR::i(), QR::j(), QR::k());
  CHECK(c2.alpha == Rational(1));
  CHECK(c2.beta == Rational(-1));
  CHECK(c2.gamma == Rational(0));
  CHECK(c2.delta == Rational(0));
  CHECK(c2.nullity == 1);
}

TEST_CASE("dependence coefficients annihilate the imaginary parts") {
  SplitMix64 rng(185);
  for (int t = 0; t < 200; ++t) {
    const QR a = next_exact_quaternion(rng);
    const QR b = next_exact_quaternion(rng);
    const QR c = next_exact_quaternion(rng);
    const QR d = next_exact_quaternion(rng);
    const auto coeffs = dependence_coefficients(a, b, c, d);
    const Vector3<Rational> combo = coeffs.alpha * a.im + coeffs.beta * b.im +
                                    coeffs.gamma * c.im + coeffs.delta * d.im;
    CHECK(combo == Vector3<Rational>::zero());
    // normalized: the first nonzero coefficient is one
    const auto arr = coeffs.as_array();
    for (const Rational& value : arr) {
      if (value != Rational(0)) {
        CHECK(value == Rational(1));
        break;
      }
    }
  }
}

TEST_CASE("dependence coefficients flag degenerate spans") {
  SplitMix64 rng(195);
  Vector3<Rational> u = next_exact_vector(rng);
  Vector3<Rational> v = next_exact_vector(rng);
  const auto planar = dependence_coefficients(pure(u), pure(v), pure(u + v),
                                              pure(u - v));
  CHECK(planar.nullity == 2);

  const auto repeated = dependence_coefficients(pure(u), pure(u), pure(u), pure(u));
  CHECK(repeated.nullity == 3);

  const auto all_zero = dependence_coefficients(QR::one(), QR::one(), QR::one(), QR::one());
  CHECK(all_zero.nullity == 4);
  CHECK(all_zero.alpha == Rational(1));
}

TEST_CASE("quad criterion: preconditions and pure quadruples") {
  const QR spanning{Rational(0), Rational(1), Rational(1), Rational(1)};
  const auto coeffs = dependence_coefficients(QR::i(), QR::j(), QR::k(), spanning);
  CHECK(quad_criterion(QR::i(), QR::j(), QR::k(), spanning, coeffs) == Rational(0));
  CHECK(is_similar(QR::i() * QR::j() * QR::k() * spanning,
                   QR::i() * spanning * QR::k() * QR::j()));

  DependenceCoefficients<Rational> wrong;
  wrong.alpha = Rational(1);
  CHECK_THROWS_AS(quad_criterion(QR::i(), QR::j(), QR::k(), spanning, wrong),
                  precondition_error);
  DependenceCoefficients<Rational> zero;
  zero.alpha = zero.beta = zero.gamma = zero.delta = Rational(0);
  CHECK_THROWS_AS(quad_criterion(QR::i(), QR::j(), QR::k(), spanning, zero),
                  precondition_error);
}

TEST_CASE("quad criterion: identical factors are degenerate but similar") {
  SplitMix64 rng(205);
  QR q = next_exact_quaternion(rng);
  while (q.im == Vector3<Rational>::zero()) q = next_exact_quaternion(rng);
  const auto coeffs = dependence_coefficients(q, q, q, q);
  CHECK(coeffs.nullity == 3);  // span is one-dimensional: criterion not decisive
  CHECK(is_similar(q * q * q * q, q * q * q * q));
}

TEST_CASE("quad criterion zero matches similarity for spanning quadruples") {
  SplitMix64 rng(215);
  int criterion_zero_cases = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<QR> quad;
    if (t % 3 == 0) {
      // pure quadruple: criterion vanishes identically
      quad = {pure(next_exact_vector(rng)), pure(next_exact_vector(rng)),
              pure(next_exact_vector(rng)), pure(next_exact_vector(rng))};
    } else {
      quad = random_tuple(rng, 4);
    }
    const auto coeffs = dependence_coefficients(quad[0], quad[1], quad[2], quad[3]);
    if (coeffs.nullity != 1) continue;
    const Rational criterion = quad_criterion(quad[0], quad[1], quad[2], quad[3], coeffs);
    const bool similar = is_similar(quad[0] * quad[1] * quad[2] * quad[3],
                                    quad[0] * quad[3] * quad[2] * quad[1]);
    CHECK((criterion == Rational(0)) == similar);
    if (criterion == Rational(0)) ++criterion_zero_cases;
  }
  CHECK(criterion_zero_cases > 50);  // the pure family exercises the zero branch
}
