#include "quatcomm/harness.hpp"

#include <array>
#include <span>
#include <utility>

#include "quatcomm/commutator.hpp"
#include "quatcomm/errors.hpp"
#include "quatcomm/literal.hpp"
#include "quatcomm/sampling.hpp"
#include "quatcomm/similarity.hpp"

namespace quatcomm {

const char* mode_name(Mode mode) { return mode == Mode::Float ? "float" : "exact"; }

Mode parse_mode(const std::string& text) {
  if (text == "float") return Mode::Float;
  if (text == "exact") return Mode::Exact;
  throw precondition_error("unknown mode: " + text + " (expected float or exact)");
}

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Confirmed: return "CONFIRMED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Mixed: return "MIXED";
  }
  return "?";
}

int verdict_exit_code(Verdict verdict) { return verdict == Verdict::Confirmed ? 0 : 2; }

namespace {

using QF = Quaternion<double>;
using QR = Quaternion<Rational>;

class TrialLog {
public:
  TrialLog(HarnessReport& report, int max_counterexamples)
      : report_(report), max_counterexamples_(max_counterexamples) {}

  void pass(int trial, std::string detail = {}) {
    ++report_.conclusive;
    report_.rows.push_back({trial, "pass", std::move(detail)});
  }

  void degenerate(int trial, std::string detail) {
    ++report_.degenerate;
    report_.rows.push_back({trial, "degenerate", std::move(detail)});
  }

  void violation(int trial, Counterexample example) {
    ++report_.conclusive;
    ++report_.violations;
    report_.rows.push_back({trial, "violation", example.detail});
    if (static_cast<int>(report_.counterexamples.size()) < max_counterexamples_) {
      report_.counterexamples.push_back(std::move(example));
    }
  }

  void finalize() {
    if (report_.violations == 0) {
      report_.verdict = Verdict::Confirmed;
    } else if (report_.violations == report_.conclusive) {
      report_.verdict = Verdict::Refuted;
    } else {
      report_.verdict = Verdict::Mixed;
    }
  }

private:
  HarnessReport& report_;
  int max_counterexamples_;
};

std::string perm_to_string(const Permutation& sigma) {
  std::string out = "[";
  for (int i = 0; i < sigma.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sigma(i));
  }
  out += ']';
  return out;
}

template <class S>
std::vector<std::string> tuple_literals(std::span<const Quaternion<S>> qs) {
  std::vector<std::string> out;
  out.reserve(qs.size());
  for (const auto& q : qs) out.push_back(format_quaternion(q));
  return out;
}

std::vector<QR> sample_exact_tuple(SplitMix64& rng, int n, int bound) {
  std::vector<QR> tuple;
  tuple.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) tuple.push_back(next_exact_quaternion(rng, bound));
  return tuple;
}

// ---- norm-identities -------------------------------------------------------

void run_norm_identities(const HarnessConfig& cfg, TrialLog& log) {
  const Tolerance tol{1e-12, 1e-15};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    if (cfg.mode == Mode::Exact) {
      const QR p = next_exact_quaternion(rng, cfg.coefficient_bound);
      const QR q = next_exact_quaternion(rng, cfg.coefficient_bound);
      const Rational npq = norm_sq(p * q);
      const Rational nqp = norm_sq(q * p);
      const Rational nprod = norm_sq(p) * norm_sq(q);
      const Rational mpq = norm_sq(QR::one() - p * q);
      const Rational mqp = norm_sq(QR::one() - q * p);
      if (npq == nqp && npq == nprod && mpq == mqp) {
        log.pass(trial);
      } else {
        const bool first_bad = !(npq == nqp && npq == nprod);
        log.violation(trial, {trial,
                              {format_quaternion(p), format_quaternion(q)},
                              format_scalar(first_bad ? npq : mpq),
                              format_scalar(first_bad ? nqp : mqp),
                              first_bad ? "norm_sq multiplicativity failed"
                                        : "norm_sq(1-pq) = norm_sq(1-qp) failed"});
      }
    } else {
      const QF p = next_float_quaternion(rng);
      const QF q = next_float_quaternion(rng);
      const double npq = norm(p * q);
      const double nqp = norm(q * p);
      const double nprod = norm(p) * norm(q);
      const double mpq = norm(QF::one() - p * q);
      const double mqp = norm(QF::one() - q * p);
      const bool ok = nearly_equal(npq, nqp, tol) && nearly_equal(npq, nprod, tol) &&
                      nearly_equal(mpq, mqp, tol);
      if (ok) {
        log.pass(trial);
      } else {
        log.violation(trial, {trial,
                              {format_quaternion(p), format_quaternion(q)},
                              format_scalar(npq),
                              format_scalar(nqp),
                              "norm identity outside relative 1e-12"});
      }
    }
  }
}

// ---- cyclic-similarity -----------------------------------------------------

void run_cyclic_similarity(const HarnessConfig& cfg, int n, TrialLog& log) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    const std::vector<QR> tuple = sample_exact_tuple(rng, n, cfg.coefficient_bound);
    const std::span<const QR> qs(tuple);
    const QR base = multiproduct(qs, Permutation::identity(n));
    bool ok = true;
    Counterexample example;
    for (int k = 1; k < n && ok; ++k) {
      const QR rotated = multiproduct(qs, Permutation::cyclic_rotation(n, k));
      if (!is_similar(base, rotated)) {
        ok = false;
        example = {trial, tuple_literals(qs), format_quaternion(base), format_quaternion(rotated),
                   "rotation by " + std::to_string(k) + " is not similar to the identity product"};
      }
    }
    if (ok && n == 2 && !is_zero(tuple[1])) {
      // constructive witness for ab ~ ba: conjugation by the second factor
      const QR swapped = multiproduct(qs, Permutation::cyclic_rotation(n, 1));
      const QR conjugated = tuple[1] * base * inverse(tuple[1]);
      if (!(conjugated == swapped)) {
        ok = false;
        example = {trial, tuple_literals(qs), format_quaternion(conjugated),
                   format_quaternion(swapped), "witness substitution b (ab) b^-1 = ba failed"};
      }
    }
    if (ok) {
      log.pass(trial);
    } else {
      log.violation(trial, std::move(example));
    }
  }
}

// ---- class-count -----------------------------------------------------------

void run_class_count(const HarnessConfig& cfg, int n, HarnessReport& rep, TrialLog& log) {
  const std::uint64_t bound = factorial(n - 1);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    const std::vector<QR> tuple = sample_exact_tuple(rng, n, cfg.coefficient_bound);
    const std::span<const QR> qs(tuple);
    const auto partition = enumerate_class_partition(qs, n);
    const int count = static_cast<int>(partition.class_count());
    ++rep.class_histogram[count];
    if (static_cast<std::uint64_t>(count) <= bound) {
      log.pass(trial, "classes=" + std::to_string(count));
    } else {
      log.violation(trial, {trial, tuple_literals(qs), std::to_string(count),
                            std::to_string(bound), "class count exceeds (n-1)!"});
    }
  }
}

// ---- lemma3 ----------------------------------------------------------------

std::array<QR, 3> make_dependent_triple(SplitMix64& rng, int bound) {
  const QR a = next_exact_quaternion(rng, bound);
  const QR b = next_exact_quaternion(rng, bound);
  const Rational alpha = next_rational(rng, bound);
  const Rational beta = next_rational(rng, bound);
  const QR c{next_rational(rng, bound), alpha * a.im + beta * b.im};
  return {a, b, c};
}

void run_lemma3(const HarnessConfig& cfg, HarnessReport& rep, TrialLog& log) {
  int minus_sign = 0;
  int plus_sign = 0;
  int nondegenerate = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    std::array<QR, 3> triple;
    if (trial % 5 == 0) {
      triple = make_dependent_triple(rng, cfg.coefficient_bound);
    } else {
      triple = {next_exact_quaternion(rng, cfg.coefficient_bound),
                next_exact_quaternion(rng, cfg.coefficient_bound),
                next_exact_quaternion(rng, cfg.coefficient_bound)};
    }
    const auto& [a, b, c] = triple;
    const Rational det = det3(a.im, b.im, c.im);
    const bool similar = is_similar(a * b * c, a * c * b);
    const bool criterion = triple_similar_criterion(a, b, c);
    const Rational diff = triple_re_difference(a, b, c);
    const bool ok = (similar == criterion) && (diff * diff == Rational(4) * det * det);
    if (det != 0) {
      ++nondegenerate;
      if (diff == Rational(-2) * det) ++minus_sign;
      if (diff == Rational(2) * det) ++plus_sign;
    }
    if (ok) {
      log.pass(trial, std::string(criterion ? "dependent" : "independent"));
    } else {
      log.violation(trial,
                    {trial,
                     {format_quaternion(a), format_quaternion(b), format_quaternion(c)},
                     format_scalar(diff),
                     format_scalar(det),
                     "similarity/criterion disagreement or re-difference != +/-2 det"});
    }
  }
  rep.note = "re(abc)-re(acb) matched -2*det on " + std::to_string(minus_sign) + "/" +
             std::to_string(nondegenerate) + " and +2*det on " + std::to_string(plus_sign) + "/" +
             std::to_string(nondegenerate) + " nondegenerate trials";
}

// ---- lemma4 ----------------------------------------------------------------

std::array<QR, 4> make_pure_quadruple(SplitMix64& rng, int bound) {
  return {pure(next_exact_vector(rng, bound)), pure(next_exact_vector(rng, bound)),
          pure(next_exact_vector(rng, bound)), pure(next_exact_vector(rng, bound))};
}

std::array<QR, 4> make_criterion_zero_quadruple(SplitMix64& rng, int bound) {
  while (true) {
    const Vector3<Rational> va = next_exact_vector(rng, bound);
    const Vector3<Rational> vb = next_exact_vector(rng, bound);
    const Vector3<Rational> vc = next_exact_vector(rng, bound);
    const Vector3<Rational> vd = next_exact_vector(rng, bound);
    const auto coeffs = dependence_coefficients(pure(va), pure(vb), pure(vc), pure(vd));
    if (coeffs.nullity != 1 || coeffs.alpha == Rational(0)) continue;
    const Rational b0 = next_rational(rng, bound);
    const Rational c0 = next_rational(rng, bound);
    const Rational d0 = next_rational(rng, bound);
    const Rational a0 = (b0 * coeffs.beta - c0 * coeffs.gamma + d0 * coeffs.delta) / coeffs.alpha;
    return {QR{a0, va}, QR{b0, vb}, QR{c0, vc}, QR{d0, vd}};
  }
}

void run_lemma4(const HarnessConfig& cfg, TrialLog& log) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    std::array<QR, 4> quad;
    if (trial % 5 == 0) {
      quad = ((trial / 5) % 2 == 0) ? make_pure_quadruple(rng, cfg.coefficient_bound)
                                    : make_criterion_zero_quadruple(rng, cfg.coefficient_bound);
    } else {
      quad = {next_exact_quaternion(rng, cfg.coefficient_bound),
              next_exact_quaternion(rng, cfg.coefficient_bound),
              next_exact_quaternion(rng, cfg.coefficient_bound),
              next_exact_quaternion(rng, cfg.coefficient_bound)};
    }
    const auto& [a, b, c, d] = quad;
    const auto coeffs = dependence_coefficients(a, b, c, d);
    if (coeffs.nullity > 1) {
      log.degenerate(trial, "imaginary parts do not span 3-space");
      continue;
    }
    const Rational criterion = quad_criterion(a, b, c, d, coeffs);
    const bool similar = is_similar(a * b * c * d, a * d * c * b);
    if ((criterion == Rational(0)) == similar) {
      log.pass(trial, criterion == Rational(0) ? "criterion-zero" : "criterion-nonzero");
    } else {
      log.violation(trial,
                    {trial,
                     {format_quaternion(a), format_quaternion(b), format_quaternion(c),
                      format_quaternion(d)},
                     format_scalar(criterion),
                     similar ? "similar" : "not-similar",
                     "criterion-zero and similarity of abcd, adcb disagree"});
    }
  }
}

// ---- case4-formula ---------------------------------------------------------

std::array<QR, 4> make_planar_quadruple(SplitMix64& rng, int bound) {
  Vector3<Rational> u;
  Vector3<Rational> v;
  do {
    u = next_exact_vector(rng, bound);
    v = next_exact_vector(rng, bound);
  } while (cross(u, v) == Vector3<Rational>::zero());
  std::array<QR, 4> quad;
  for (auto& q : quad) {
    const Rational s = next_rational(rng, bound);
    const Rational t = next_rational(rng, bound);
    q = QR{next_rational(rng, bound), s * u + t * v};
  }
  return quad;
}

void run_case4_formula(const HarnessConfig& cfg, TrialLog& log) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    const bool planar = trial % 5 == 0;
    std::array<QR, 4> quad;
    if (planar) {
      quad = make_planar_quadruple(rng, cfg.coefficient_bound);
    } else {
      quad = {next_exact_quaternion(rng, cfg.coefficient_bound),
              next_exact_quaternion(rng, cfg.coefficient_bound),
              next_exact_quaternion(rng, cfg.coefficient_bound),
              next_exact_quaternion(rng, cfg.coefficient_bound)};
    }
    const auto& [a, b, c, d] = quad;
    const Rational direct = (a * b * c * d).re - (a * d * c * b).re;
    const Rational formula = quad_re_difference_formula(a, b, c, d);
    bool ok = formula == direct;
    std::string detail = "closed form disagrees with direct re-difference";
    if (ok && planar && direct != Rational(0)) {
      ok = false;
      detail = "planar quadruple gave a nonzero re-difference";
    }
    if (ok) {
      log.pass(trial, planar ? "planar" : "generic");
    } else {
      log.violation(trial,
                    {trial,
                     {format_quaternion(a), format_quaternion(b), format_quaternion(c),
                      format_quaternion(d)},
                     format_scalar(formula),
                     format_scalar(direct),
                     detail});
    }
  }
}

// ---- multicom-sign ---------------------------------------------------------

void run_multicom_sign(const HarnessConfig& cfg, int n, TrialLog& log) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    const std::vector<QR> tuple = sample_exact_tuple(rng, n, cfg.coefficient_bound);
    const std::span<const QR> qs(tuple);
    const auto report = verify_sign_claim(qs);
    switch (report.verdict) {
      case ClaimVerdict::Confirmed:
        log.pass(trial);
        break;
      case ClaimVerdict::Degenerate:
        log.degenerate(trial, "all multicommutators vanish");
        break;
      case ClaimVerdict::Refuted: {
        const auto& [sigma, value] = report.witnesses.front();
        log.violation(trial, {trial, tuple_literals(qs), format_quaternion(value),
                              format_quaternion(report.reference),
                              "sigma=" + perm_to_string(sigma) +
                                  ": multicommutator is not +/- the identity-permutation value"});
        break;
      }
    }
  }
}

// ---- exp-derivative --------------------------------------------------------

struct SampledJet {
  QuadraticPath path;
  double x0 = 0.0;
  JetPair jet;
};

SampledJet sample_smooth_jet(SplitMix64& rng) {
  while (true) {
    QuadraticPath path{0.6 * next_float_quaternion(rng), 0.6 * next_float_quaternion(rng),
                       0.6 * next_float_quaternion(rng)};
    const double x0 = 0.25 + 0.5 * next_unit(rng);
    const JetPair jet = path.jet(x0);
    const double g = std::sqrt(norm_sq(jet.value.im));
    if (g >= 0.25 && norm(jet.value) <= 2.0 && norm(jet.derivative) <= 4.0) {
      return {path, x0, jet};
    }
  }
}

void run_exp_derivative(const HarnessConfig& cfg, TrialLog& log) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    const SampledJet sampled = sample_smooth_jet(rng);
    const Quaternion<double> closed = qexp_derivative(sampled.jet);
    const Quaternion<double> series = qexp_derivative_series(sampled.jet);
    const Quaternion<double> diffed = exp_central_difference(sampled.path, sampled.x0, 1e-5);
    const double series_err = norm(closed - series);
    const double fd_err = norm(diffed - closed);
    if (series_err <= 1e-9 && fd_err <= 1e-6) {
      log.pass(trial);
    } else {
      log.violation(trial,
                    {trial,
                     {format_quaternion(sampled.jet.value), format_quaternion(sampled.jet.derivative)},
                     format_quaternion(closed),
                     series_err > 1e-9 ? format_quaternion(series) : format_quaternion(diffed),
                     series_err > 1e-9 ? "closed form disagrees with series derivative"
                                       : "closed form disagrees with central finite difference"});
    }
  }
}

// ---- anticommutation -------------------------------------------------------

void run_anticommutation(const HarnessConfig& cfg, TrialLog& log) {
  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(trial));
    JetPair jet;
    do {
      jet = {next_float_quaternion(rng), next_float_quaternion(rng)};
    } while (std::sqrt(norm_sq(jet.value.im)) < 0.25);
    const Quaternion<double> axis = polar_decompose(jet.value).axis;
    const Quaternion<double> axis_prime = axis_derivative(jet);
    const double residual = norm(axis * axis_prime + axis_prime * axis);
    if (residual <= 1e-10) {
      log.pass(trial);
    } else {
      log.violation(trial,
                    {trial,
                     {format_quaternion(jet.value), format_quaternion(jet.derivative)},
                     format_scalar(residual),
                     "0",
                     "axis anticommutation residual exceeds 1e-10"});
    }
  }
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog = {
      {"norm-identities", true, true, 0, 0, 0,
       "|pq| = |qp| = |p||q| and |1-pq| = |1-qp| (norm_sq versions exact in exact mode)"},
      {"cyclic-similarity", false, true, 3, 2, 8,
       "cyclic rotations of a permuted product are similar to the identity product"},
      {"class-count", false, true, 4, 2, 8,
       "the n! permuted products occupy at most (n-1)! similarity classes"},
      {"lemma3", false, true, 0, 0, 0,
       "abc ~ acb iff the imaginary parts are linearly dependent; (re diff)^2 = 4 det^2"},
      {"lemma4", false, true, 0, 0, 0,
       "abcd ~ adcb iff a0*alpha - b0*beta + c0*gamma - d0*delta = 0 for spanning imaginary parts"},
      {"case4-formula", false, true, 0, 0, 0,
       "closed form for re(abcd) - re(adcb) agrees with direct multiplication"},
      {"multicom-sign", false, true, 3, 2, 6,
       "all n! nested commutators agree up to a +/- sign"},
      {"exp-derivative", true, false, 0, 0, 0,
       "closed-form exponential derivative agrees with series and finite-difference oracles"},
      {"anticommutation", true, false, 0, 0, 0,
       "polar axis and its derivative anticommute: I I' + I' I = 0"},
  };
  return catalog;
}

const ClaimInfo* find_claim(const std::string& id) {
  for (const auto& info : claim_catalog()) {
    if (id == info.id) return &info;
  }
  return nullptr;
}

HarnessReport run_harness(const HarnessConfig& config) {
  const ClaimInfo* info = find_claim(config.claim);
  if (info == nullptr) throw precondition_error("unknown claim: " + config.claim);
  if (config.trials < 1) throw precondition_error("trials must be at least 1");
  if (config.coefficient_bound < 1) throw precondition_error("coefficient bound must be at least 1");
  if (config.mode == Mode::Float && !info->supports_float) {
    throw mode_error("claim " + config.claim + " requires --mode exact");
  }
  if (config.mode == Mode::Exact && !info->supports_exact) {
    throw mode_error("claim " + config.claim + " requires --mode float");
  }

  int n = 0;
  if (info->default_n != 0) {
    n = config.tuple_size == 0 ? info->default_n : config.tuple_size;
    if (n < info->min_n || n > info->max_n) {
      throw precondition_error("claim " + config.claim + " supports n in [" +
                               std::to_string(info->min_n) + ", " + std::to_string(info->max_n) +
                               "]");
    }
  }

  HarnessReport report;
  report.claim = config.claim;
  report.mode = config.mode;
  report.tuple_size = n;
  report.trials = config.trials;
  report.seed = config.seed;
  report.coefficient_bound = config.coefficient_bound;

  TrialLog log(report, config.max_counterexamples);
  if (config.claim == "norm-identities") {
    run_norm_identities(config, log);
  } else if (config.claim == "cyclic-similarity") {
    run_cyclic_similarity(config, n, log);
  } else if (config.claim == "class-count") {
    run_class_count(config, n, report, log);
  } else if (config.claim == "lemma3") {
    run_lemma3(config, report, log);
  } else if (config.claim == "lemma4") {
    run_lemma4(config, log);
  } else if (config.claim == "case4-formula") {
    run_case4_formula(config, log);
  } else if (config.claim == "multicom-sign") {
    run_multicom_sign(config, n, log);
  } else if (config.claim == "exp-derivative") {
    run_exp_derivative(config, log);
  } else {
    run_anticommutation(config, log);
  }
  log.finalize();
  return report;
}

namespace {

template <class S>
void fill_classes_report(const ClassesConfig& config, ClassesReport& report) {
  const std::uint64_t bound = factorial(config.n - 1);
  const bool from_file = !config.input_tuples.empty();
  const int count = from_file ? static_cast<int>(config.input_tuples.size()) : config.random_count;
  for (int index = 0; index < count; ++index) {
    std::vector<Quaternion<S>> tuple;
    tuple.reserve(static_cast<std::size_t>(config.n));
    if (from_file) {
      const auto& literals = config.input_tuples[static_cast<std::size_t>(index)];
      if (static_cast<int>(literals.size()) != config.n) {
        throw precondition_error("tuple " + std::to_string(index) + " has " +
                                 std::to_string(literals.size()) + " entries, expected " +
                                 std::to_string(config.n));
      }
      for (const auto& literal : literals) tuple.push_back(parse_quaternion<S>(literal));
    } else {
      SplitMix64 rng = substream(config.seed, static_cast<std::uint64_t>(index));
      for (int i = 0; i < config.n; ++i) {
        tuple.push_back(sample_quaternion<S>(rng, config.coefficient_bound));
      }
    }

    const std::span<const Quaternion<S>> qs(tuple);
    const auto partition = enumerate_class_partition(qs, config.max_n);

    TupleClassRow row;
    row.index = index;
    row.tuple = tuple_literals(qs);
    row.class_count = static_cast<int>(partition.class_count());
    row.class_bound = bound;
    row.within_bound = static_cast<std::uint64_t>(row.class_count) <= bound;
    for (const auto& cls : partition.classes) {
      ClassSummary summary;
      summary.re = format_scalar(cls.key.re);
      summary.norm_sq = format_scalar(cls.key.norm_sq);
      for (const auto& [sigma, product] : cls.members) {
        summary.member_permutations.push_back(sigma.mapping());
      }
      for (const auto& group : cls.equality_groups) {
        summary.equality_group_sizes.push_back(group.size());
      }
      row.classes.push_back(std::move(summary));
    }
    ++report.histogram[row.class_count];
    report.tuples.push_back(std::move(row));
  }
}

}  // namespace

ClassesReport run_classes(const ClassesConfig& config) {
  if (config.n < 1 || config.n > config.max_n) {
    throw precondition_error("classes supports n in [1, " + std::to_string(config.max_n) + "]");
  }
  if (config.input_tuples.empty() && config.random_count < 1) {
    throw precondition_error("classes needs an input file or a positive --random count");
  }

  ClassesReport report;
  report.n = config.n;
  report.mode = config.mode;
  report.seed = config.seed;
  report.source = config.input_tuples.empty() ? "random" : "file";
  report.heuristic = config.mode == Mode::Float;
  if (config.mode == Mode::Exact) {
    fill_classes_report<Rational>(config, report);
  } else {
    fill_classes_report<double>(config, report);
  }
  return report;
}

}  // namespace quatcomm
