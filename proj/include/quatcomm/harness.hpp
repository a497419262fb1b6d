#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quatcomm/exponential.hpp"
#include "quatcomm/quaternion.hpp"

namespace quatcomm {

/// Runtime scalar-mode selector for the CLI layer. Inside the library the
/// mode is the template parameter; here it is data.
enum class Mode { Float, Exact };

const char* mode_name(Mode mode);
Mode parse_mode(const std::string& text);  // throws precondition_error

/// Aggregated verdict over all trials of one claim run.
/// CONFIRMED: no conclusive trial violated the claim.
/// REFUTED:   every conclusive trial violated it.
/// MIXED:     some but not all conclusive trials violated it.
/// Degenerate trials (zero commutators, non-spanning quadruples, ...) are
/// counted but never conclusive.
enum class Verdict { Confirmed, Refuted, Mixed };

const char* verdict_name(Verdict verdict);
int verdict_exit_code(Verdict verdict);  // CONFIRMED -> 0, REFUTED/MIXED -> 2

struct HarnessConfig {
  std::string claim;
  int trials = 100;
  std::uint64_t seed = 0;
  Mode mode = Mode::Exact;
  int tuple_size = 0;  // 0 = claim default
  int coefficient_bound = 9;
  int max_counterexamples = 10;
};

/// One serialized violation: inputs are quaternion literals replayable
/// through the parser; lhs/rhs are both sides of the identity that failed.
struct Counterexample {
  int trial = 0;
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct TrialRow {
  int trial = 0;
  std::string outcome;  // pass | violation | degenerate
  std::string detail;
};

struct HarnessReport {
  std::string claim;
  Mode mode = Mode::Exact;
  int tuple_size = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int coefficient_bound = 9;
  Verdict verdict = Verdict::Confirmed;
  int conclusive = 0;
  int violations = 0;
  int degenerate = 0;
  std::vector<Counterexample> counterexamples;      // capped at max_counterexamples
  std::map<int, std::uint64_t> class_histogram;     // class-count claim only
  std::string note;                                 // recorded empirical observations
  std::vector<TrialRow> rows;                       // per-trial rows (CSV output)
};

struct ClaimInfo {
  const char* id;
  bool supports_float;
  bool supports_exact;
  int default_n;  // 0 when the claim ignores tuple size
  int min_n;
  int max_n;
  const char* summary;
};

const std::vector<ClaimInfo>& claim_catalog();
const ClaimInfo* find_claim(const std::string& id);

/// Runs one claim: deterministic given (claim, trials, seed, mode, n, bound).
HarnessReport run_harness(const HarnessConfig& config);

/// Smooth quaternion-valued test path psi(x) = c0 + c1 x + c2 x^2 used by the
/// derivative claims and their finite-difference oracle.
struct QuadraticPath {
  Quaternion<double> c0;
  Quaternion<double> c1;
  Quaternion<double> c2;

  Quaternion<double> value(double x) const { return c0 + x * c1 + (x * x) * c2; }
  Quaternion<double> derivative(double x) const { return c1 + (2.0 * x) * c2; }
  JetPair jet(double x) const { return {value(x), derivative(x)}; }
};

/// Central difference [exp(psi(x+h)) - exp(psi(x-h))] / 2h.
inline Quaternion<double> exp_central_difference(const QuadraticPath& path, double x, double h) {
  return (qexp(path.value(x + h)) - qexp(path.value(x - h))) / (2.0 * h);
}

/// Similarity-class partition runner behind the `classes` subcommand.
struct ClassSummary {
  std::string re;
  std::string norm_sq;
  std::vector<std::vector<int>> member_permutations;
  std::vector<std::size_t> equality_group_sizes;  // exact mode only
};

struct TupleClassRow {
  int index = 0;
  std::vector<std::string> tuple;
  int class_count = 0;
  std::uint64_t class_bound = 0;  // (n-1)!
  bool within_bound = true;
  std::vector<ClassSummary> classes;
};

struct ClassesConfig {
  int n = 3;
  Mode mode = Mode::Exact;
  std::uint64_t seed = 0;
  int random_count = 0;                                // used when input_tuples is empty
  std::vector<std::vector<std::string>> input_tuples;  // literals, one vector per tuple
  int coefficient_bound = 9;
  int max_n = 8;
};

struct ClassesReport {
  int n = 0;
  Mode mode = Mode::Exact;
  std::uint64_t seed = 0;
  std::string source;  // "random" or "file"
  bool heuristic = false;
  std::vector<TupleClassRow> tuples;
  std::map<int, std::uint64_t> histogram;  // class count -> tuple count
};

ClassesReport run_classes(const ClassesConfig& config);

}  // namespace quatcomm
