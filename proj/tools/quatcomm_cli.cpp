#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatcomm/errors.hpp"
#include "quatcomm/exponential.hpp"
#include "quatcomm/harness.hpp"
#include "quatcomm/literal.hpp"
#include "quatcomm/report_io.hpp"

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

// One tuple per line; literals separated by ';'. Blank lines are skipped.
std::vector<std::vector<std::string>> read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<std::vector<std::string>> tuples;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> literals;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ';')) {
      const std::string literal = trim(field);
      if (!literal.empty()) literals.push_back(literal);
    }
    if (!literals.empty()) tuples.push_back(std::move(literals));
  }
  return tuples;
}

std::string claim_list() {
  std::string out;
  for (const auto& info : quatcomm::claim_catalog()) {
    out += "  ";
    out += info.id;
    out += " (";
    if (info.supports_float) out += "float";
    if (info.supports_float && info.supports_exact) out += "|";
    if (info.supports_exact) out += "exact";
    out += "): ";
    out += info.summary;
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace quatcomm;

  CLI::App app{"quatcomm: quaternion products, commutators, similarity classes, exponentials"};
  app.require_subcommand(1);

  // classes
  auto* classes_cmd =
      app.add_subcommand("classes", "partition all n! permuted products into similarity classes");
  int classes_n = 3;
  std::string classes_input;
  int classes_random = 0;
  std::uint64_t classes_seed = 0;
  std::string classes_mode = "exact";
  std::string classes_format = "json";
  int classes_bound = 9;
  classes_cmd->add_option("--n", classes_n, "tuple size")->check(CLI::Range(2, 8));
  auto* input_opt = classes_cmd->add_option("--input", classes_input,
                                            "file with one tuple per line, literals separated by ';'");
  auto* random_opt =
      classes_cmd->add_option("--random", classes_random, "number of random tuples to sample");
  input_opt->excludes(random_opt);
  random_opt->excludes(input_opt);
  classes_cmd->add_option("--seed", classes_seed, "random seed");
  classes_cmd->add_option("--mode", classes_mode, "scalar mode")
      ->check(CLI::IsMember({"float", "exact"}));
  classes_cmd->add_option("--format", classes_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  classes_cmd->add_option("--bound", classes_bound,
                          "numerator/denominator magnitude bound for random rationals");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a claim-verification harness");
  verify_cmd->footer("claims:\n" + claim_list());
  std::string verify_claim;
  int verify_trials = 100;
  std::uint64_t verify_seed = 0;
  std::string verify_mode = "exact";
  std::string verify_format = "json";
  int verify_n = 0;
  int verify_bound = 9;
  verify_cmd->add_option("--claim", verify_claim, "claim identifier")->required();
  verify_cmd->add_option("--trials", verify_trials, "number of trials");
  verify_cmd->add_option("--seed", verify_seed, "random seed");
  verify_cmd->add_option("--mode", verify_mode, "scalar mode")
      ->check(CLI::IsMember({"float", "exact"}));
  verify_cmd->add_option("--n", verify_n, "tuple size (claims that take one)");
  verify_cmd->add_option("--bound", verify_bound,
                         "numerator/denominator magnitude bound for random rationals");
  verify_cmd->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  // exp
  auto* exp_cmd = app.add_subcommand("exp", "evaluate the quaternion exponential (float mode)");
  std::string exp_psi;
  std::string exp_psi_prime;
  bool exp_deriv = false;
  std::string exp_mode = "float";
  exp_cmd->add_option("--psi", exp_psi, "quaternion literal")->required();
  exp_cmd->add_flag("--deriv", exp_deriv, "also print the derivative of exp(psi(x))");
  exp_cmd->add_option("--psi-prime", exp_psi_prime, "derivative literal (with --deriv)");
  exp_cmd->add_option("--mode", exp_mode, "scalar mode (float only)")
      ->check(CLI::IsMember({"float", "exact"}));

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "parse a literal and echo its canonical form");
  std::string parse_text;
  std::string parse_mode_str = "float";
  parse_cmd->add_option("literal", parse_text, "quaternion literal")->required();
  parse_cmd->add_option("--mode", parse_mode_str, "scalar mode")
      ->check(CLI::IsMember({"float", "exact"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(classes_cmd)) {
      ClassesConfig config;
      config.n = classes_n;
      config.mode = parse_mode(classes_mode);
      config.seed = classes_seed;
      config.coefficient_bound = classes_bound;
      if (!classes_input.empty()) {
        config.input_tuples = read_tuple_file(classes_input);
      } else {
        config.random_count = classes_random;
      }
      const ClassesReport report = run_classes(config);
      std::cout << (classes_format == "json" ? to_json(report) : to_csv(report));
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      HarnessConfig config;
      config.claim = verify_claim;
      config.trials = verify_trials;
      config.seed = verify_seed;
      config.mode = parse_mode(verify_mode);
      config.tuple_size = verify_n;
      config.coefficient_bound = verify_bound;
      const HarnessReport report = run_harness(config);
      std::cout << (verify_format == "json" ? to_json(report) : to_csv(report));
      return verdict_exit_code(report.verdict);
    }

    if (app.got_subcommand(exp_cmd)) {
      if (exp_mode != "float") {
        throw mode_error("exp is transcendental; only --mode float is supported");
      }
      const Quaternion<double> psi = parse_float_quaternion(exp_psi);
      std::cout << format_quaternion(qexp(psi)) << "\n";
      if (exp_deriv) {
        if (exp_psi_prime.empty()) {
          throw precondition_error("--deriv needs --psi-prime");
        }
        const JetPair jet{psi, parse_float_quaternion(exp_psi_prime)};
        std::cout << format_quaternion(qexp_derivative(jet)) << "\n";
      }
      return 0;
    }

    // parse
    const Mode mode = parse_mode(parse_mode_str);
    if (mode == Mode::Exact) {
      std::cout << format_quaternion(parse_exact_quaternion(parse_text)) << "\n";
    } else {
      std::cout << format_quaternion(parse_float_quaternion(parse_text)) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
