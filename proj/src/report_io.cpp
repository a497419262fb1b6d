#include "quatcomm/report_io.hpp"

#include <json.hpp>

namespace quatcomm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += '"';
  return quoted;
}

ordered_json histogram_json(const std::map<int, std::uint64_t>& histogram) {
  ordered_json out = ordered_json::object();
  for (const auto& [count, tuples] : histogram) out[std::to_string(count)] = tuples;
  return out;
}

}  // namespace

std::string to_json(const HarnessReport& report) {
  ordered_json doc;
  doc["claim"] = report.claim;
  doc["mode"] = mode_name(report.mode);
  doc["n"] = report.tuple_size;
  doc["trials"] = report.trials;
  doc["seed"] = report.seed;
  doc["coefficient_bound"] = report.coefficient_bound;
  doc["verdict"] = verdict_name(report.verdict);
  doc["conclusive_trials"] = report.conclusive;
  doc["degenerate_trials"] = report.degenerate;
  doc["violations"] = report.violations;
  ordered_json examples = ordered_json::array();
  for (const auto& ce : report.counterexamples) {
    ordered_json entry;
    entry["trial"] = ce.trial;
    entry["inputs"] = ce.inputs;
    entry["lhs"] = ce.lhs;
    entry["rhs"] = ce.rhs;
    entry["detail"] = ce.detail;
    examples.push_back(std::move(entry));
  }
  doc["counterexamples"] = std::move(examples);
  doc["class_count_histogram"] = histogram_json(report.class_histogram);
  doc["note"] = report.note;
  return doc.dump() + "\n";
}

std::string to_csv(const HarnessReport& report) {
  std::string out = "trial,outcome,detail\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.trial);
    out += ',';
    out += row.outcome;
    out += ',';
    out += csv_field(row.detail);
    out += '\n';
  }
  return out;
}

std::string to_json(const ClassesReport& report) {
  ordered_json doc;
  doc["command"] = "classes";
  doc["n"] = report.n;
  doc["mode"] = mode_name(report.mode);
  doc["seed"] = report.seed;
  doc["source"] = report.source;
  doc["heuristic"] = report.heuristic;
  ordered_json tuples = ordered_json::array();
  for (const auto& row : report.tuples) {
    ordered_json entry;
    entry["index"] = row.index;
    entry["tuple"] = row.tuple;
    entry["class_count"] = row.class_count;
    entry["class_bound"] = row.class_bound;
    entry["within_bound"] = row.within_bound;
    ordered_json classes = ordered_json::array();
    for (const auto& cls : row.classes) {
      ordered_json cls_entry;
      cls_entry["re"] = cls.re;
      cls_entry["norm_sq"] = cls.norm_sq;
      cls_entry["size"] = cls.member_permutations.size();
      cls_entry["members"] = cls.member_permutations;
      cls_entry["equality_group_sizes"] = cls.equality_group_sizes;
      classes.push_back(std::move(cls_entry));
    }
    entry["classes"] = std::move(classes);
    tuples.push_back(std::move(entry));
  }
  doc["tuples"] = std::move(tuples);
  doc["histogram"] = histogram_json(report.histogram);
  return doc.dump() + "\n";
}

std::string to_csv(const ClassesReport& report) {
  std::string out = "tuple_index,class_count,class_bound,within_bound\n";
  for (const auto& row : report.tuples) {
    out += std::to_string(row.index);
    out += ',';
    out += std::to_string(row.class_count);
    out += ',';
    out += std::to_string(row.class_bound);
    out += ',';
    out += row.within_bound ? "true" : "false";
    out += '\n';
  }
  return out;
}

}  // namespace quatcomm
