#pragma once

// Property suite over enumerated shadows, trigon-letter calibration and table
// output.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "shadow/enumerate.hpp"
#include "shadow/record.hpp"

namespace shadow {

// Which cut circles of a shadow carry a reduction of each kind.
struct CircleAnalysis {
  int cut2 = 0;
  int cut3 = 0;
  std::vector<std::string> cut2_classes;
  std::vector<std::string> cut3_classes;
  // 2-circles whose single side-separating splice already reduces the curve.
  std::vector<std::string> t1_classes;
  // Circles supporting a two-splice witness, by kind.
  std::map<ReductivityKind, std::vector<std::string>> support2;
  std::map<ReductivityKind, std::vector<std::string>> support3;
};

CircleAnalysis analyze_circles(const GaussWord& w);

struct PropertyResult {
  enum class Status { pass, fail, info, not_found };

  std::string id;
  std::string description;
  Status status = Status::pass;
  std::vector<std::string> counterexamples;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
};

std::string to_string(PropertyResult::Status s);

struct TrigonCalibration {
  std::vector<std::string> possible_classes;  // all single-component matchings, up to symmetry
  std::vector<std::string> observed_classes;
  std::map<std::string, bool> forces_i2;     // every carrier has i = 2
  std::map<std::string, bool> forces_y_le2;  // every carrier has 1 <= y <= 2
  std::map<std::string, int> carriers;
  // letter -> class, for each assignment consistent with the data
  std::vector<std::map<char, std::string>> consistent_assignments;
  nlohmann::ordered_json to_json() const;
};

TrigonCalibration calibrate_trigon_map(const std::vector<ProjectionRecord>& records);

struct SuiteReport {
  int max_n = 0;
  std::vector<PropertyResult> properties;
  bool ok() const;
  const PropertyResult* find(const std::string& id) const;
  nlohmann::ordered_json to_json() const;
};

// Pure check layer: evaluates every property on the given records (prime
// reduced shadows) and their circle analyses.
SuiteReport run_checks(const std::vector<ProjectionRecord>& records,
                       const std::vector<CircleAnalysis>& circles, int max_n);

struct SuiteOptions {
  int jobs = 0;
  int r_cap = kDefaultRCap;
};

// Enumerates prime reduced shadows up to max_n and runs every check.
SuiteReport run_suite(int max_n, const SuiteOptions& options = {});

std::vector<CircleAnalysis> analyze_all(const std::vector<ProjectionRecord>& records, int jobs = 0);

enum class TableFormat { text, csv, jsonl };
TableFormat parse_table_format(const std::string& text);  // throws std::invalid_argument
std::string emit_table(const std::vector<ProjectionRecord>& records, TableFormat format);

}  // namespace shadow
