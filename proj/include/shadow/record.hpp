#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shadow/realize.hpp"
#include "shadow/reductivity.hpp"

namespace shadow {

struct RecordOptions {
  int r_cap = kDefaultRCap;
  bool with_cut_circles = true;
};

// One row of the projection tables: a canonical word with every invariant the
// tools compute for it.
struct ProjectionRecord {
  GaussWord word;  // canonical form
  int n = 0;
  bool prime = false;
  bool reduced = false;
  int tau = 0;
  int seifert_circles = 0;
  ReductivityCertificate t, r, y, i;
  FaceCensus census;
  std::string rotation_tag;
  std::vector<std::string> cut2;  // distinct pattern classes, sorted
  std::vector<std::string> cut3;
  std::string label;

  std::optional<int> value(ReductivityKind kind) const;
  bool r_capped() const noexcept { return r.status == ReductivityCertificate::Status::above_cap; }
};

// Throws std::invalid_argument for unrealizable words, EmptyWord for n = 0.
ProjectionRecord compute_record(const GaussWord& w, const RecordOptions& options = {});

// Fixed-schema JSONL object.
nlohmann::ordered_json to_json(const ProjectionRecord& rec);
// Schema object plus certificates and the embedding tag.
nlohmann::ordered_json to_json_detailed(const ProjectionRecord& rec);

std::string census_json_key(int k);
nlohmann::ordered_json census_to_json(const FaceCensus& c);

// 1..9 then A, B, C, ...
std::string table_label(int n, int index);

}  // namespace shadow
