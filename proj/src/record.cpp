#include "shadow/record.hpp"

#include <set>
#include <stdexcept>

#include "shadow/cut_circle.hpp"
#include "shadow/splice.hpp"

namespace shadow {

std::optional<int> ProjectionRecord::value(ReductivityKind kind) const {
  switch (kind) {
    case ReductivityKind::t: return t.value_if_found();
    case ReductivityKind::r: return r.value_if_found();
    case ReductivityKind::y: return y.value_if_found();
    case ReductivityKind::i: return i.value_if_found();
  }
  return std::nullopt;
}

ProjectionRecord compute_record(const GaussWord& input, const RecordOptions& options) {
  if (input.crossings() == 0) throw EmptyWord();
  ProjectionRecord rec;
  rec.word = canonical_form(input);
  rec.n = rec.word.crossings();
  Realization realization = check_realizable(rec.word);
  if (const auto* refusal = std::get_if<Refusal>(&realization))
    throw std::invalid_argument("word '" + input.str() + "' is not realizable: " + refusal->detail);
  const EmbeddedShadow& e = std::get<EmbeddedShadow>(realization);

  rec.prime = is_prime(rec.word);
  rec.reduced = !has_nugatory(rec.word);
  rec.tau = circle_number(rec.word);
  rec.seifert_circles = seifert_circles(rec.word);
  rec.t = reductivity(rec.word, ReductivityKind::t, options.r_cap);
  rec.r = reductivity(rec.word, ReductivityKind::r, options.r_cap);
  rec.y = reductivity(rec.word, ReductivityKind::y, options.r_cap);
  rec.i = reductivity(rec.word, ReductivityKind::i, options.r_cap);
  rec.census = face_census(e);
  rec.rotation_tag = e.rotation_tag();
  if (options.with_cut_circles) {
    for (int m : {2, 3}) {
      std::set<std::string> classes;
      for (const CutCircle& c : find_cut_circles(e, m)) classes.insert(pattern_class(c, e).signature);
      (m == 2 ? rec.cut2 : rec.cut3).assign(classes.begin(), classes.end());
    }
  }
  return rec;
}

std::string census_json_key(int k) { return std::to_string(k) + "-gons"; }

nlohmann::ordered_json census_to_json(const FaceCensus& c) {
  nlohmann::ordered_json j;
  j["faces"] = c.faces;
  j["monogons"] = c.monogons;
  j["bigons_coherent"] = c.coherent_bigons;
  j["bigons_incoherent"] = c.incoherent_bigons;
  j["trigons"] = c.trigons();
  nlohmann::ordered_json classes = nlohmann::ordered_json::object();
  for (const auto& sig : c.trigon_classes) {
    if (!classes.contains(sig)) classes[sig] = 0;
    classes[sig] = classes[sig].get<int>() + 1;
  }
  j["trigon_classes"] = classes;
  nlohmann::ordered_json larger = nlohmann::ordered_json::object();
  for (auto [k, count] : c.larger) larger[census_json_key(k)] = count;
  j["larger"] = larger;
  j["repeated_vertex_faces"] = c.repeated_vertex_faces;
  return j;
}

namespace {

nlohmann::ordered_json value_json(const ReductivityCertificate& c) {
  if (c.found()) return c.value;
  return nullptr;
}

}  // namespace

nlohmann::ordered_json to_json(const ProjectionRecord& rec) {
  nlohmann::ordered_json j;
  j["word"] = rec.word.str();
  j["n"] = rec.n;
  j["prime"] = rec.prime;
  j["reduced"] = rec.reduced;
  j["tau"] = rec.tau;
  j["seifert_circles"] = rec.seifert_circles;
  j["t"] = value_json(rec.t);
  j["r"] = value_json(rec.r);
  j["y"] = value_json(rec.y);
  j["i"] = value_json(rec.i);
  j["r_capped"] = rec.r_capped();
  j["census"] = census_to_json(rec.census);
  j["cut2"] = rec.cut2;
  j["cut3"] = rec.cut3;
  j["label"] = rec.label;
  return j;
}

nlohmann::ordered_json to_json_detailed(const ProjectionRecord& rec) {
  nlohmann::ordered_json j = to_json(rec);
  nlohmann::ordered_json certs;
  for (const auto* c : {&rec.t, &rec.r, &rec.y, &rec.i}) {
    nlohmann::ordered_json cj;
    cj["status"] = c->found() ? "found" : c->status == ReductivityCertificate::Status::not_found
                                              ? "not_found"
                                              : "above_cap";
    if (c->kind == ReductivityKind::r)
      cj["sequence"] = c->sequence;
    else
      cj["witness"] = c->witness.str();
    certs[to_string(c->kind)] = cj;
  }
  j["certificates"] = certs;
  j["rotation"] = rec.rotation_tag;
  return j;
}

std::string table_label(int n, int index) {
  static const char* digits = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::string suffix = index >= 1 && index <= 35 ? std::string(1, digits[index - 1])
                                                 : "(" + std::to_string(index) + ")";
  return std::to_string(n) + "_" + suffix;
}

}  // namespace shadow
