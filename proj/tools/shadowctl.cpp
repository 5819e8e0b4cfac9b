// shadowctl: reductivities and related invariants of knot shadows.
//
// Exit codes: 0 success, 1 a property check failed (or a certificate did not
// replay), 2 bad input.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "shadow/enumerate.hpp"
#include "shadow/hunt.hpp"
#include "shadow/record.hpp"
#include "shadow/reductivity.hpp"
#include "shadow/verify.hpp"

using namespace shadow;
using json = nlohmann::ordered_json;

namespace {

constexpr int kInputError = 2;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Filters parse_filters(const std::string& text) {
  Filters f;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "prime") f.prime = true;
    else if (item == "reduced") f.reduced = true;
    else if (item == "none" || item.empty()) continue;
    else throw InputError("unknown filter '" + item + "'");
  }
  return f;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw InputError("format '" + format + "' is not available for this command");
}

std::string record_text(const ProjectionRecord& rec) {
  std::ostringstream out;
  out << "word            " << rec.word.str() << "\n"
      << "crossings       " << rec.n << "\n"
      << "prime           " << (rec.prime ? "yes" : "no") << "\n"
      << "reduced         " << (rec.reduced ? "yes" : "no") << "\n"
      << "circle number   " << rec.tau << "\n"
      << "seifert circles " << rec.seifert_circles << "\n";
  for (const auto* c : {&rec.t, &rec.r, &rec.y, &rec.i}) out << "  " << c->str() << "\n";
  out << "census          " << census_to_json(rec.census).dump() << "\n";
  out << "2-point circles " << json(rec.cut2).dump() << "\n";
  out << "3-point circles " << json(rec.cut3).dump() << "\n";
  return out.str();
}

std::string records_out(const std::vector<ProjectionRecord>& records, const std::string& format) {
  if (format == "jsonl") {
    std::string out;
    for (const auto& rec : records) out += to_json(rec).dump() + "\n";
    return out;
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& rec : records) arr.push_back(to_json(rec));
    return arr.dump(2) + "\n";
  }
  return emit_table(records, parse_table_format(format));
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& p : report.properties) {
    out << std::left;
    out.width(20);
    out << p.id << " ";
    out.width(10);
    out << to_string(p.status) << p.description << "\n";
    for (const auto& c : p.counterexamples) out << "    " << c << "\n";
  }
  out << (report.ok() ? "all checks passed" : "SOME CHECKS FAILED") << " (n <= " << report.max_n << ")\n";
  return out.str();
}

ReductivityCertificate parse_witness(ReductivityKind kind, const std::string& text) {
  ReductivityCertificate c;
  c.kind = kind;
  if (kind == ReductivityKind::r) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      try {
        c.sequence.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw InputError("bad crossing label '" + item + "'");
      }
    }
    c.value = static_cast<int>(c.sequence.size());
  } else {
    c.witness = SpliceSpec::parse(text);
    c.value = static_cast<int>(c.witness.size());
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductivities of knot shadows given by Gauss words"};
  app.require_subcommand(1);

  std::string word, format = "", filters = "prime,reduced", target, kind = "t", witness;
  int max_n = 7, cap_r = kDefaultRCap, jobs = 0;
  double budget = 600;

  auto* compute = app.add_subcommand("compute", "all invariants of one word");
  compute->add_option("--word", word, "Gauss word, e.g. \"1 2 3 1 2 3\"")->required();

  auto* enumerate = app.add_subcommand("enumerate", "records of all shadows up to a crossing number");
  auto* table = app.add_subcommand("table", "reductivity table of prime reduced shadows");
  auto* verify = app.add_subcommand("verify", "run the property checks over the enumeration");
  auto* hunt_cmd = app.add_subcommand("hunt", "search for shadows satisfying a target");
  hunt_cmd->add_option("--target", target, "e.g. \"t < r\" or \"r >= 4\"")->required();
  hunt_cmd->add_option("--budget", budget, "seconds, checked between crossing numbers");

  auto* replay = app.add_subcommand("replay", "check that a witness reduces a word");
  replay->add_option("--word", word)->required();
  replay->add_option("--kind", kind, "t, r, y or i");
  replay->add_option("--witness", witness, "\"1d,3o\" (t, y, i) or \"1,3\" (r)")->required();

  for (auto* cmd : {compute, enumerate, table, verify, hunt_cmd}) {
    cmd->add_option("--cap-r", cap_r, "depth cap for r");
    cmd->add_option("--format", format, "text, csv, jsonl or json");
    cmd->add_option("--jobs", jobs, "worker threads (0: runtime default)");
  }
  for (auto* cmd : {enumerate, table, verify, hunt_cmd}) cmd->add_option("--max-crossings", max_n);
  for (auto* cmd : {enumerate, hunt_cmd}) cmd->add_option("--filters", filters, "prime,reduced or none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (cap_r < 1) throw InputError("--cap-r must be positive");
    if (jobs < 0) throw InputError("--jobs must be non-negative");
    set_jobs(jobs);
    RecordOptions ro;
    ro.r_cap = cap_r;

    if (*compute) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "jsonl", "text"});
      const auto rec = compute_record(parse_word(word), ro);
      if (format == "json") std::cout << to_json_detailed(rec).dump(2) << "\n";
      else if (format == "jsonl") std::cout << to_json(rec).dump() << "\n";
      else std::cout << record_text(rec);
      return 0;
    }
    if (*enumerate || *table) {
      if (format.empty()) format = *enumerate ? "jsonl" : "text";
      require_format(format, {"jsonl", "json", "csv", "text"});
      EnumerateOptions eo;
      eo.filters = *enumerate ? parse_filters(filters) : Filters::prime_reduced();
      eo.record = ro;
      eo.record.with_cut_circles = static_cast<bool>(*enumerate);
      eo.jobs = jobs;
      std::cout << records_out(enumerate_shadows(max_n, eo), format);
      return 0;
    }
    if (*verify) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "text"});
      if (max_n > kDefaultCrossingBound)
        throw BoundExceeded("max crossings " + std::to_string(max_n) + " exceeds bound " +
                            std::to_string(kDefaultCrossingBound));
      const auto report = run_suite(max_n, SuiteOptions{jobs, cap_r});
      std::cout << (format == "json" ? report.to_json().dump(2) + "\n" : report_text(report));
      return report.ok() ? 0 : 1;
    }
    if (*hunt_cmd) {
      if (format.empty()) format = "json";
      require_format(format, {"json", "jsonl", "text"});
      HuntOptions ho;
      ho.max_n = max_n;
      ho.budget_seconds = budget;
      ho.filters = parse_filters(filters);
      ho.r_cap = cap_r;
      ho.jobs = jobs;
      const auto result = hunt(Predicate::parse(target), ho);
      if (format == "jsonl") {
        std::cout << records_out(result.findings, "jsonl");
      } else if (format == "text") {
        std::cout << result.target << ": " << result.summary() << "\n" << records_out(result.findings, "text");
      } else {
        json j;
        j["target"] = result.target;
        j["max_n"] = result.max_n;
        j["searched_up_to"] = result.searched_up_to;
        j["budget_exhausted"] = result.budget_exhausted;
        j["summary"] = result.summary();
        json found = json::array();
        for (const auto& rec : result.findings) found.push_back(to_json(rec));
        j["findings"] = found;
        j["undecided"] = result.undecided;
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }
    if (*replay) {
      const GaussWord w = parse_word(word);
      const auto c = parse_witness(parse_kind(kind), witness);
      const auto res = replay_certificate(w, c);
      std::cout << (res.ok ? "ok" : "fail") << " final word: " << res.final_word.str();
      if (!res.reason.empty()) std::cout << " (" << res.reason << ")";
      std::cout << "\n";
      return res.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
