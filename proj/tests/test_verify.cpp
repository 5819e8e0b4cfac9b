#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "shadow/verify.hpp"

using namespace shadow;
using Status = PropertyResult::Status;

TEST_CASE("suite up to six crossings passes") {
  const auto report = run_suite(6);
  for (const auto& p : report.properties) {
    INFO(p.id);
    CHECK(p.status != Status::fail);
  }
  CHECK(report.ok());
  CHECK(report.properties.size() >= 12);
  std::set<std::string> ids;
  for (const auto& p : report.properties) CHECK(ids.insert(p.id).second);
}

TEST_CASE("mutation: an odd i value is reported") {
  EnumerateOptions eo;
  auto records = enumerate_shadows(6, eo);
  auto circles = analyze_all(records);
  REQUIRE(run_checks(records, circles, 6).ok());
  records[2].i.value -= 1;
  const auto report = run_checks(records, circles, 6);
  CHECK_FALSE(report.ok());
  const auto* p = report.find("i-even");
  REQUIRE(p);
  CHECK(p->status == Status::fail);
  REQUIRE(p->counterexamples.size() == 1);
  CHECK(p->counterexamples[0].find(records[2].word.str()) != std::string::npos);
}

TEST_CASE("mutation: t above r is reported") {
  auto records = enumerate_shadows(5);
  auto circles = analyze_all(records);
  records[0].t.value = records[0].r.value + 1;
  CHECK(run_checks(records, circles, 5).find("t-le-r")->status == Status::fail);
}

TEST_CASE("report is deterministic across runs and thread counts") {
  const auto a = run_suite(7, {1, kDefaultRCap}).to_json().dump();
  const auto b = run_suite(7, {4, kDefaultRCap}).to_json().dump();
  const auto c = run_suite(7, {0, kDefaultRCap}).to_json().dump();
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("trigon calibration") {
  const auto records = enumerate_shadows(8);
  const auto cal = calibrate_trigon_map(records);
  CHECK(cal.possible_classes.size() == 4);
  CHECK(cal.observed_classes.size() == 4);
  CHECK_FALSE(cal.consistent_assignments.empty());
  const auto tre = compute_record(parse_word("1 2 3 1 2 3"));
  CHECK(tre.census.trigon_classes.size() == 2);
  CHECK(tre.census.trigon_classes[0] == tre.census.trigon_classes[1]);
}

TEST_CASE("table formats encode the same values") {
  const auto records = enumerate_shadows(7);
  const auto csv = emit_table(records, TableFormat::csv);
  const auto jsonl = emit_table(records, TableFormat::jsonl);
  std::istringstream cin_(csv), jin(jsonl);
  std::string cl, jl;
  std::getline(cin_, cl);
  CHECK(cl == "label,n,t,r,y,i,tau,word");
  int rows = 0;
  while (std::getline(cin_, cl)) {
    REQUIRE(std::getline(jin, jl));
    const auto j = nlohmann::json::parse(jl);
    std::vector<std::string> cells;
    std::stringstream ss(cl);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 8);
    CHECK(cells[0] == j["label"].get<std::string>());
    const char* keys[] = {"n", "t", "r", "y", "i", "tau"};
    for (int k = 0; k < 6; ++k) CHECK(cells[k + 1] == j[keys[k]].dump());
    CHECK(cells[7] == j["word"].get<std::string>());
    ++rows;
  }
  CHECK(rows == 17);
  const auto text = emit_table(records, TableFormat::text);
  CHECK(text.find("3_1") != std::string::npos);
  CHECK_THROWS(parse_table_format("xml"));
}

TEST_CASE("trefoil row") {
  const auto records = enumerate_shadows(3);
  REQUIRE(records.size() == 1);
  const auto csv = emit_table(records, TableFormat::csv);
  CHECK(csv.find("3_1,3,1,1,1,2,3,1 2 3 1 2 3") != std::string::npos);
}
