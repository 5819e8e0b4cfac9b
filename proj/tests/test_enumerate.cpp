#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "shadow/enumerate.hpp"

using namespace shadow;

static std::set<oracle::Letters> naive(int n, Filters f) {
  std::set<oracle::Letters> out;
  oracle::all_words(n, [&](const oracle::Letters& w) {
    if (f.reduced && oracle::reducible(w)) return;
    if (f.prime && !oracle::prime(w)) return;
    if (!is_realizable(GaussWord(w))) return;
    out.insert(oracle::canonical(w));
  });
  return out;
}

static std::set<oracle::Letters> fast(int n, Filters f) {
  std::set<oracle::Letters> out;
  for (const auto& w : enumerate_words_serial(n, f)) {
    CHECK(out.insert({w.letters().begin(), w.letters().end()}).second);
  }
  return out;
}

TEST_CASE("enumeration matches generate-then-canonicalize") {
  for (int n = 1; n <= 5; ++n)
    for (Filters f : {Filters{}, Filters{false, true}, Filters{true, false}, Filters::prime_reduced()})
      CHECK(fast(n, f) == naive(n, f));
}

TEST_CASE("counts") {
  const Filters pr = Filters::prime_reduced();
  CHECK(enumerate_words_serial(3, pr).size() == 1);
  CHECK(enumerate_words_serial(3, pr)[0].str() == "1 2 3 1 2 3");
  CHECK(enumerate_words_serial(4, pr).size() == 1);
  const std::vector<std::size_t> expect{1, 1, 2, 3, 10, 27};
  for (int n = 3; n <= 8; ++n) CHECK(enumerate_words_serial(n, pr).size() == expect[n - 3]);
}

TEST_CASE("output is sorted and canonical") {
  const auto ws = enumerate_words_serial(7, Filters::prime_reduced());
  for (std::size_t k = 0; k < ws.size(); ++k) {
    CHECK(canonical_form(ws[k]).str() == ws[k].str());
    if (k) CHECK(std::lexicographical_compare(ws[k - 1].letters().begin(), ws[k - 1].letters().end(),
                                              ws[k].letters().begin(), ws[k].letters().end()));
  }
}

TEST_CASE("parallel matches serial") {
  for (int n = 1; n <= 8; ++n)
    for (int jobs : {1, 2, 4}) {
      const auto a = enumerate_words_serial(n, Filters::prime_reduced());
      const auto b = enumerate_words(n, Filters::prime_reduced(), jobs);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].str() == b[k].str());
    }
  const auto words = enumerate_words_serial(7, Filters::prime_reduced());
  const auto rs = compute_records_serial(words);
  for (int jobs : {1, 3}) {
    const auto rp = compute_records(words, {}, jobs);
    REQUIRE(rs.size() == rp.size());
    for (std::size_t k = 0; k < rs.size(); ++k) CHECK(to_json(rs[k]) == to_json(rp[k]));
  }
}

TEST_CASE("records") {
  const auto recs = enumerate_shadows(7);
  CHECK(recs.size() == 1 + 1 + 2 + 3 + 10);
  CHECK(recs[0].label == "3_1");
  CHECK(recs.back().label == "7_A");
  CHECK(table_label(7, 12) == "7_C");
  for (const auto& rec : recs) {
    CHECK(is_realizable(rec.word));
    CHECK(rec.prime);
    CHECK(rec.reduced);
    for (const auto* c : {&rec.t, &rec.r, &rec.y, &rec.i})
      if (c->found()) CHECK(replay_certificate(rec.word, *c).ok);
  }
  const auto j = to_json(recs[0]);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"word", "n", "prime", "reduced", "tau", "seifert_circles", "t", "r", "y", "i",
                                         "r_capped", "census", "cut2", "cut3", "label"});
  CHECK_THROWS_AS(enumerate_shadows(9), BoundExceeded);
}
