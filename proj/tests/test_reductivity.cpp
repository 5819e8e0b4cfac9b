#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "shadow/enumerate.hpp"
#include "shadow/reductivity.hpp"

using namespace shadow;
using K = ReductivityKind;

TEST_CASE("reductivity examples") {
  const auto tre = parse_word("1 2 3 1 2 3");
  auto c = reductivity(tre, K::r);
  CHECK(c.value == 1);
  CHECK(c.sequence == std::vector<int>{1});
  c = reductivity(tre, K::i);
  CHECK(c.value == 2);
  CHECK(c.witness.str() == "1o,2o");
  CHECK(reductivity(tre, K::t).value == 1);
  CHECK(reductivity(tre, K::y).value == 1);

  const auto t5 = make_torus_word(2);
  CHECK(reductivity(t5, K::i).value == 4);
  c = reductivity(t5, K::t);
  CHECK(c.value == 1);
  CHECK(c.witness.str() == "1d");

  for (auto k : {K::t, K::r, K::y, K::i}) CHECK(reductivity(parse_word("1 1"), k).value == 0);
  CHECK_THROWS_AS(reductivity(GaussWord(), K::t), EmptyWord);
  CHECK_THROWS_AS(reductivity(parse_word("1 2 1 2"), K::t), std::invalid_argument);
  CHECK_THROWS_AS(reductivity(tre, K::r, 0), std::invalid_argument);
}

TEST_CASE("certificate text") {
  const auto tre = parse_word("1 2 3 1 2 3");
  CHECK(reductivity(tre, K::t).str() == "t=1 [1d]");
  CHECK(reductivity(tre, K::r).str() == "r=1 [1]");
  CHECK(parse_kind("y") == K::y);
  CHECK_THROWS(parse_kind("q"));
}

TEST_CASE("replay") {
  const auto tre = parse_word("1 2 3 1 2 3");
  ReductivityCertificate c;
  c.kind = K::t;
  c.value = 1;
  c.witness = SpliceSpec{{1, Splice::disoriented}};
  auto res = replay_certificate(tre, c);
  CHECK(res.ok);
  CHECK(res.final_word.str() == "2 3 3 2");
  c.witness = SpliceSpec{{1, Splice::oriented}};
  CHECK_FALSE(replay_certificate(tre, c).ok);
  c.witness = SpliceSpec{};
  CHECK_FALSE(replay_certificate(tre, c).ok);
  c.witness = SpliceSpec{{7, Splice::oriented}};
  CHECK_THROWS_AS(replay_certificate(tre, c), UnknownCrossing);
}

TEST_CASE("kink-only results are not reducible") {
  // an empty curve has no nugatory crossing
  CHECK_FALSE(is_reducible_result(resolve_state(parse_word("1 1"), {{1, Splice::disoriented}})));
}

TEST_CASE("reductivities agree with the unpruned oracle, n <= 5") {
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : enumerate_words_serial(n, Filters{false, true})) {
      const oracle::Letters l(w.letters().begin(), w.letters().end());
      CHECK(reductivity(w, K::t).value_if_found() == oracle::simultaneous(l, "od"));
      CHECK(reductivity(w, K::y).value_if_found() == oracle::simultaneous(l, "d"));
      CHECK(reductivity(w, K::i).value_if_found() == oracle::simultaneous(l, "o"));
      CHECK(reductivity(w, K::r).value_if_found() == oracle::sequential(l, kDefaultRCap));
      for (auto k : {K::t, K::r, K::y, K::i}) {
        const auto c = reductivity(w, k);
        if (c.found()) CHECK(replay_certificate(w, c).ok);
      }
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("r cap") {
  const auto w = parse_word("1 2 3 4 5 1 6 3 7 5 8 6 2 7 4 8");
  const auto c = reductivity(w, K::r, 2);
  CHECK(c.status == ReductivityCertificate::Status::above_cap);
  CHECK(c.str() == "r>2");
  CHECK(reductivity(w, K::r).value == 3);
}

TEST_CASE("prime reduced shadows up to seven crossings agree with the oracle") {
  for (int n = 6; n <= 7; ++n)
    for (const auto& w : enumerate_words_serial(n, Filters::prime_reduced())) {
      const oracle::Letters l(w.letters().begin(), w.letters().end());
      INFO(w.str());
      CHECK(reductivity(w, K::t).value_if_found() == oracle::simultaneous(l, "od"));
      CHECK(reductivity(w, K::y).value_if_found() == oracle::simultaneous(l, "d"));
      CHECK(reductivity(w, K::i).value_if_found() == oracle::simultaneous(l, "o"));
      CHECK(reductivity(w, K::r).value_if_found() == oracle::sequential(l, 4));
    }
}
