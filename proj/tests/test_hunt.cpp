#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadow/hunt.hpp"

using namespace shadow;

TEST_CASE("predicate parsing") {
  CHECK_NOTHROW(Predicate::parse("t < r"));
  CHECK_NOTHROW(Predicate::parse("r >= 4 && n <= 8"));
  CHECK_NOTHROW(Predicate::parse("y > t, t == r, r = 2"));
  CHECK_NOTHROW(Predicate::parse("tau != 1 and seifert >= 2"));
  CHECK_THROWS_AS(Predicate::parse(""), MalformedPredicate);
  CHECK_THROWS_AS(Predicate::parse("t <"), MalformedPredicate);
  CHECK_THROWS_AS(Predicate::parse("q < 3"), MalformedPredicate);
  CHECK_THROWS_AS(Predicate::parse("1 < 3"), MalformedPredicate);
  CHECK_THROWS_AS(Predicate::parse("t << r"), MalformedPredicate);
  CHECK_THROWS_AS(Predicate::parse("t < r ||  y > 1"), MalformedPredicate);
}

TEST_CASE("predicate evaluation") {
  const auto rec = compute_record(parse_word("1 2 3 1 2 3"));
  CHECK(Predicate::parse("t < i").matches(rec));
  CHECK(Predicate::parse("t = 1 && tau = 3").matches(rec));
  CHECK_FALSE(Predicate::parse("t < r").matches(rec));
  CHECK(Predicate::parse("2 <= i").matches(rec));
}

TEST_CASE("hunts") {
  HuntOptions o;
  o.max_n = 7;
  auto res = hunt(Predicate::parse("r >= 4"), o);
  CHECK(res.findings.empty());
  CHECK(res.summary() == "not found up to n = 7");
  res = hunt(Predicate::parse("y > t && t == r && r == 2"), o);
  REQUIRE_FALSE(res.findings.empty());
  CHECK(res.summary() == "found");
  CHECK(res.findings[0].word.str() == "1 2 3 4 5 1 6 7 2 5 4 3 7 6");
  o.max_n = 11;
  CHECK_THROWS_AS(hunt(Predicate::parse("t < r"), o), BoundExceeded);
  o.max_n = 8;
  o.budget_seconds = 0;
  res = hunt(Predicate::parse("t < r"), o);
  CHECK(res.budget_exhausted);
  CHECK(res.searched_up_to < 8);
}
