#pragma once

// Existence searches over enumerated shadows.
//
// A target is a conjunction of comparisons, e.g. "t < r" or
// "r >= 4 && n <= 8". Operands are the fields t, r, y, i, tau, seifert, n or
// integer literals. A comparison touching an unknown value (i not found, r
// above the cap) is false; such shadows are reported as undecided.

#include <stdexcept>
#include <string>
#include <vector>

#include "shadow/enumerate.hpp"
#include "shadow/record.hpp"

namespace shadow {

class MalformedPredicate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Predicate {
 public:
  enum class Op { lt, le, gt, ge, eq, ne };
  struct Operand {
    std::string field;  // empty for a literal
    int literal = 0;
  };
  struct Clause {
    Operand lhs;
    Op op = Op::eq;
    Operand rhs;
  };

  static Predicate parse(const std::string& text);  // throws MalformedPredicate

  bool matches(const ProjectionRecord& rec) const;
  // True when some referenced field has no value for this record.
  bool undecided(const ProjectionRecord& rec) const;
  const std::string& text() const noexcept { return text_; }

 private:
  std::vector<Clause> clauses_;
  std::string text_;
};

inline constexpr int kHuntCrossingBound = 10;

struct HuntOptions {
  int max_n = 9;
  double budget_seconds = 600;
  Filters filters = Filters::prime_reduced();
  int r_cap = kDefaultRCap;
  int jobs = 0;
};

struct HuntResult {
  std::string target;
  std::vector<ProjectionRecord> findings;  // ordered by n, then canonical word
  std::vector<std::string> undecided;
  int searched_up_to = 0;  // every n up to this value was searched completely
  int max_n = 0;
  bool budget_exhausted = false;
  // "found", or "not found up to n = k"
  std::string summary() const;
};

// Searches n = 1, 2, ... max_n; the budget is checked between crossing
// numbers. Throws BoundExceeded beyond kHuntCrossingBound.
HuntResult hunt(const Predicate& target, const HuntOptions& options = {});

}  // namespace shadow
