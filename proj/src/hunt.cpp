#include "shadow/hunt.hpp"

#include <cctype>
#include <chrono>
#include <optional>
#include <regex>

namespace shadow {

namespace {

const char* const kFields[] = {"t", "r", "y", "i", "tau", "seifert", "n"};

bool known_field(const std::string& f) {
  for (const char* k : kFields)
    if (f == k) return true;
  return false;
}

Predicate::Operand parse_operand(const std::string& token, const std::string& text) {
  Predicate::Operand o;
  if (!token.empty() && std::isdigit(static_cast<unsigned char>(token[0]))) {
    try {
      o.literal = std::stoi(token);
    } catch (const std::exception&) {
      throw MalformedPredicate("bad number '" + token + "' in '" + text + "'");
    }
    return o;
  }
  if (!known_field(token)) throw MalformedPredicate("unknown field '" + token + "' in '" + text + "'");
  o.field = token;
  return o;
}

Predicate::Op parse_op(const std::string& op) {
  if (op == "<") return Predicate::Op::lt;
  if (op == "<=") return Predicate::Op::le;
  if (op == ">") return Predicate::Op::gt;
  if (op == ">=") return Predicate::Op::ge;
  if (op == "==" || op == "=") return Predicate::Op::eq;
  return Predicate::Op::ne;
}

std::optional<int> field_value(const ProjectionRecord& rec, const Predicate::Operand& o) {
  if (o.field.empty()) return o.literal;
  if (o.field == "t") return rec.value(ReductivityKind::t);
  if (o.field == "r") return rec.value(ReductivityKind::r);
  if (o.field == "y") return rec.value(ReductivityKind::y);
  if (o.field == "i") return rec.value(ReductivityKind::i);
  if (o.field == "tau") return rec.tau;
  if (o.field == "seifert") return rec.seifert_circles;
  return rec.n;
}

}  // namespace

Predicate Predicate::parse(const std::string& text) {
  static const std::regex clause_re(R"(^\s*([A-Za-z]+|\d+)\s*(<=|>=|==|!=|<|>|=)\s*([A-Za-z]+|\d+)\s*$)");
  static const std::regex and_re(R"(\s*(?:&&|\band\b|,)\s*)");
  Predicate p;
  p.text_ = text;
  std::sregex_token_iterator it(text.begin(), text.end(), and_re, -1), end;
  for (; it != end; ++it) {
    const std::string part = *it;
    std::smatch m;
    if (!std::regex_match(part, m, clause_re)) throw MalformedPredicate("cannot parse '" + part + "' in '" + text + "'");
    Clause c{parse_operand(m[1], text), parse_op(m[2]), parse_operand(m[3], text)};
    if (c.lhs.field.empty() && c.rhs.field.empty())
      throw MalformedPredicate("comparison of two numbers in '" + text + "'");
    p.clauses_.push_back(c);
  }
  if (p.clauses_.empty()) throw MalformedPredicate("empty target");
  return p;
}

bool Predicate::matches(const ProjectionRecord& rec) const {
  for (const auto& c : clauses_) {
    auto a = field_value(rec, c.lhs), b = field_value(rec, c.rhs);
    if (!a || !b) return false;
    bool ok = false;
    switch (c.op) {
      case Op::lt: ok = *a < *b; break;
      case Op::le: ok = *a <= *b; break;
      case Op::gt: ok = *a > *b; break;
      case Op::ge: ok = *a >= *b; break;
      case Op::eq: ok = *a == *b; break;
      case Op::ne: ok = *a != *b; break;
    }
    if (!ok) return false;
  }
  return true;
}

bool Predicate::undecided(const ProjectionRecord& rec) const {
  for (const auto& c : clauses_)
    if (!field_value(rec, c.lhs) || !field_value(rec, c.rhs)) return true;
  return false;
}

std::string HuntResult::summary() const {
  if (!findings.empty()) return "found";
  return "not found up to n = " + std::to_string(searched_up_to);
}

HuntResult hunt(const Predicate& target, const HuntOptions& options) {
  if (options.max_n > kHuntCrossingBound)
    throw BoundExceeded("max crossings " + std::to_string(options.max_n) + " exceeds hunt bound " +
                        std::to_string(kHuntCrossingBound));
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  HuntResult result;
  result.target = target.text();
  result.max_n = options.max_n;
  RecordOptions ro;
  ro.r_cap = options.r_cap;
  ro.with_cut_circles = false;
  for (int n = 1; n <= options.max_n; ++n) {
    if (std::chrono::duration<double>(clock::now() - start).count() > options.budget_seconds) {
      result.budget_exhausted = true;
      break;
    }
    const auto words = enumerate_words(n, options.filters, options.jobs);
    auto records = compute_records(words, ro, options.jobs);
    for (std::size_t k = 0; k < records.size(); ++k) {
      auto& rec = records[k];
      rec.label = table_label(n, static_cast<int>(k) + 1);
      if (target.undecided(rec)) result.undecided.push_back(rec.word.str());
      if (target.matches(rec)) result.findings.push_back(std::move(rec));
    }
    result.searched_up_to = n;
  }
  return result;
}

}  // namespace shadow
