#pragma once

// The four reductivities of a knot projection: the least number of splices
// turning it into a reducible projection, where the splices are
//   t  of either type, applied simultaneously,
//   r  disoriented, applied one after another (each re-anchored to the
//      orientation of the current curve),
//   y  disoriented, applied simultaneously,
//   i  oriented, applied simultaneously.
// Simultaneous splice types always refer to the input word's orientation.

#include <optional>
#include <string>
#include <vector>

#include "shadow/splice.hpp"
#include "shadow/word.hpp"

namespace shadow {

enum class ReductivityKind { t, r, y, i };

std::string to_string(ReductivityKind kind);
ReductivityKind parse_kind(const std::string& text);  // throws std::invalid_argument

struct ReductivityCertificate {
  enum class Status { found, not_found, above_cap };

  ReductivityKind kind = ReductivityKind::t;
  Status status = Status::found;
  int value = 0;  // meaningful when found
  int cap = 0;    // meaningful when above_cap
  SpliceSpec witness;          // t, y, i
  std::vector<int> sequence;   // r, in application order

  bool found() const noexcept { return status == Status::found; }
  std::optional<int> value_if_found() const {
    return found() ? std::optional<int>(value) : std::nullopt;
  }
  // "t=1 [1d]", "r=2 [1,3]", "i=NotFound", "r>6"
  std::string str() const;
};

inline constexpr int kDefaultRCap = 6;

// Throws EmptyWord for n = 0 and std::invalid_argument for unrealizable input
// or cap < 1.
ReductivityCertificate reductivity(const GaussWord& w, ReductivityKind kind, int cap = kDefaultRCap);

// Result of a single-component splice: reducible iff it still has crossings
// and one of them is nugatory.
bool is_reducible_result(const ShadowState& s);

struct ReplayResult {
  bool ok = false;
  GaussWord final_word;
  std::string reason;
};

// Applies the witness and checks that it yields one reducible component
// (every intermediate step too, for r). Throws UnknownCrossing.
ReplayResult replay_certificate(const GaussWord& w, const ReductivityCertificate& c);

}  // namespace shadow
