#pragma once

// Simultaneous splice states of a Gauss word.
//
// Splice types are relative to the word's own traversal direction: an
// oriented (Seifert) splice joins each incoming branch to the other passage's
// outgoing branch, a disoriented one joins the two incoming branches together
// and the two outgoing branches together.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shadow/word.hpp"

namespace shadow {

enum class Splice : std::uint8_t { oriented, disoriented };

inline char splice_code(Splice s) noexcept { return s == Splice::oriented ? 'o' : 'd'; }

class SpliceSpec {
 public:
  SpliceSpec() = default;
  SpliceSpec(std::initializer_list<std::pair<int, Splice>> items);

  // Throws std::invalid_argument if the label is already assigned.
  void assign(int label, Splice type);
  std::span<const std::pair<int, Splice>> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  // "1o,3d" (sorted by label); empty string for the empty spec.
  std::string str() const;
  static SpliceSpec parse(const std::string& text);

  friend bool operator==(const SpliceSpec&, const SpliceSpec&) = default;

 private:
  std::vector<std::pair<int, Splice>> items_;  // sorted by label
};

struct ShadowState {
  // Each component lists the unresolved crossings it passes, in traversal
  // order; a component through no crossing is an empty list.
  std::vector<std::vector<int>> components;

  std::size_t component_count() const noexcept { return components.size(); }
  // Induced word of a single-component state; throws std::logic_error otherwise.
  GaussWord induced_word() const;
};

// Per-crossing action indexed by crossing index: -1 none, 0 oriented,
// 1 disoriented.
using ActionVector = std::vector<std::int8_t>;

ShadowState resolve_state(const GaussWord& w, const SpliceSpec& s);  // throws UnknownCrossing
ShadowState resolve_indexed(const GaussWord& w, std::span<const std::int8_t> action);
int count_components(const GaussWord& w, std::span<const std::int8_t> action);

int circle_number(const GaussWord& w);     // throws EmptyWord
int seifert_circles(const GaussWord& w);   // throws EmptyWord

// Single disoriented splice at one crossing: u a v a -> u reverse(v).
GaussWord disoriented_splice(const GaussWord& w, int label);

// Word 1 2 ... (2m+1) 1 2 ... (2m+1); throws std::invalid_argument for m < 1.
GaussWord make_torus_word(int m);

}  // namespace shadow
