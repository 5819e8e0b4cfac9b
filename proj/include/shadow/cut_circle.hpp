#pragma once

// Simple closed curves on the sphere that meet a shadow only in m of its
// double points, passing through each of them between opposite corners.

#include <array>
#include <string>
#include <vector>

#include "shadow/realize.hpp"
#include "shadow/reductivity.hpp"
#include "shadow/splice.hpp"

namespace shadow {

struct CutCircle {
  // Crossing indices in circle order; the circle enters vertices[i] through
  // corner entry_slots[i] and leaves through the opposite corner.
  std::vector<int> vertices;
  std::vector<int> entry_slots;
  // faces[i] is the face crossed before reaching vertices[i].
  std::vector<int> faces;
  // Crossing labels strictly inside each side (side 0 lies to the right of
  // the direction of travel).
  std::array<std::vector<int>, 2> sides;

  int size() const noexcept { return static_cast<int>(vertices.size()); }
};

struct PatternClass {
  std::string signature;
  friend bool operator==(const PatternClass&, const PatternClass&) = default;
  friend auto operator<=>(const PatternClass&, const PatternClass&) = default;
};

// All cut circles through exactly m distinct double points, up to choice of
// start and direction, sorted by (vertices, entry_slots). m must be 2 or 3.
std::vector<CutCircle> find_cut_circles(const EmbeddedShadow& e, int m);

// How the 2m strands cut out by the circle reconnect its 4m branch ends on
// each side, canonical under rotation and reversal of the circle and swapping
// of the two sides.
PatternClass pattern_class(const CutCircle& c, const EmbeddedShadow& e);

// Splice at vertices[i] that opens the circle's two corners there, so the
// spliced curve no longer meets the circle at that point. Type is relative to
// the word's orientation.
Splice side_separating_splice(const CutCircle& c, const EmbeddedShadow& e, int i);

// Witness of size `budget` in which all but one circle vertex receive their
// side-separating splice, the remaining vertex ends up nugatory and any other
// splices lie off the circle. Only meaningful for circles of size <= budget+1.
struct CircleSupport {
  bool supported = false;
  int kept_vertex = -1;        // label
  SpliceSpec witness;          // t, y, i (types relative to the input word)
  std::vector<int> sequence;   // r
};

CircleSupport circle_support(const CutCircle& c, const EmbeddedShadow& e, ReductivityKind kind,
                             int budget);

}  // namespace shadow
