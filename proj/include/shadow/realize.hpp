#pragma once

// Spherical realization of Gauss words as 4-valent maps.
//
// The curve is cut into 2n directed arcs; arc k runs from position k to
// position k+1 (mod 2n). Half-edge 2k is the tail of arc k (the outgoing
// branch at position k) and half-edge 2k+1 its head (the incoming branch at
// position k+1). A rotation system lists, for each crossing, its four
// half-edges in counter-clockwise order with the two passages interleaved.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shadow/word.hpp"

namespace shadow {

struct Corner {
  int vertex = 0;  // crossing index
  int slot = 0;    // corner between rotation[slot] and rotation[slot+1]
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct Face {
  std::vector<Corner> corners;  // boundary walk order
  std::vector<int> darts;       // half-edge leaving each corner
  int size() const noexcept { return static_cast<int>(corners.size()); }
  bool distinct_vertices() const;
};

namespace halfedge {
inline int arc(int h) noexcept { return h >> 1; }
inline bool is_head(int h) noexcept { return (h & 1) != 0; }
inline int other_end(int h) noexcept { return h ^ 1; }
inline int position(int h, int len) noexcept { return is_head(h) ? ((h >> 1) + 1) % len : h >> 1; }
// Half-edge continuing the same branch straight through the crossing.
inline int through(int h, int len) noexcept {
  return is_head(h) ? 2 * (((h >> 1) + 1) % len) : 2 * (((h >> 1) + len - 1) % len) + 1;
}
}  // namespace halfedge

class EmbeddedShadow {
 public:
  EmbeddedShadow(GaussWord word, std::uint32_t assignment);

  const GaussWord& word() const noexcept { return word_; }
  std::uint32_t assignment() const noexcept { return assignment_; }
  const std::array<int, 4>& rotation(int vertex) const noexcept { return rotation_[vertex]; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  int face_of(Corner c) const noexcept { return corner_face_[c.vertex][c.slot]; }
  int corner_position(Corner c) const noexcept { return corner_pos_[c.vertex][c.slot]; }
  int vertex_of(int half_edge) const noexcept;
  int slot_of(int half_edge) const noexcept { return slot_of_[half_edge]; }

  int vertices() const noexcept { return word_.crossings(); }
  int edges() const noexcept { return static_cast<int>(word_.size()); }
  int euler_characteristic() const noexcept {
    return vertices() - edges() + static_cast<int>(faces_.size());
  }
  // Per-vertex rotation choice as a bit string, e.g. "0110".
  std::string rotation_tag() const;

 private:
  GaussWord word_;
  std::uint32_t assignment_;
  std::vector<std::array<int, 4>> rotation_;
  std::vector<int> slot_of_;
  std::vector<Face> faces_;
  std::vector<std::array<int, 4>> corner_face_;
  std::vector<std::array<int, 4>> corner_pos_;
};

// Rotation of a single vertex; bit 0 gives (in_p, in_q, out_p, out_q), bit 1
// gives (in_p, out_q, out_p, in_q).
std::array<int, 4> vertex_rotation(const GaussWord& w, int vertex, bool flip);

// Number of faces traced from the given rotation assignment.
int count_faces(const GaussWord& w, std::uint32_t assignment);

enum class RefusalReason { parity, no_planar_rotation };

struct Refusal {
  RefusalReason reason;
  std::string detail;
};

using Realization = std::variant<EmbeddedShadow, Refusal>;

// Throws EmptyWord for n = 0 and std::length_error beyond 31 crossings.
Realization check_realizable(const GaussWord& w);
bool is_realizable(const GaussWord& w);
// Every chord has an even number of interlaced partners.
bool passes_parity(const GaussWord& w);

// Every assignment (with vertex 0 fixed) whose face count gives genus 0.
std::vector<std::uint32_t> planar_assignments(const GaussWord& w);

struct FaceCensus {
  int faces = 0;
  int monogons = 0;
  int coherent_bigons = 0;
  int incoherent_bigons = 0;
  std::vector<std::string> trigon_classes;  // one raw signature per 3-gon, sorted
  std::map<int, int> larger;                // k-gons with k >= 4 and distinct vertices
  int repeated_vertex_faces = 0;            // faces that revisit a double point

  int bigons() const noexcept { return coherent_bigons + incoherent_bigons; }
  int trigons() const noexcept { return static_cast<int>(trigon_classes.size()); }
  friend bool operator==(const FaceCensus&, const FaceCensus&) = default;
};

FaceCensus face_census(const EmbeddedShadow& e);

// Connection signature of a 3-gon: how its six outer branch ends pair up
// through the rest of the curve, minimized over the dihedral symmetries of the
// triangle.
std::string trigon_signature(const EmbeddedShadow& e, int face);

// Canonical signature of a matching on the six outer ends, numbered
// 2*corner + (0: continues the incoming edge, 1: continues the outgoing edge).
std::string trigon_class_of(std::vector<std::pair<int, int>> matching);

}  // namespace shadow
