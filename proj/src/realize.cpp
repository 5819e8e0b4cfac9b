#include "shadow/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace shadow {

namespace he = halfedge;

bool Face::distinct_vertices() const {
  std::vector<int> v;
  v.reserve(corners.size());
  for (const auto& c : corners) v.push_back(c.vertex);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::array<int, 4> vertex_rotation(const GaussWord& w, int vertex, bool flip) {
  const int len = static_cast<int>(w.size());
  auto [p, q] = w.occurrences_of_index(vertex);
  const int in_p = 2 * ((p + len - 1) % len) + 1;
  const int out_p = 2 * p;
  const int in_q = 2 * ((q + len - 1) % len) + 1;
  const int out_q = 2 * q;
  if (!flip) return {in_p, in_q, out_p, out_q};
  return {in_p, out_q, out_p, in_q};
}

namespace {

struct RotationTables {
  std::vector<std::array<int, 4>> rotation;
  std::vector<int> slot_of;    // per half-edge
  std::vector<int> vertex_of;  // per half-edge
};

RotationTables build_rotation(const GaussWord& w, std::uint32_t assignment) {
  const int n = w.crossings();
  RotationTables t;
  t.rotation.resize(n);
  t.slot_of.assign(w.size() * 2, -1);
  t.vertex_of.assign(w.size() * 2, -1);
  for (int v = 0; v < n; ++v) {
    t.rotation[v] = vertex_rotation(w, v, ((assignment >> v) & 1u) != 0);
    for (int s = 0; s < 4; ++s) {
      t.slot_of[t.rotation[v][s]] = s;
      t.vertex_of[t.rotation[v][s]] = v;
    }
  }
  return t;
}

// Faces are orbits of h -> sigma(alpha(h)): walk along the arc, then turn to
// the counter-clockwise successor at the far crossing.
template <typename Visit>
int trace_faces(const RotationTables& t, std::size_t half_edges, Visit&& visit) {
  std::vector<char> used(half_edges, 0);
  int faces = 0;
  for (std::size_t start = 0; start < half_edges; ++start) {
    if (used[start]) continue;
    int h = static_cast<int>(start);
    do {
      used[h] = 1;
      const int g = he::other_end(h);
      const int v = t.vertex_of[g];
      const int s = t.slot_of[g];
      const int next = t.rotation[v][(s + 1) & 3];
      visit(faces, Corner{v, s}, next);
      h = next;
    } while (h != static_cast<int>(start));
    ++faces;
  }
  return faces;
}

}  // namespace

int count_faces(const GaussWord& w, std::uint32_t assignment) {
  RotationTables t = build_rotation(w, assignment);
  return trace_faces(t, w.size() * 2, [](int, Corner, int) {});
}

EmbeddedShadow::EmbeddedShadow(GaussWord word, std::uint32_t assignment)
    : word_(std::move(word)), assignment_(assignment) {
  RotationTables t = build_rotation(word_, assignment_);
  rotation_ = std::move(t.rotation);
  slot_of_ = t.slot_of;
  const int n = word_.crossings();
  corner_face_.assign(n, {-1, -1, -1, -1});
  corner_pos_.assign(n, {-1, -1, -1, -1});
  RotationTables view{rotation_, slot_of_, t.vertex_of};
  trace_faces(view, word_.size() * 2, [&](int face, Corner c, int dart) {
    if (static_cast<int>(faces_.size()) <= face) faces_.emplace_back();
    Face& f = faces_[face];
    corner_face_[c.vertex][c.slot] = face;
    corner_pos_[c.vertex][c.slot] = f.size();
    f.corners.push_back(c);
    f.darts.push_back(dart);
  });
}

int EmbeddedShadow::vertex_of(int half_edge) const noexcept {
  return word_.index_at(he::position(half_edge, static_cast<int>(word_.size())));
}

std::string EmbeddedShadow::rotation_tag() const {
  std::string tag;
  for (int v = 0; v < vertices(); ++v) tag += ((assignment_ >> v) & 1u) ? '1' : '0';
  return tag;
}

bool passes_parity(const GaussWord& w) {
  Interlacement g(w);
  for (int k = 0; k < w.crossings(); ++k)
    if (g.degree_of_index(k) % 2 != 0) return false;
  return true;
}

std::vector<std::uint32_t> planar_assignments(const GaussWord& w) {
  const int n = w.crossings();
  if (n == 0) throw EmptyWord();
  if (n > 31) throw std::length_error("too many crossings for rotation search");
  std::vector<std::uint32_t> out;
  const std::uint32_t count = 1u << (n - 1);
  for (std::uint32_t a = 0; a < count; ++a) {
    const std::uint32_t assignment = a << 1;  // vertex 0 fixed
    if (n - 2 * n + count_faces(w, assignment) == 2) out.push_back(assignment);
  }
  return out;
}

namespace {

// Lexicographic order on (b_0, b_1, ..., b_{n-1}) with b_0 = 0 fixed.
std::uint32_t assignment_from_rank(std::uint32_t rank, int n) {
  std::uint32_t a = 0;
  for (int v = 1; v < n; ++v)
    if ((rank >> (n - 1 - v)) & 1u) a |= 1u << v;
  return a;
}

}  // namespace

Realization check_realizable(const GaussWord& w) {
  const int n = w.crossings();
  if (n == 0) throw EmptyWord();
  if (n > 31) throw std::length_error("too many crossings for rotation search");
  {
    Interlacement g(w);
    for (int k = 0; k < n; ++k) {
      if (g.degree_of_index(k) % 2 != 0)
        return Refusal{RefusalReason::parity,
                       "crossing " + std::to_string(w.labels()[k]) + " has odd interlacement degree " +
                           std::to_string(g.degree_of_index(k))};
    }
  }
  const std::uint32_t count = 1u << (n - 1);
  for (std::uint32_t rank = 0; rank < count; ++rank) {
    const std::uint32_t assignment = assignment_from_rank(rank, n);
    if (count_faces(w, assignment) == n + 2) return EmbeddedShadow(w, assignment);
  }
  return Refusal{RefusalReason::no_planar_rotation,
                 "no genus-0 rotation among " + std::to_string(count) + " assignments"};
}

bool is_realizable(const GaussWord& w) {
  return std::holds_alternative<EmbeddedShadow>(check_realizable(w));
}

namespace {

using Matching = std::vector<std::pair<int, int>>;

Matching normalized(Matching m) {
  for (auto& [a, b] : m)
    if (a > b) std::swap(a, b);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

std::string trigon_signature(const EmbeddedShadow& e, int face) {
  const Face& f = e.faces().at(face);
  if (f.size() != 3 || !f.distinct_vertices())
    throw std::invalid_argument("face is not a 3-gon");
  const int len = static_cast<int>(e.word().size());
  // outer end id = 2*corner + (0: continues the incoming edge, 1: the outgoing)
  std::map<int, int> end_of;
  for (int i = 0; i < 3; ++i) {
    const auto& rot = e.rotation(f.corners[i].vertex);
    const int k = f.corners[i].slot;
    end_of[rot[(k + 2) & 3]] = 2 * i;
    end_of[rot[(k + 3) & 3]] = 2 * i + 1;
  }
  Matching m;
  for (const auto& [h, id] : end_of) {
    int g = he::other_end(h);
    while (!end_of.count(g)) g = he::other_end(he::through(g, len));
    if (id < end_of[g]) m.emplace_back(id, end_of[g]);
  }
  return trigon_class_of(std::move(m));
}

std::string trigon_class_of(std::vector<std::pair<int, int>> m) {
  Matching best;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int r = 0; r < 3; ++r) {
      auto map_end = [&](int x) {
        int i = x / 2, j = x % 2;
        if (reflect) {
          i = (3 - i) % 3;
          j = 1 - j;
        }
        return 2 * ((i + r) % 3) + j;
      };
      Matching img;
      for (auto [a, b] : m) img.emplace_back(map_end(a), map_end(b));
      img = normalized(std::move(img));
      if (best.empty() || img < best) best = img;
    }
  }
  std::string sig = "T";
  for (auto [a, b] : best) sig += ":" + std::to_string(a) + std::to_string(b);
  return sig;
}

FaceCensus face_census(const EmbeddedShadow& e) {
  FaceCensus c;
  c.faces = static_cast<int>(e.faces().size());
  for (int fi = 0; fi < c.faces; ++fi) {
    const Face& f = e.faces()[fi];
    if (f.size() == 1) {
      ++c.monogons;
      continue;
    }
    if (!f.distinct_vertices()) {
      ++c.repeated_vertex_faces;
      continue;
    }
    switch (f.size()) {
      case 2: {
        // Walking the boundary, a dart leaving through a tail follows the
        // curve's direction; equal directions mean the edges run head-to-tail.
        const bool first = !he::is_head(f.darts[0]);
        const bool second = !he::is_head(f.darts[1]);
        if (first == second)
          ++c.coherent_bigons;
        else
          ++c.incoherent_bigons;
        break;
      }
      case 3:
        c.trigon_classes.push_back(trigon_signature(e, fi));
        break;
      default:
        ++c.larger[f.size()];
    }
  }
  std::sort(c.trigon_classes.begin(), c.trigon_classes.end());
  return c;
}

}  // namespace shadow
