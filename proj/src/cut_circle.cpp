#include "shadow/cut_circle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace shadow {

namespace he = halfedge;

namespace {

struct Search {
  const EmbeddedShadow& e;
  int m;
  std::vector<int> verts;
  std::vector<int> slots;
  std::vector<char> used;
  std::vector<CutCircle> out;

  int exit_face(std::size_t i) const { return e.face_of({verts[i], (slots[i] + 2) & 3}); }
  int entry_face(std::size_t i) const { return e.face_of({verts[i], slots[i]}); }

  // Arcs of the circle drawn inside the same face must not cross.
  bool chords_disjoint() const {
    std::map<int, std::vector<std::pair<int, int>>> by_face;
    for (int i = 0; i < m; ++i) {
      const int j = (i + 1) % m;
      Corner from{verts[i], (slots[i] + 2) & 3};
      Corner to{verts[j], slots[j]};
      int a = e.corner_position(from), b = e.corner_position(to);
      if (a > b) std::swap(a, b);
      by_face[e.face_of(to)].emplace_back(a, b);
    }
    for (const auto& [face, chords] : by_face) {
      for (std::size_t x = 0; x < chords.size(); ++x) {
        for (std::size_t y = x + 1; y < chords.size(); ++y) {
          auto [a, b] = chords[x];
          auto [c, d] = chords[y];
          const bool c_in = a < c && c < b;
          const bool d_in = a < d && d < b;
          if (c_in != d_in) return false;
        }
      }
    }
    return true;
  }

  bool forward_is_canonical() const {
    std::vector<std::pair<int, int>> fwd, rev;
    for (int i = 0; i < m; ++i) fwd.emplace_back(verts[i], slots[i]);
    rev.emplace_back(verts[0], (slots[0] + 2) & 3);
    for (int i = m - 1; i >= 1; --i) rev.emplace_back(verts[i], (slots[i] + 2) & 3);
    return fwd < rev;
  }

  void dfs() {
    const int depth = static_cast<int>(verts.size());
    const int face = exit_face(depth - 1);
    if (depth == m) {
      if (face == entry_face(0) && chords_disjoint() && forward_is_canonical()) emit();
      return;
    }
    for (const Corner& c : e.faces()[face].corners) {
      if (c.vertex <= verts[0] || used[c.vertex]) continue;
      verts.push_back(c.vertex);
      slots.push_back(c.slot);
      used[c.vertex] = 1;
      dfs();
      used[c.vertex] = 0;
      verts.pop_back();
      slots.pop_back();
    }
  }

  void emit() {
    CutCircle c;
    c.vertices = verts;
    c.entry_slots = slots;
    for (int i = 0; i < m; ++i) c.faces.push_back(entry_face(i));
    out.push_back(std::move(c));
  }
};

// Branch end ids: 4*i + 2*side + j. Side 0 holds rotation[k+1], rotation[k+2]
// (swept from the entry corner k to the exit corner), side 1 holds
// rotation[k], rotation[k+3]; j = 0 for the branch next to the entry corner.
std::map<int, int> branch_ends(const CutCircle& c, const EmbeddedShadow& e) {
  std::map<int, int> end_of;
  for (int i = 0; i < c.size(); ++i) {
    const auto& rot = e.rotation(c.vertices[i]);
    const int k = c.entry_slots[i];
    end_of[rot[(k + 1) & 3]] = 4 * i + 0;
    end_of[rot[(k + 2) & 3]] = 4 * i + 1;
    end_of[rot[k]] = 4 * i + 2;
    end_of[rot[(k + 3) & 3]] = 4 * i + 3;
  }
  return end_of;
}

struct Strands {
  std::vector<std::pair<int, int>> matching;
  std::array<std::vector<int>, 2> sides;
};

Strands trace_strands(const CutCircle& c, const EmbeddedShadow& e) {
  const int len = static_cast<int>(e.word().size());
  const auto end_of = branch_ends(c, e);
  Strands s;
  for (const auto& [h, id] : end_of) {
    const int side = (id / 2) % 2;
    int g = he::other_end(h);
    while (!end_of.count(g)) {
      s.sides[side].push_back(e.word().labels()[e.vertex_of(g)]);
      g = he::other_end(he::through(g, len));
    }
    const int other = end_of.at(g);
    if ((other / 2) % 2 != side)
      throw std::logic_error("strand leaves its side of a cut circle");
    if (id < other) s.matching.emplace_back(id, other);
  }
  for (auto& side : s.sides) {
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
  }
  return s;
}

bool nugatory_label(const GaussWord& w, int label) {
  if (!w.has_label(label)) return false;
  Interlacement g(w);
  return g.degree(label) == 0;
}

}  // namespace

std::vector<CutCircle> find_cut_circles(const EmbeddedShadow& e, int m) {
  if (m != 2 && m != 3) throw std::invalid_argument("cut circles are searched for m = 2 or 3");
  const int n = e.vertices();
  if (m > n) return {};
  Search s{e, m, {}, {}, std::vector<char>(n, 0), {}};
  for (int v0 = 0; v0 < n; ++v0) {
    for (int k0 = 0; k0 < 4; ++k0) {
      s.verts = {v0};
      s.slots = {k0};
      s.used[v0] = 1;
      s.dfs();
      s.used[v0] = 0;
    }
  }
  std::sort(s.out.begin(), s.out.end(), [](const CutCircle& a, const CutCircle& b) {
    return std::tie(a.vertices, a.entry_slots) < std::tie(b.vertices, b.entry_slots);
  });
  for (auto& c : s.out) c.sides = trace_strands(c, e).sides;
  return std::move(s.out);
}

PatternClass pattern_class(const CutCircle& c, const EmbeddedShadow& e) {
  const int m = c.size();
  const auto matching = trace_strands(c, e).matching;
  std::vector<std::pair<int, int>> best;
  for (int reverse = 0; reverse < 2; ++reverse) {
    for (int swap_sides = 0; swap_sides < 2; ++swap_sides) {
      for (int r = 0; r < m; ++r) {
        auto map_end = [&](int x) {
          int i = x / 4, side = (x / 2) % 2, j = x % 2;
          if (reverse) {
            i = (m - i) % m;
            side ^= 1;
            j ^= 1;
          }
          if (swap_sides) side ^= 1;
          return 4 * ((i + r) % m) + 2 * side + j;
        };
        std::vector<std::pair<int, int>> img;
        for (auto [a, b] : matching) {
          int x = map_end(a), y = map_end(b);
          img.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = std::move(img);
      }
    }
  }
  std::string sig = "C" + std::to_string(m);
  for (auto [a, b] : best) sig += ":" + std::to_string(a) + "-" + std::to_string(b);
  return {sig};
}

Splice side_separating_splice(const CutCircle& c, const EmbeddedShadow& e, int i) {
  const auto& rot = e.rotation(c.vertices.at(i));
  const int k = c.entry_slots[i];
  const bool a_in = he::is_head(rot[(k + 1) & 3]);
  const bool b_in = he::is_head(rot[(k + 2) & 3]);
  return a_in == b_in ? Splice::disoriented : Splice::oriented;
}

namespace {

bool kind_allows(ReductivityKind kind, Splice s) {
  switch (kind) {
    case ReductivityKind::y: return s == Splice::disoriented;
    case ReductivityKind::i: return s == Splice::oriented;
    default: return true;
  }
}

// Replays a recursive sequence in which circle vertices carry a fixed
// geometric splice (given relative to the input orientation) and every step
// must be disoriented relative to the curve at that moment.
bool recursive_sequence_works(const GaussWord& w, const std::vector<int>& order,
                              const std::map<int, Splice>& fixed, int keep_label) {
  GaussWord current = w;
  std::map<int, bool> flipped;
  for (int label : current.labels()) flipped[label] = false;
  for (int label : order) {
    auto it = fixed.find(label);
    if (it != fixed.end()) {
      const bool disoriented_now = (it->second == Splice::disoriented) != flipped[label];
      if (!disoriented_now) return false;
    }
    Interlacement g(current);
    for (int other : current.labels())
      if (other != label && g.adjacent(label, other)) flipped[other] = !flipped[other];
    current = disoriented_splice(current, label);
  }
  return nugatory_label(current, keep_label);
}

}  // namespace

CircleSupport circle_support(const CutCircle& c, const EmbeddedShadow& e, ReductivityKind kind,
                             int budget) {
  const GaussWord& w = e.word();
  const int m = c.size();
  const int n = w.crossings();
  std::vector<char> on_circle(n, 0);
  for (int v : c.vertices) on_circle[v] = 1;
  std::vector<int> off;
  for (int v = 0; v < n; ++v)
    if (!on_circle[v]) off.push_back(v);

  CircleSupport result;
  for (int keep = 0; keep < m; ++keep) {
    const int extras = budget - (m - 1);
    if (extras < 0 || extras > static_cast<int>(off.size())) continue;
    std::map<int, Splice> fixed;
    bool allowed = true;
    for (int j = 0; j < m; ++j) {
      if (j == keep) continue;
      const Splice s = side_separating_splice(c, e, j);
      if (kind != ReductivityKind::r && !kind_allows(kind, s)) allowed = false;
      fixed[w.labels()[c.vertices[j]]] = s;
    }
    if (!allowed) continue;
    const int keep_label = w.labels()[c.vertices[keep]];

    std::vector<int> pick(extras);
    for (int j = 0; j < extras; ++j) pick[j] = j;
    while (true) {
      std::vector<int> extra_labels;
      for (int j : pick) extra_labels.push_back(w.labels()[off[j]]);
      if (kind == ReductivityKind::r) {
        std::vector<int> order;
        for (const auto& [label, s] : fixed) order.push_back(label);
        order.insert(order.end(), extra_labels.begin(), extra_labels.end());
        std::sort(order.begin(), order.end());
        do {
          if (recursive_sequence_works(w, order, fixed, keep_label)) {
            result.supported = true;
            result.kept_vertex = keep_label;
            result.sequence = order;
            return result;
          }
        } while (std::next_permutation(order.begin(), order.end()));
      } else {
        const std::uint32_t type_count =
            kind == ReductivityKind::t ? (1u << extras) : 1u;
        for (std::uint32_t types = 0; types < type_count; ++types) {
          ActionVector action(n, -1);
          SpliceSpec spec;
          for (const auto& [label, s] : fixed) {
            action[w.index_of(label)] = s == Splice::oriented ? 0 : 1;
            spec.assign(label, s);
          }
          for (int j = 0; j < extras; ++j) {
            Splice s = kind == ReductivityKind::y   ? Splice::disoriented
                       : kind == ReductivityKind::i ? Splice::oriented
                       : ((types >> (extras - 1 - j)) & 1u) ? Splice::disoriented
                                                            : Splice::oriented;
            action[w.index_of(extra_labels[j])] = s == Splice::oriented ? 0 : 1;
            spec.assign(extra_labels[j], s);
          }
          if (count_components(w, action) != 1) continue;
          ShadowState st = resolve_indexed(w, action);
          if (nugatory_label(st.induced_word(), keep_label)) {
            result.supported = true;
            result.kept_vertex = keep_label;
            result.witness = spec;
            return result;
          }
        }
      }
      int j = extras - 1;
      while (j >= 0 && pick[j] == static_cast<int>(off.size()) - extras + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int l = j + 1; l < extras; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
  return result;
}

}  // namespace shadow
