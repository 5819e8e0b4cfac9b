#pragma once

// Brute-force reference implementations that share no code with the library
// beyond GaussWord parsing. Plain vectors of letters throughout.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Letters = std::vector<int>;

inline std::vector<int> positions(const Letters& w, int x) {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(w.size()); ++p)
    if (w[p] == x) out.push_back(p);
  return out;
}

inline std::vector<int> labels(const Letters& w) {
  std::set<int> s(w.begin(), w.end());
  return {s.begin(), s.end()};
}

// x is nugatory when every other letter occurs an even number of times
// strictly between its two occurrences.
inline bool nugatory(const Letters& w, int x) {
  const auto p = positions(w, x);
  std::map<int, int> count;
  for (int k = p[0] + 1; k < p[1]; ++k) ++count[w[k]];
  for (const auto& [y, c] : count)
    if (c == 1) return false;
  return true;
}

inline bool reducible(const Letters& w) {
  for (int x : labels(w))
    if (nugatory(w, x)) return true;
  return false;
}

inline bool prime(const Letters& w) {
  const int len = static_cast<int>(w.size());
  for (int start = 0; start < len; ++start)
    for (int size = 2; size <= len - 2; ++size) {
      std::map<int, int> count;
      for (int k = 0; k < size; ++k) ++count[w[(start + k) % len]];
      bool closed = true;
      for (const auto& [y, c] : count) closed = closed && c == 2;
      if (closed) return false;
    }
  return true;
}

// Relabel by first occurrence.
inline Letters normalize(const Letters& w) {
  std::map<int, int> name;
  Letters out;
  for (int x : w) {
    auto it = name.find(x);
    if (it == name.end()) it = name.emplace(x, static_cast<int>(name.size()) + 1).first;
    out.push_back(it->second);
  }
  return out;
}

inline Letters canonical(const Letters& w) {
  Letters best;
  for (int dir = 0; dir < 2; ++dir) {
    Letters base = w;
    if (dir) std::reverse(base.begin(), base.end());
    for (std::size_t r = 0; r < base.size(); ++r) {
      Letters rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      auto c = normalize(rot);
      if (best.empty() || c < best) best = c;
    }
  }
  return best;
}

// Every first-occurrence-labeled double occurrence word with n letters.
inline void all_words(int n, const std::function<void(const Letters&)>& emit) {
  Letters w(2 * n, 0);
  std::function<void(int)> fill = [&](int next) {
    auto it = std::find(w.begin(), w.end(), 0);
    if (it == w.end()) {
      emit(w);
      return;
    }
    *it = next;
    for (auto jt = it + 1; jt != w.end(); ++jt)
      if (*jt == 0) {
        *jt = next;
        fill(next + 1);
        *jt = 0;
      }
    *it = 0;
  };
  fill(1);
}

// Port graph of a splice state. Node 2k is the tail of arc k (leaving
// position k), node 2k+1 its head (entering position k+1). action maps a
// label to 'o' or 'd'; absent labels pass straight through. Returns the
// letter sequence of every component.
inline std::vector<Letters> components(const Letters& w, const std::map<int, char>& action) {
  const int len = static_cast<int>(w.size());
  std::vector<int> link(2 * len);
  for (int x : labels(w)) {
    const auto p = positions(w, x);
    const int in_p = 2 * ((p[0] + len - 1) % len) + 1, out_p = 2 * p[0];
    const int in_q = 2 * ((p[1] + len - 1) % len) + 1, out_q = 2 * p[1];
    auto join = [&](int a, int b) {
      link[a] = b;
      link[b] = a;
    };
    auto it = action.find(x);
    if (it == action.end()) {
      join(in_p, out_p);
      join(in_q, out_q);
    } else if (it->second == 'o') {
      join(in_p, out_q);
      join(in_q, out_p);
    } else {
      join(in_p, in_q);
      join(out_p, out_q);
    }
  }
  auto letter_at = [&](int node) { return w[node & 1 ? (node / 2 + 1) % len : node / 2]; };
  std::vector<bool> seen(2 * len, false);
  std::vector<Letters> out;
  for (int s = 0; s < 2 * len; ++s) {
    if (seen[s]) continue;
    Letters comp;
    int cur = s;
    do {
      seen[cur] = true;
      const int a = cur ^ 1;
      seen[a] = true;
      const int x = letter_at(a);
      if (!action.count(x)) comp.push_back(x);
      cur = link[a];
    } while (cur != s);
    out.push_back(comp);
  }
  return out;
}

// Least number of simultaneous splices (types from `types`) giving one
// component with a crossing that is nugatory; every subset and every type
// assignment is tried. nullopt when nothing works.
inline std::optional<int> simultaneous(const Letters& w, const std::string& types) {
  if (reducible(w)) return 0;
  const auto ls = labels(w);
  const int n = static_cast<int>(ls.size());
  const int base = static_cast<int>(types.size()) + 1;
  int total = 1;
  for (int k = 0; k < n; ++k) total *= base;
  std::optional<int> best;
  for (int code = 1; code < total; ++code) {
    std::map<int, char> action;
    int c = code;
    for (int k = 0; k < n; ++k, c /= base)
      if (c % base) action[ls[k]] = types[c % base - 1];
    const int size = static_cast<int>(action.size());
    if (best && size >= *best) continue;
    const auto comps = components(w, action);
    if (comps.size() == 1 && !comps[0].empty() && reducible(comps[0])) best = size;
  }
  return best;
}

// u a v a -> u reverse(v)
inline Letters disoriented_splice(const Letters& w, int x) {
  const auto p = positions(w, x);
  Letters out(w.begin(), w.begin() + p[0]);
  out.insert(out.end(), w.rbegin() + static_cast<long>(w.size() - p[1]), w.rbegin() + static_cast<long>(w.size() - p[0] - 1));
  out.insert(out.end(), w.begin() + p[1] + 1, w.end());
  return out;
}

// Every sequence of rewrites up to `cap`, depth first, no deduplication.
inline std::optional<int> sequential(const Letters& w, int cap) {
  if (reducible(w)) return 0;
  std::function<bool(const Letters&, int)> reach = [&](const Letters& u, int depth) {
    for (int x : labels(u)) {
      const auto v = disoriented_splice(u, x);
      if (!v.empty() && reducible(v)) return true;
      if (depth > 1 && !v.empty() && reach(v, depth - 1)) return true;
    }
    return false;
  };
  for (int d = 1; d <= cap; ++d)
    if (reach(w, d)) return d;
  return std::nullopt;
}

}  // namespace oracle
