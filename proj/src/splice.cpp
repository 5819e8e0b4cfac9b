#include "shadow/splice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "shadow/realize.hpp"

namespace shadow {

namespace he = halfedge;

SpliceSpec::SpliceSpec(std::initializer_list<std::pair<int, Splice>> items) {
  for (auto [label, type] : items) assign(label, type);
}

void SpliceSpec::assign(int label, Splice type) {
  auto it = std::lower_bound(items_.begin(), items_.end(), label,
                             [](const auto& item, int l) { return item.first < l; });
  if (it != items_.end() && it->first == label)
    throw std::invalid_argument("crossing " + std::to_string(label) + " assigned twice");
  items_.insert(it, {label, type});
}

std::string SpliceSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(items_[i].first);
    out += splice_code(items_[i].second);
  }
  return out;
}

SpliceSpec SpliceSpec::parse(const std::string& text) {
  SpliceSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    const char code = item.back();
    if (code != 'o' && code != 'd')
      throw std::invalid_argument("splice item '" + item + "' must end in o or d");
    const std::string digits = item.substr(0, item.size() - 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("splice item '" + item + "' has no crossing label");
    spec.assign(std::stoi(digits), code == 'o' ? Splice::oriented : Splice::disoriented);
  }
  return spec;
}

GaussWord ShadowState::induced_word() const {
  if (components.size() != 1) throw std::logic_error("state has more than one component");
  return GaussWord(components.front());
}

namespace {

// Half-edge joined to h at its crossing under the given action.
inline int partner(const GaussWord& w, int h, int len, std::span<const std::int8_t> action) {
  const int pos = he::position(h, len);
  const int k = w.index_at(pos);
  const std::int8_t a = action[k];
  if (a < 0) return he::through(h, len);
  auto [p, q] = w.occurrences_of_index(k);
  const int other = pos == p ? q : p;
  const bool incoming = he::is_head(h);
  // oriented: in -> out of the other passage; disoriented: in <-> in, out <-> out
  const bool to_incoming = (a == 0) ? !incoming : incoming;
  return to_incoming ? 2 * ((other + len - 1) % len) + 1 : 2 * other;
}

template <typename Emit, typename Close>
void traverse(const GaussWord& w, std::span<const std::int8_t> action, Emit&& emit, Close&& close) {
  const int len = static_cast<int>(w.size());
  std::vector<char> arc_seen(len, 0);
  for (int start_arc = 0; start_arc < len; ++start_arc) {
    if (arc_seen[start_arc]) continue;
    const int start = 2 * start_arc;
    int h = start;
    do {
      arc_seen[he::arc(h)] = 1;
      const int g = he::other_end(h);
      const int k = w.index_at(he::position(g, len));
      if (action[k] < 0) emit(w.labels()[k]);
      h = partner(w, g, len, action);
    } while (h != start);
    close();
  }
}

}  // namespace

ShadowState resolve_indexed(const GaussWord& w, std::span<const std::int8_t> action) {
  ShadowState state;
  std::vector<int> current;
  traverse(
      w, action, [&](int label) { current.push_back(label); },
      [&] {
        state.components.push_back(std::move(current));
        current.clear();
      });
  return state;
}

int count_components(const GaussWord& w, std::span<const std::int8_t> action) {
  int count = 0;
  traverse(w, action, [](int) {}, [&] { ++count; });
  return count;
}

ShadowState resolve_state(const GaussWord& w, const SpliceSpec& s) {
  ActionVector action(w.crossings(), -1);
  for (auto [label, type] : s.items())
    action[w.index_of(label)] = type == Splice::oriented ? 0 : 1;
  return resolve_indexed(w, action);
}

int circle_number(const GaussWord& w) {
  if (w.crossings() == 0) throw EmptyWord();
  ActionVector action(w.crossings(), 1);
  return count_components(w, action);
}

int seifert_circles(const GaussWord& w) {
  if (w.crossings() == 0) throw EmptyWord();
  ActionVector action(w.crossings(), 0);
  return count_components(w, action);
}

GaussWord disoriented_splice(const GaussWord& w, int label) {
  auto [p, q] = w.occurrences(label);
  auto letters = w.letters();
  // rotate so the word reads a v a u, then emit u reverse(v)
  std::vector<int> out;
  out.reserve(w.size() - 2);
  const int len = static_cast<int>(w.size());
  for (int i = q + 1; i < q + 1 + (len - (q - p) - 1); ++i) out.push_back(letters[i % len]);
  for (int i = q - 1; i > p; --i) out.push_back(letters[i]);
  return GaussWord(std::move(out));
}

GaussWord make_torus_word(int m) {
  if (m < 1) throw std::invalid_argument("torus parameter m must be at least 1");
  const int k = 2 * m + 1;
  std::vector<int> letters;
  letters.reserve(2 * k);
  for (int rep = 0; rep < 2; ++rep)
    for (int i = 1; i <= k; ++i) letters.push_back(i);
  return GaussWord(std::move(letters));
}

}  // namespace shadow
