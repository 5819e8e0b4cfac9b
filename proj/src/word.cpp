#include "shadow/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace shadow {

GaussWord::GaussWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.size() % 2 != 0)
    throw MalformedWord("odd number of letters (" + std::to_string(letters_.size()) + ")");
  std::map<int, std::vector<int>> seen;
  for (std::size_t pos = 0; pos < letters_.size(); ++pos) {
    if (letters_[pos] <= 0)
      throw MalformedWord("label " + std::to_string(letters_[pos]) + " is not positive");
    seen[letters_[pos]].push_back(static_cast<int>(pos));
  }
  labels_.reserve(seen.size());
  occ_.reserve(seen.size());
  for (const auto& [label, where] : seen) {
    if (where.size() != 2)
      throw MalformedWord("label " + std::to_string(label) + " occurs " +
                          std::to_string(where.size()) + " times");
    labels_.push_back(label);
    occ_.emplace_back(where[0], where[1]);
  }
  index_at_.resize(letters_.size());
  for (std::size_t k = 0; k < occ_.size(); ++k) {
    index_at_[occ_[k].first] = static_cast<int>(k);
    index_at_[occ_[k].second] = static_cast<int>(k);
  }
}

int GaussWord::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw UnknownCrossing(label);
  return static_cast<int>(it - labels_.begin());
}

bool GaussWord::has_label(int label) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::string GaussWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

GaussWord GaussWord::reversed() const {
  return GaussWord(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

bool operator==(const GaussWord& a, const GaussWord& b) {
  if (a.size() != b.size()) return false;
  return canonical_letters(a.letters()) == canonical_letters(b.letters());
}

GaussWord parse_word(std::string_view text) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value <= 0)
      throw MalformedWord("bad token '" + std::string(token) + "'");
    letters.push_back(value);
    i = j;
  }
  return GaussWord(std::move(letters));
}

namespace {

// Compares the first-occurrence relabeling of the rotation starting at
// `start` in direction `step` against `best`. Returns <0, 0, >0. When the
// candidate is smaller, it is written into `best`.
int relabel_compare(std::span<const int> letters, int max_label, std::size_t start, int step,
                    std::vector<int>& best, std::vector<int>& scratch, bool write) {
  const std::size_t len = letters.size();
  std::fill(scratch.begin(), scratch.begin() + max_label + 1, 0);
  int next = 1;
  int cmp = 0;
  std::size_t pos = start;
  for (std::size_t i = 0; i < len; ++i) {
    int& slot = scratch[letters[pos]];
    if (slot == 0) slot = next++;
    if (cmp == 0) {
      if (slot < best[i]) {
        cmp = -1;
        if (!write) return -1;
      } else if (slot > best[i]) {
        return 1;
      }
    }
    if (cmp < 0) best[i] = slot;
    pos = step > 0 ? (pos + 1 == len ? 0 : pos + 1) : (pos == 0 ? len - 1 : pos - 1);
  }
  return cmp;
}

}  // namespace

std::vector<int> canonical_letters(std::span<const int> letters) {
  const std::size_t len = letters.size();
  if (len == 0) return {};
  int max_label = *std::max_element(letters.begin(), letters.end());
  std::vector<int> scratch(static_cast<std::size_t>(max_label) + 1);
  std::vector<int> best(len, 0);
  {
    std::fill(scratch.begin(), scratch.end(), 0);
    int next = 1;
    for (std::size_t i = 0; i < len; ++i) {
      int& slot = scratch[letters[i]];
      if (slot == 0) slot = next++;
      best[i] = slot;
    }
  }
  for (int step : {+1, -1}) {
    for (std::size_t start = 0; start < len; ++start) {
      if (step > 0 && start == 0) continue;
      relabel_compare(letters, max_label, start, step, best, scratch, true);
    }
  }
  return best;
}

bool is_canonical_letters(std::span<const int> letters) {
  const std::size_t len = letters.size();
  if (len == 0) return true;
  int max_label = *std::max_element(letters.begin(), letters.end());
  std::vector<int> scratch(static_cast<std::size_t>(max_label) + 1);
  std::vector<int> self(letters.begin(), letters.end());
  {
    std::fill(scratch.begin(), scratch.end(), 0);
    int next = 1;
    for (std::size_t i = 0; i < len; ++i) {
      int& slot = scratch[letters[i]];
      if (slot == 0) slot = next++;
      if (slot != letters[i]) return false;
    }
  }
  for (int step : {+1, -1}) {
    for (std::size_t start = 0; start < len; ++start) {
      if (step > 0 && start == 0) continue;
      if (relabel_compare(letters, max_label, start, step, self, scratch, false) < 0) return false;
    }
  }
  return true;
}

GaussWord canonical_form(const GaussWord& w) { return GaussWord(canonical_letters(w.letters())); }

GaussWord restrict_to(const GaussWord& w, std::span<const int> labels) {
  std::vector<int> keep(labels.begin(), labels.end());
  std::sort(keep.begin(), keep.end());
  for (int l : keep)
    if (!w.has_label(l)) throw UnknownCrossing(l);
  std::vector<int> out;
  out.reserve(keep.size() * 2);
  for (int l : w.letters())
    if (std::binary_search(keep.begin(), keep.end(), l)) out.push_back(l);
  return GaussWord(std::move(out));
}

Interlacement::Interlacement(const GaussWord& w)
    : n_(w.crossings()),
      labels_(w.labels().begin(), w.labels().end()),
      adj_(static_cast<std::size_t>(n_) * n_, 0),
      degree_(n_, 0) {
  // b interlaces a iff exactly one occurrence of b lies strictly inside a's
  // interval.
  std::vector<int> inside(n_);
  for (int a = 0; a < n_; ++a) {
    auto [p, q] = w.occurrences_of_index(a);
    std::fill(inside.begin(), inside.end(), 0);
    for (int pos = p + 1; pos < q; ++pos) ++inside[w.index_at(pos)];
    for (int b = 0; b < n_; ++b) {
      if (b != a && inside[b] == 1) {
        adj_[a * n_ + b] = 1;
        ++degree_[a];
      }
    }
  }
}

int Interlacement::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw UnknownCrossing(label);
  return static_cast<int>(it - labels_.begin());
}

bool Interlacement::adjacent(int a, int b) const {
  return adjacent_indices(index_of(a), index_of(b));
}

int Interlacement::degree(int label) const { return degree_[index_of(label)]; }

std::vector<std::pair<int, int>> Interlacement::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (adj_[a * n_ + b]) out.emplace_back(labels_[a], labels_[b]);
  return out;
}

Reducibility is_reducible(const GaussWord& w) {
  if (w.crossings() == 0) throw EmptyWord();
  Interlacement g(w);
  Reducibility out;
  for (int k = 0; k < w.crossings(); ++k)
    if (g.degree_of_index(k) == 0) out.nugatory.push_back(w.labels()[k]);
  out.reducible = !out.nugatory.empty();
  return out;
}

bool has_nugatory(const GaussWord& w) {
  const int n = w.crossings();
  if (n == 0) return false;
  std::vector<int> inside(n);
  for (int a = 0; a < n; ++a) {
    auto [p, q] = w.occurrences_of_index(a);
    std::fill(inside.begin(), inside.end(), 0);
    for (int pos = p + 1; pos < q; ++pos) ++inside[w.index_at(pos)];
    bool isolated = true;
    for (int b = 0; b < n && isolated; ++b)
      if (inside[b] == 1) isolated = false;
    if (isolated) return true;
  }
  return false;
}

bool is_prime(const GaussWord& w) {
  if (w.crossings() == 0) throw EmptyWord();
  const int len = static_cast<int>(w.size());
  const int n = w.crossings();
  std::vector<int> count(n);
  // Interval [s, s+L) is closed iff no letter in it has exactly one
  // occurrence inside; track the number of half-present chords.
  for (int s = 0; s < len; ++s) {
    std::fill(count.begin(), count.end(), 0);
    int open = 0;
    for (int L = 1; L <= len - 2; ++L) {
      int k = w.index_at((s + L - 1) % len);
      if (++count[k] == 1)
        ++open;
      else
        --open;
      if (L >= 2 && open == 0) return false;
    }
  }
  return true;
}

bool contains_pattern(const GaussWord& w, const GaussWord& pattern) {
  const int k = pattern.crossings();
  const int n = w.crossings();
  if (k == 0) return true;
  if (k > n) return false;
  const std::vector<int> target = canonical_letters(pattern.letters());
  std::vector<int> choose(k);
  for (int i = 0; i < k; ++i) choose[i] = i;
  std::vector<int> labels(k);
  while (true) {
    for (int i = 0; i < k; ++i) labels[i] = w.labels()[choose[i]];
    if (canonical_letters(restrict_to(w, labels).letters()) == target) return true;
    int i = k - 1;
    while (i >= 0 && choose[i] == n - k + i) --i;
    if (i < 0) break;
    ++choose[i];
    for (int j = i + 1; j < k; ++j) choose[j] = choose[j - 1] + 1;
  }
  return false;
}

GaussWord triple_chord_pattern() { return GaussWord({1, 2, 3, 1, 2, 3}); }

}  // namespace shadow
