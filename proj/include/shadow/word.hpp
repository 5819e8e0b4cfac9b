#pragma once

// Double-occurrence (Gauss) words of spherical curves and the purely
// combinatorial operations on them: canonical forms, interlacement,
// reducibility, primality and sub-chord-diagram containment.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shadow {

class MalformedWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyWord : public std::invalid_argument {
 public:
  EmptyWord() : std::invalid_argument("word has no double points") {}
};

class UnknownCrossing : public std::invalid_argument {
 public:
  explicit UnknownCrossing(int label)
      : std::invalid_argument("unknown crossing " + std::to_string(label)), label_(label) {}
  int label() const noexcept { return label_; }

 private:
  int label_;
};

// Cyclic word in which every crossing label occurs exactly twice.
//
// Labels are arbitrary positive integers. Internally every label also has a
// dense index (its rank among the sorted labels) which the algorithms use
// for array addressing. Equality is equivalence under rotation, reversal and
// relabeling, i.e. equality of canonical forms.
class GaussWord {
 public:
  GaussWord() = default;

  // Throws MalformedWord unless every label occurs exactly twice.
  explicit GaussWord(std::vector<int> letters);

  std::span<const int> letters() const noexcept { return letters_; }
  int crossings() const noexcept { return static_cast<int>(labels_.size()); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Sorted distinct labels; labels()[k] is the label with index k.
  std::span<const int> labels() const noexcept { return labels_; }
  int index_of(int label) const;  // throws UnknownCrossing
  bool has_label(int label) const noexcept;

  // Dense crossing index at each position.
  int index_at(std::size_t pos) const noexcept { return index_at_[pos]; }
  // Positions p < q of the two occurrences of crossing index k.
  std::pair<int, int> occurrences_of_index(int k) const noexcept { return occ_[k]; }
  std::pair<int, int> occurrences(int label) const { return occ_[index_of(label)]; }

  std::string str() const;

  // Same word in the opposite traversal direction.
  GaussWord reversed() const;

  friend bool operator==(const GaussWord& a, const GaussWord& b);

 private:
  std::vector<int> letters_;
  std::vector<int> labels_;
  std::vector<int> index_at_;
  std::vector<std::pair<int, int>> occ_;
};

// Whitespace-separated positive integers.
GaussWord parse_word(std::string_view text);

// Lexicographically least first-occurrence relabeling over all rotations and
// both traversal directions. Labels of the result are 1..n.
GaussWord canonical_form(const GaussWord& w);
std::vector<int> canonical_letters(std::span<const int> letters);
bool is_canonical_letters(std::span<const int> letters);

// Sub-word on the given labels (order of occurrence preserved).
GaussWord restrict_to(const GaussWord& w, std::span<const int> labels);

class Interlacement {
 public:
  explicit Interlacement(const GaussWord& w);

  std::span<const int> labels() const noexcept { return labels_; }
  bool adjacent(int a, int b) const;
  int degree(int label) const;
  int degree_of_index(int k) const noexcept { return degree_[k]; }
  bool adjacent_indices(int a, int b) const noexcept { return adj_[a * n_ + b] != 0; }
  // Edges as label pairs (a < b), sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  std::vector<int> labels_;
  std::vector<char> adj_;
  std::vector<int> degree_;
  int index_of(int label) const;
};

struct Reducibility {
  bool reducible = false;
  std::vector<int> nugatory;  // sorted labels
};

// Nugatory crossings are exactly the chords with no interlaced partner.
// Throws EmptyWord for n = 0.
Reducibility is_reducible(const GaussWord& w);
bool has_nugatory(const GaussWord& w);  // false for n = 0

// Word-level primality: no proper cyclic interval closed under pairing whose
// complement is also non-empty. Throws EmptyWord for n = 0.
bool is_prime(const GaussWord& w);

// True iff some subset of w's chords restricts to a diagram equivalent to p.
bool contains_pattern(const GaussWord& w, const GaussWord& pattern);

GaussWord triple_chord_pattern();

}  // namespace shadow
