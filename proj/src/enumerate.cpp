#include "shadow/enumerate.hpp"

#include <omp.h>

#include <algorithm>

#include "shadow/realize.hpp"

namespace shadow {

void set_jobs(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

namespace {

class Generator {
 public:
  Generator(int n, Filters filters)
      : n_(n), len_(2 * n), filters_(filters), letters_(len_, 0), first_(n + 1, -1),
        closed_(n + 1, 0), scratch_(n + 2, 0) {}

  // Replays a prefix produced by prefixes(); returns false if it is pruned.
  bool load(const std::vector<int>& prefix) {
    for (int x : prefix)
      if (!place(x)) return false;
    return true;
  }

  std::vector<std::vector<int>> prefixes(int depth) {
    std::vector<std::vector<int>> out;
    walk(depth, [&] { out.emplace_back(letters_.begin(), letters_.begin() + pos_); });
    return out;
  }

  void run(std::vector<GaussWord>& out) {
    walk(len_, [&] {
      if (!is_canonical_letters(letters_)) return;
      GaussWord w(letters_);
      if (filters_.prime && !is_prime(w)) return;
      if (!is_realizable(w)) return;
      out.push_back(std::move(w));
    });
  }

 private:
  int n_, len_;
  Filters filters_;
  std::vector<int> letters_;
  std::vector<int> first_;
  std::vector<char> closed_;
  std::vector<int> scratch_;
  int pos_ = 0;
  int next_label_ = 1;
  int open_ = 0;

  template <typename Leaf>
  void walk(int depth, Leaf&& leaf) {
    if (pos_ == depth) {
      leaf();
      return;
    }
    // close an open chord (ascending), then open a new one
    for (int l = 1; l < next_label_; ++l) {
      if (first_[l] < 0 || closed_[l]) continue;
      if (place(l)) walk(depth, leaf);
      unplace();
    }
    if (next_label_ <= n_ && len_ - pos_ - 1 >= open_ + 1) {
      if (place(next_label_)) walk(depth, leaf);
      unplace();
    }
  }

  // Always records the letter (so unplace() can undo it); returns false when
  // the resulting prefix cannot lead to an accepted word.
  bool place(int x) {
    letters_[pos_] = x;
    ++pos_;
    if (first_[x] < 0) {
      first_[x] = pos_ - 1;
      ++next_label_;
      ++open_;
      return prefix_canonical();
    }
    closed_[x] = 1;
    --open_;
    const int degree = closing_degree(first_[x], pos_ - 1);
    if (degree % 2 != 0) return false;
    if (filters_.reduced && degree == 0) return false;
    return prefix_canonical();
  }

  void unplace() {
    --pos_;
    const int x = letters_[pos_];
    if (first_[x] == pos_) {
      first_[x] = -1;
      --next_label_;
      --open_;
    } else {
      closed_[x] = 0;
      ++open_;
    }
  }

  int closing_degree(int p, int q) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (int i = p + 1; i < q; ++i) ++scratch_[letters_[i]];
    int degree = 0;
    for (int l = 1; l < next_label_; ++l) degree += scratch_[l] == 1;
    return degree;
  }

  // A rotation or reflection whose first letters all lie in the prefix and
  // relabel to something smaller proves the prefix non-canonical.
  bool prefix_canonical() {
    const int k = pos_;
    for (int s = 1; s < k; ++s) {
      if (window_compare(s, +1, k - s) < 0) return false;
    }
    for (int s = 0; s < k; ++s) {
      if (window_compare(s, -1, s + 1) < 0) return false;
    }
    return true;
  }

  int window_compare(int start, int step, int count) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    int next = 1;
    int pos = start;
    for (int i = 0; i < count; ++i) {
      int& slot = scratch_[letters_[pos]];
      if (slot == 0) slot = next++;
      if (slot != letters_[i]) return slot < letters_[i] ? -1 : 1;
      pos += step;
    }
    return 0;
  }
};

constexpr int kSplitDepth = 6;

}  // namespace

std::vector<GaussWord> enumerate_words_serial(int n, Filters filters) {
  std::vector<GaussWord> out;
  if (n <= 0) return out;
  Generator g(n, filters);
  g.run(out);
  return out;
}

std::vector<GaussWord> enumerate_words(int n, Filters filters, int jobs) {
  if (n <= 0) return {};
  set_jobs(jobs);
  const int depth = std::min(kSplitDepth, 2 * n);
  const auto prefixes = Generator(n, filters).prefixes(depth);
  std::vector<std::vector<GaussWord>> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    Generator g(n, filters);
    if (g.load(prefixes[i])) g.run(parts[i]);
  }
  std::vector<GaussWord> out;
  for (auto& part : parts)
    for (auto& w : part) out.push_back(std::move(w));
  return out;
}

std::vector<ProjectionRecord> compute_records_serial(const std::vector<GaussWord>& words,
                                                     const RecordOptions& options) {
  std::vector<ProjectionRecord> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(compute_record(w, options));
  return out;
}

std::vector<ProjectionRecord> compute_records(const std::vector<GaussWord>& words,
                                              const RecordOptions& options, int jobs) {
  set_jobs(jobs);
  std::vector<ProjectionRecord> out(words.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = compute_record(words[i], options);
  return out;
}

std::vector<ProjectionRecord> enumerate_shadows(int max_n, const EnumerateOptions& options) {
  if (max_n > options.bound)
    throw BoundExceeded("max crossings " + std::to_string(max_n) + " exceeds bound " +
                        std::to_string(options.bound));
  std::vector<ProjectionRecord> out;
  for (int n = 1; n <= max_n; ++n) {
    auto words = enumerate_words(n, options.filters, options.jobs);
    auto records = compute_records(words, options.record, options.jobs);
    for (std::size_t k = 0; k < records.size(); ++k) {
      records[k].label = table_label(n, static_cast<int>(k) + 1);
      out.push_back(std::move(records[k]));
    }
  }
  return out;
}

}  // namespace shadow
