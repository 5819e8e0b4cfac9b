#pragma once

// Exhaustive generation of realizable Gauss words up to rotation, reversal
// and relabeling.
//
// Words are built left to right in first-occurrence labeling; every prefix is
// extended in increasing letter order, so leaves appear in lexicographic
// order. A chord is checked the moment it closes: its interlacement degree is
// then fully determined, so odd degree (never realizable) and, when only
// reduced words are wanted, degree zero prune the subtree immediately.
// Non-canonical prefixes are pruned by comparing against the rotations and
// reflections that lie entirely inside the prefix.
//
// The parallel entry points split the search at a fixed prefix depth and run
// the subtrees under OpenMP; the serial versions are kept as the reference
// the parallel ones are tested against.

#include <stdexcept>
#include <vector>

#include "shadow/record.hpp"
#include "shadow/word.hpp"

namespace shadow {

class BoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Filters {
  bool prime = false;
  bool reduced = false;
  static Filters prime_reduced() { return {true, true}; }
};

inline constexpr int kDefaultCrossingBound = 8;

// Canonical realizable words with exactly n crossings passing the filters.
std::vector<GaussWord> enumerate_words_serial(int n, Filters filters);
std::vector<GaussWord> enumerate_words(int n, Filters filters, int jobs = 0);

std::vector<ProjectionRecord> compute_records_serial(const std::vector<GaussWord>& words,
                                                     const RecordOptions& options = {});
std::vector<ProjectionRecord> compute_records(const std::vector<GaussWord>& words,
                                              const RecordOptions& options = {}, int jobs = 0);

struct EnumerateOptions {
  Filters filters = Filters::prime_reduced();
  RecordOptions record;
  int bound = kDefaultCrossingBound;
  int jobs = 0;  // 0: OpenMP default
};

// Records for 1 <= n <= max_n, ordered by n then canonical word, labeled
// n_1, n_2, ... within each n. Throws BoundExceeded when max_n > bound.
std::vector<ProjectionRecord> enumerate_shadows(int max_n, const EnumerateOptions& options = {});

// Applies --jobs to OpenMP (0 leaves the runtime default).
void set_jobs(int jobs);

}  // namespace shadow
