// Serial reference vs OpenMP kernels for enumeration and record computation.
//   bench_records [max_n] [jobs]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "shadow/enumerate.hpp"

using namespace shadow;
using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 8;
  const int jobs = argc > 2 ? std::atoi(argv[2]) : 0;
  set_jobs(jobs);
  const Filters filters = Filters::prime_reduced();
  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%3s %8s %12s %12s %12s %12s %6s\n", "n", "words", "enum_serial", "enum_omp", "rec_serial",
              "rec_omp", "same");
  bool all_same = true;
  for (int n = 3; n <= max_n; ++n) {
    auto t0 = clock_type::now();
    const auto ws = enumerate_words_serial(n, filters);
    const double es = seconds_since(t0);
    t0 = clock_type::now();
    const auto wp = enumerate_words(n, filters, jobs);
    const double ep = seconds_since(t0);

    t0 = clock_type::now();
    const auto rs = compute_records_serial(ws);
    const double cs = seconds_since(t0);
    t0 = clock_type::now();
    const auto rp = compute_records(wp, {}, jobs);
    const double cp = seconds_since(t0);

    bool same = ws.size() == wp.size() && rs.size() == rp.size();
    for (std::size_t k = 0; same && k < rs.size(); ++k)
      same = ws[k] == wp[k] && ws[k].str() == wp[k].str() && to_json(rs[k]) == to_json(rp[k]);
    all_same = all_same && same;
    std::printf("%3d %8zu %12.4f %12.4f %12.4f %12.4f %6s\n", n, ws.size(), es, ep, cs, cp, same ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
