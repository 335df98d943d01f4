#pragma once

#include "hz/pipeline.hpp"

namespace hz {

struct BenchPoint {
  unsigned g = 0;
  unsigned n = 0;
  StepTimings timings;
};

struct BenchReport {
  uint64_t p = 0;
  uint64_t seed = 0;
  std::vector<BenchPoint> points;
  // log-log least-squares slopes; NaN when a grid direction has < 2 points
  double slope_g = 0.0;
  bool slope_g_defined = false;
  double slope_n = 0.0;
  bool slope_n_defined = false;
};

// Times run_count on one random valid curve per (g, n) grid point. The
// slope in g is fit at the smallest n in the grid, the slope in n at the
// smallest g.
BenchReport run_bench(uint64_t p, const std::vector<unsigned>& genus_list,
                      const std::vector<unsigned>& n_list, uint64_t seed,
                      unsigned threads = 1);

}  // namespace hz
