#include "hz/bench.hpp"

#include <algorithm>
#include <cmath>

namespace hz {

namespace {

// least-squares slope of log(t) against log(x)
bool fit_slope(const std::vector<std::pair<double, double>>& xy, double& out) {
  if (xy.size() < 2) return false;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : xy) {
    double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double npts = static_cast<double>(xy.size());
  double denom = npts * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) return false;
  out = (npts * sxy - sx * sy) / denom;
  return true;
}

}  // namespace

BenchReport run_bench(uint64_t p, const std::vector<unsigned>& genus_list,
                      const std::vector<unsigned>& n_list, uint64_t seed,
                      unsigned threads) {
  BenchReport rep;
  rep.p = p;
  rep.seed = seed;
  RunOptions opt;
  opt.counts_upto = 1;
  opt.threads = threads;
  uint64_t curve_seed = seed;
  for (unsigned n : n_list)
    for (unsigned g : genus_list) {
      CurveInput in = random_curve_input(p, n, g, ++curve_seed);
      RunResult r = run_count(std::move(in), opt);
      rep.points.push_back({g, n, r.timings});
    }

  unsigned n_min = *std::min_element(n_list.begin(), n_list.end());
  unsigned g_min = *std::min_element(genus_list.begin(), genus_list.end());
  std::vector<std::pair<double, double>> gx, nx;
  for (const auto& pt : rep.points) {
    if (pt.n == n_min) gx.push_back({double(pt.g), pt.timings.total_ms});
    if (pt.g == g_min) nx.push_back({double(pt.n), pt.timings.total_ms});
  }
  rep.slope_g_defined = fit_slope(gx, rep.slope_g);
  rep.slope_n_defined = fit_slope(nx, rep.slope_n);
  return rep;
}

}  // namespace hz
