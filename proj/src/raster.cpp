#include "arnold/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "arnold/errors.hpp"

namespace arnold {

double GridSpec::a_center(int i) const {
  return a_min + (i + 0.5) * (a_max - a_min) / na;
}

double GridSpec::b_center(int j) const {
  return b_min + (j + 0.5) * (b_max - b_min) / nb;
}

int resolve_workers(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv(kWorkersEnv)) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

namespace {

RasterCell compute_cell(double a, double b, const RasterOptions& opts) {
  RhoOptions rho;
  rho.tol = opts.tol;
  rho.q_max = opts.q_max;
  rho.snap_factor = opts.snap_factor;
  const auto interval = rotation_interval(Params(a, b), rho);
  return {a, b, interval.lo, interval.hi, interval.lo.exact_rational,
          interval.hi.exact_rational};
}

}  // namespace

RasterGrid raster(const GridSpec& spec, const RasterOptions& opts) {
  if (spec.na < 1 || spec.nb < 1) throw PreconditionError("raster needs na, nb >= 1");
  if (spec.b_min < 0.0) throw PreconditionError("raster needs b_min >= 0");

  RasterGrid grid{spec, std::vector<RasterCell>(static_cast<std::size_t>(spec.na) * spec.nb)};
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < grid.cells.size(); k = next++) {
      const int i = static_cast<int>(k % spec.na);
      const int j = static_cast<int>(k / spec.na);
      grid.cells[k] = compute_cell(spec.a_center(i), spec.b_center(j), opts);
    }
  };

  const int n = std::min<int>(resolve_workers(opts.workers),
                              static_cast<int>(grid.cells.size()));
  std::vector<std::jthread> pool;
  for (int w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  return grid;
}

Palette Palette::standard() {
  Palette p;
  // Denominators 1..12 get distinct hues; larger ones fall back to a cycle.
  p.by_denominator = {
      {200, 30, 30},  {30, 90, 200},  {30, 160, 60},  {230, 150, 20},
      {140, 50, 170}, {20, 170, 170}, {190, 90, 140}, {120, 120, 20},
      {90, 60, 30},   {60, 200, 120}, {200, 200, 60}, {100, 140, 230},
  };
  return p;
}

Rgb Palette::color(const RasterCell& cell) const {
  if (cell.snapped_lo && cell.snapped_hi && *cell.snapped_lo == *cell.snapped_hi) {
    if (by_denominator.empty()) return interval;
    const auto q = static_cast<std::size_t>(cell.snapped_lo->q());
    return by_denominator[(q - 1) % by_denominator.size()];
  }
  if (cell.interval_width() > cell.rho_minus.error_bound + cell.rho_plus.error_bound) {
    return interval;
  }
  return unlocked;
}

std::string render_ppm(const RasterGrid& g, const Palette& palette) {
  const auto& s = g.spec;
  std::string out = "P6\n" + std::to_string(s.na) + " " + std::to_string(s.nb) + "\n255\n";
  out.reserve(out.size() + 3 * g.cells.size());
  for (int j = s.nb - 1; j >= 0; --j) {
    for (int i = 0; i < s.na; ++i) {
      const Rgb c = palette.color(g.at(i, j));
      out.push_back(static_cast<char>(c.r));
      out.push_back(static_cast<char>(c.g));
      out.push_back(static_cast<char>(c.b));
    }
  }
  return out;
}

}  // namespace arnold
