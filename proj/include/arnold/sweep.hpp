#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arnold/rotation.hpp"
#include "arnold/tongue.hpp"

namespace arnold {

struct GridSpec {
  double a_min = 0.0;
  double a_max = 1.0;
  double b_min = 0.0;
  double b_max = 1.0;
  int na = 1;
  int nb = 1;

  /// Cell centers: a_min + (i + 0.5)(a_max - a_min)/na, same for b.
  double a_center(int i) const;
  double b_center(int j) const;
};

struct RasterCell {
  double a = 0.0;
  double b = 0.0;
  RhoEstimate rho_minus;
  RhoEstimate rho_plus;
  std::optional<Rational> snapped_lo;  // certified lock of rho(F-)
  std::optional<Rational> snapped_hi;  // certified lock of rho(F+)

  double interval_width() const { return rho_plus.value - rho_minus.value; }
};

struct RasterOptions {
  double tol = 2e-3;        // rho accuracy; n_iter = ceil(2 / tol)
  int q_max = 32;           // snap denominators
  double snap_factor = 2.0; // snap tolerance in units of the error bound
  int workers = 0;          // 0: ARNOLD_WORKERS, else hardware concurrency
};

struct RasterGrid {
  GridSpec spec;
  std::vector<RasterCell> cells;  // row-major: cells[j * na + i], j = 0 at b_min

  const RasterCell& at(int i, int j) const { return cells[j * spec.na + i]; }
};

/// Environment variable holding the default worker count (0 = auto).
inline constexpr const char* kWorkersEnv = "ARNOLD_WORKERS";

int resolve_workers(int requested);

RasterGrid raster(const GridSpec& spec, const RasterOptions& opts = {});

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Locked cells are colored by denominator, cells with a nontrivial
/// rotation interval get `interval`, everything else `unlocked`.
struct Palette {
  Rgb unlocked{255, 255, 255};
  Rgb interval{40, 40, 40};
  std::vector<Rgb> by_denominator;

  static Palette standard();
  Rgb color(const RasterCell& cell) const;
};

/// Binary P6: width na, height nb, top row at b_max.
std::string render_ppm(const RasterGrid& g, const Palette& palette = Palette::standard());

std::string to_csv(const RasterGrid& g);
std::string to_csv(const BoundaryCurve& c);
std::string to_csv(const Region& r);

RasterGrid parse_raster_csv(std::string_view text);
BoundaryCurve parse_curve_csv(std::string_view text);
Region parse_region_csv(std::string_view text);

/// Writes bytes to path; I/O failures raise Error naming the path.
void write_file(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

template <class T>
void export_csv(const T& object, const std::filesystem::path& path) {
  write_file(path, to_csv(object));
}

}  // namespace arnold
