#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arnold/lift.hpp"
#include "arnold/rational.hpp"

namespace arnold {

enum class Stability {
  superattracting,
  attracting,
  parabolic,
  neutral_nonparabolic,
  hyperbolic,
};

const char* to_string(Stability s) noexcept;

/// Bands: |m| < 1e-9 superattracting, |m - 1| < 1e-6 parabolic,
/// |m| < 1 - 1e-9 attracting, |m| > 1 + 1e-9 hyperbolic, else neutral.
Stability classify_multiplier(double m) noexcept;

/// Periodic orbit of the lift with rotation label p/q.
///
/// `points` holds the q orbit points reduced into [0, 1), ascending;
/// `cycle` holds the same orbit in dynamical order x_0, F(x_0), ... with
/// x_0 = points.front().
struct PeriodicOrbit {
  std::vector<double> points;
  std::vector<double> cycle;
  Rational label;
  double multiplier = 0.0;
  Stability stability = Stability::hyperbolic;
  bool on_increasing_branch = true;
  /// Cyclic order of the orbit is preserved by F, so the orbit is also an
  /// orbit of some non-decreasing degree-one lift.
  bool well_ordered = true;
};

inline constexpr int kOrbitQMax = 64;

/// All orbits solving F^q(x) = x + p, one per translation class.
/// Throws NoOrbitError when none exist (p/q outside I(F)).
std::vector<PeriodicOrbit> find_periodic_orbits(const Params& p,
                                                const Rational& r);

struct OrbitPair {
  PeriodicOrbit o;
  std::optional<PeriodicOrbit> o_prime;
};

/// The orbit O (and O', when present) avoiding the decreasing lap.
/// Requires b > 1. Throws AmbiguityError if more than two classes qualify.
OrbitPair orbit_pair(const Params& p, const Rational& r);

enum class Lap : char { L = 'L', M = 'M', R = 'R' };

/// Lap of x for b > 1: L = [x_k - 1, x_c] (closed), M = (x_c, x_k).
/// Points within 1e-12 of a boundary are assigned to L.
Lap lap_of(const Params& p, double x);

struct Itinerary {
  std::vector<Lap> symbols;
  int length = 0;

  std::string to_string() const;
};

/// Laps visited by x, F(x), ..., F^{length-1}(x). Requires b > 1.
Itinerary itinerary(const Params& p, double x, int length);

/// Circle distance between x and y (both taken mod 1).
double circle_distance(double x, double y);

}  // namespace arnold
