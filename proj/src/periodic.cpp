#include "arnold/periodic.hpp"

#include <algorithm>
#include <cmath>

#include "arnold/errors.hpp"
#include "arnold/numeric.hpp"

namespace arnold {

namespace {

constexpr int kScanPerPeriod = 4096;
constexpr double kDoubleRootTol = 1e-10;
constexpr double kRootMergeTol = 1e-9;
constexpr double kOrbitMatchTol = 1e-7;
constexpr double kLapBoundaryTol = 1e-12;

double frac(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

class RawGap {
 public:
  RawGap(const Params& p, const Rational& r)
      : p_(p), q_(r.q()), shift_(static_cast<double>(r.p())) {}

  double operator()(double x) const {
    double y = x;
    for (std::int64_t i = 0; i < q_; ++i) y = eval(p_, y);
    return y - x - shift_;
  }

 private:
  Params p_;
  std::int64_t q_;
  double shift_;
};

std::vector<double> gap_roots(const Params& p, const Rational& r) {
  const RawGap gap(p, r);
  const int n = kScanPerPeriod * static_cast<int>(r.q());
  const double h = 1.0 / n;
  std::vector<double> g(n + 1);
  for (int i = 0; i < n; ++i) g[i] = gap(i * h);
  g[n] = g[0];

  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    if (g[i] == 0.0) {
      roots.push_back(i * h);
    } else if ((g[i] < 0.0) != (g[i + 1] < 0.0) && g[i + 1] != 0.0) {
      roots.push_back(numeric::bisect_root(gap, i * h, (i + 1) * h, 0.0));
    }
  }

  // Tangencies have no sign change: look at local minima of |G|.
  for (int i = 0; i < n; ++i) {
    const double gl = g[(i + n - 1) % n];
    const double gm = g[i];
    const double gr = g[i + 1];
    if (gm == 0.0 || (gl < 0.0) != (gm < 0.0) || (gr < 0.0) != (gm < 0.0)) {
      continue;
    }
    if (!(std::abs(gm) <= std::abs(gl) && std::abs(gm) < std::abs(gr))) continue;
    // Vertex of the parabola through the three samples; skip dips that
    // clearly stay away from zero.
    const double curv = gl - 2.0 * gm + gr;
    const double vertex = curv != 0.0 ? gm - (gr - gl) * (gr - gl) / (8.0 * curv) : gm;
    if (std::abs(gm) >= kDoubleRootTol && (vertex < 0.0) == (gm < 0.0) &&
        std::abs(vertex) > 0.5 * std::abs(gm)) {
      continue;
    }
    const double lo = (i - 1) * h;
    const double hi = (i + 1) * h;
    const auto e = gm > 0.0 ? numeric::golden_min(gap, lo, hi)
                            : numeric::golden_max(gap, lo, hi);
    if (std::abs(e.value) < kDoubleRootTol) {
      roots.push_back(e.x);
    } else if ((e.value < 0.0) != (gm < 0.0)) {
      roots.push_back(numeric::bisect_root(gap, lo, e.x, 0.0));
      roots.push_back(numeric::bisect_root(gap, e.x, hi, 0.0));
    }
  }

  for (double& x : roots) x = frac(x);
  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double x : roots) {
    if (merged.empty() || x - merged.back() > kRootMergeTol) merged.push_back(x);
  }
  if (merged.size() > 1 && merged.front() + 1.0 - merged.back() <= kRootMergeTol) {
    merged.pop_back();
  }
  return merged;
}

bool in_decreasing_lap(const Params& p, double x) {
  return p.b() > 1.0 && lap_of(p, x) == Lap::M;
}

PeriodicOrbit build_orbit(const Params& p, const Rational& r, double seed) {
  PeriodicOrbit o;
  o.label = r;
  const auto q = static_cast<std::size_t>(r.q());

  double y = seed;
  for (std::size_t j = 0; j < q; ++j) {
    o.points.push_back(frac(y));
    y = eval(p, y);
  }
  std::sort(o.points.begin(), o.points.end());

  // Re-derive the cycle from the smallest point so every orbit in a class
  // is represented identically.
  y = o.points.front();
  o.multiplier = 1.0;
  for (std::size_t j = 0; j < q; ++j) {
    o.cycle.push_back(y);
    o.multiplier *= deriv(p, y, 1);
    y = eval(p, y);
  }
  o.stability = classify_multiplier(o.multiplier);

  o.on_increasing_branch = std::none_of(o.points.begin(), o.points.end(),
      [&](double x) { return in_decreasing_lap(p, x); });

  o.well_ordered = true;
  for (std::size_t j = 0; j + 1 < q; ++j) {
    if (!(eval(p, o.points[j]) < eval(p, o.points[j + 1]))) o.well_ordered = false;
  }
  if (!(eval(p, o.points.back()) < eval(p, o.points.front() + 1.0))) {
    o.well_ordered = false;
  }
  return o;
}

}  // namespace

const char* to_string(Stability s) noexcept {
  switch (s) {
    case Stability::superattracting: return "superattracting";
    case Stability::attracting: return "attracting";
    case Stability::parabolic: return "parabolic";
    case Stability::neutral_nonparabolic: return "neutral_nonparabolic";
    case Stability::hyperbolic: return "hyperbolic";
  }
  return "?";
}

Stability classify_multiplier(double m) noexcept {
  const double am = std::abs(m);
  if (am < 1e-9) return Stability::superattracting;
  if (std::abs(m - 1.0) < 1e-6) return Stability::parabolic;
  if (am < 1.0 - 1e-9) return Stability::attracting;
  if (am > 1.0 + 1e-9) return Stability::hyperbolic;
  return Stability::neutral_nonparabolic;
}

double circle_distance(double x, double y) {
  const double d = frac(x - y);
  return std::min(d, 1.0 - d);
}

std::vector<PeriodicOrbit> find_periodic_orbits(const Params& p,
                                                const Rational& r) {
  if (r.q() > kOrbitQMax) {
    throw PreconditionError("orbit denominator exceeds q_max");
  }
  const auto roots = gap_roots(p, r);
  if (roots.empty()) {
    throw NoOrbitError("no orbit with rotation " + r.to_string() +
                       " (label outside the rotation interval)");
  }

  std::vector<PeriodicOrbit> orbits;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    auto orbit = build_orbit(p, r, roots[i]);
    for (std::size_t j = i; j < roots.size(); ++j) {
      for (double x : orbit.points) {
        if (circle_distance(roots[j], x) < kOrbitMatchTol) used[j] = true;
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

OrbitPair orbit_pair(const Params& p, const Rational& r) {
  auto all = find_periodic_orbits(p, r);
  if (p.b() <= 1.0) throw PreconditionError("orbit_pair requires b > 1");
  std::vector<PeriodicOrbit> qualified;
  for (auto& o : all) {
    if (o.on_increasing_branch && o.well_ordered) qualified.push_back(std::move(o));
  }
  if (qualified.empty()) {
    throw NoOrbitError("no orbit with rotation " + r.to_string() +
                       " avoids the decreasing lap");
  }
  if (qualified.size() > 2) {
    throw AmbiguityError(std::to_string(qualified.size()) +
                         " orbit classes avoid the decreasing lap for " +
                         r.to_string());
  }
  std::sort(qualified.begin(), qualified.end(),
            [](const auto& l, const auto& r) { return l.multiplier > r.multiplier; });
  OrbitPair out{qualified.front(), std::nullopt};
  if (qualified.size() == 2) out.o_prime = qualified[1];
  return out;
}

Lap lap_of(const Params& p, double x) {
  const auto crit = critical_points(p);
  if (p.b() <= 1.0) throw PreconditionError("laps are defined for b > 1 only");
  const double xc = crit.points[0];
  const double xk = crit.points[1];
  const double y = x - std::floor(x - (xk - 1.0));  // y in [xk - 1, xk)
  if (y <= xc + kLapBoundaryTol || y >= xk - kLapBoundaryTol) return Lap::L;
  return Lap::M;
}

std::string Itinerary::to_string() const {
  std::string s;
  for (Lap l : symbols) s.push_back(static_cast<char>(l));
  return s;
}

Itinerary itinerary(const Params& p, double x, int length) {
  if (length < 1) throw PreconditionError("itinerary length must be >= 1");
  if (p.b() <= 1.0) throw PreconditionError("itinerary requires b > 1");
  Itinerary it;
  it.length = length;
  double y = x;
  for (int i = 0; i < length; ++i) {
    it.symbols.push_back(lap_of(p, y));
    y = eval(p, y);
  }
  return it;
}

}  // namespace arnold
