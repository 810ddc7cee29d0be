#pragma once

#include <optional>
#include <utility>

#include "arnold/lift.hpp"
#include "arnold/rational.hpp"

namespace arnold {

/// Rotation number with a certified radius: the true value lies in
/// [value - error_bound, value + error_bound]. exact_rational is set only when
/// the periodic-point certificate for that label succeeded.
struct RhoEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  std::optional<Rational> exact_rational;

  double lower() const noexcept { return value - error_bound; }
  double upper() const noexcept { return value + error_bound; }
};

/// I(F) = [rho(F-), rho(F+)].
struct RotationInterval {
  RhoEstimate lo;
  RhoEstimate hi;

  double width() const noexcept { return hi.value - lo.value; }
};

/// Largest denominator the rational certificate accepts by default.
inline constexpr int kDefaultQMax = 64;
/// Slack on G = F^q - id - p below which a sample counts as a zero.
inline constexpr double kGapZeroTol = 1e-12;

struct RhoOptions {
  double tol = 1e-4;          // requested accuracy; n_iter = ceil(2 / tol)
  double x0 = 0.0;
  int q_max = kDefaultQMax;   // largest denominator tried for certification
  double snap_factor = 2.0;   // snap tolerance in units of the error bound

  long n_iter() const;
};

/// (F^n(x0) - x0) / n with error bound 1/n, plus a certification attempt on
/// the nearest low-denominator fraction.
RhoEstimate rho_monotone(const MonotoneLift& m, long n_iter, double x0 = 0.0,
                         int q_max = kDefaultQMax, double snap_factor = 2.0);

/// Range of G(x) = F^q(x) - x - p over one period.
struct GapRange {
  double min = 0.0;
  double max = 0.0;
};

/// Computes min and max of G on an 8q-point grid (at least 64), then refines
/// the cells that the monotone bound G(x) <= G(x_{i+1}) + h cannot rule out.
GapRange gap_range(const MonotoneLift& m, const Rational& r);

/// rho(m) >= p/q, certified by some x with G(x) >= 0.
bool rho_at_least(const MonotoneLift& m, const Rational& r);
/// rho(m) <= p/q, certified by some x with G(x) <= 0.
bool rho_at_most(const MonotoneLift& m, const Rational& r);

/// True iff G attains both signs (or zero) on a period, i.e. rho(m) == p/q.
/// Throws PreconditionError if q exceeds q_max.
bool rho_exact_rational_test(const MonotoneLift& m, const Rational& r,
                             int q_max = kDefaultQMax);

RotationInterval rotation_interval(const Params& p, const RhoOptions& opts = {});

/// Independent oracle: iterate the raw lift from n_x0 equispaced points and
/// return (min tail liminf, max tail limsup) of (F^k(x0) - x0)/k over
/// k in [n_iter/2, n_iter].
std::pair<double, double> rho_bounds_bruteforce(const Params& p, int n_x0,
                                                long n_iter);

/// Smallest-denominator fraction with q <= q_max within tol of value.
std::optional<Rational> snap_rational(double value, double tol, int q_max);

}  // namespace arnold
