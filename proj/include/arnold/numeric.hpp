#pragma once

#include <cmath>
#include <utility>

namespace arnold::numeric {

/// Bisection for the sign change of f on [lo, hi]. Requires f(lo) and f(hi)
/// of opposite sign (or one of them zero). Returns the midpoint of the final
/// bracket once its width drops to tol.
template <class Fn>
double bisect_root(Fn&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Bisection on a monotone predicate with pred(lo) == false, pred(hi) == true.
/// Returns the final (false, true) bracket.
template <class Pred>
std::pair<double, double> bisect_predicate(Pred&& pred, double lo, double hi,
                                           double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for the maximum of f on [lo, hi]. The endpoints are
/// included as candidates so monotone pieces resolve to the right boundary.
template <class Fn>
Extremum golden_max(Fn&& f, double lo, double hi, double tol = 1e-13) {
  constexpr double kInvPhi = 0.6180339887498949;
  Extremum best{lo, f(lo)};
  if (const double fh = f(hi); fh > best.value) best = {hi, fh};

  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
    if (!(x1 < x2)) break;
  }
  if (f1 > best.value) best = {x1, f1};
  if (f2 > best.value) best = {x2, f2};
  return best;
}

template <class Fn>
Extremum golden_min(Fn&& f, double lo, double hi, double tol = 1e-13) {
  auto r = golden_max([&](double x) { return -f(x); }, lo, hi, tol);
  return {r.x, -r.value};
}

}  // namespace arnold::numeric
