#include "arnold/tongue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "arnold/errors.hpp"
#include "arnold/numeric.hpp"
#include "arnold/periodic.hpp"
#include "arnold/rotation.hpp"

namespace arnold {

namespace {

constexpr double kConeMargin = 1.25;
constexpr double kInvTwoPi = 1.0 / kTwoPi;

// Monotone in a: false to the left of the edge, true from the edge on.
bool past_edge(CurveKind k, const Rational& r, double a, double b) {
  const MonotoneLift m(Params(a, b), envelope_of(k));
  if (is_left_edge(k)) return rho_at_least(m, r);
  return !rho_at_most(m, r);
}

std::vector<double> b_grid(double b_min, double b_max, double step) {
  if (!(step > 0.0)) throw PreconditionError("step must be > 0");
  if (!(b_max >= b_min) || b_min < 0.0) {
    throw PreconditionError("need 0 <= b_min <= b_max");
  }
  const auto n = static_cast<long>(
      std::max(0.0, std::ceil((b_max - b_min) / step - 1e-9)));
  std::vector<double> bs;
  if (n == 0) return {b_min};
  const double db = (b_max - b_min) / static_cast<double>(n);
  for (long i = 0; i <= n; ++i) bs.push_back(i == n ? b_max : b_min + i * db);
  return bs;
}

Window cone_window(double a, double db, double tol) {
  const double half = std::abs(db) * kInvTwoPi * kConeMargin + 10.0 * tol;
  return {a - half, a + half};
}

}  // namespace

const char* to_string(CurveKind k) noexcept {
  switch (k) {
    case CurveKind::Al: return "Al";
    case CurveKind::Ar: return "Ar";
    case CurveKind::Bl: return "Bl";
    case CurveKind::Br: return "Br";
  }
  return "?";
}

CurveKind parse_curve_kind(std::string_view text) {
  if (text == "Al") return CurveKind::Al;
  if (text == "Ar") return CurveKind::Ar;
  if (text == "Bl") return CurveKind::Bl;
  if (text == "Br") return CurveKind::Br;
  throw PreconditionError("unknown curve kind '" + std::string(text) +
                          "' (expected Al, Ar, Bl or Br)");
}

Envelope envelope_of(CurveKind k) noexcept {
  return (k == CurveKind::Al || k == CurveKind::Bl) ? Envelope::plus
                                                    : Envelope::minus;
}

bool is_left_edge(CurveKind k) noexcept {
  return k == CurveKind::Al || k == CurveKind::Br;
}

Window default_window(double b, const Rational& r) {
  const double half = b * kInvTwoPi + 0.01;
  return {r.value() - half, r.value() + half};
}

double curve_point(CurveKind k, const Rational& r, double b, Window w,
                   double tol) {
  if (!(tol > 0.0) || !(w.hi > w.lo)) {
    throw PreconditionError("curve_point needs tol > 0 and a non-empty window");
  }
  if (past_edge(k, r, w.lo, b) || !past_edge(k, r, w.hi, b)) {
    throw BadWindowError(std::string("window does not bracket the ") +
                         to_string(k) + " edge of " + r.to_string() +
                         " at b = " + std::to_string(b));
  }
  const auto [lo, hi] = numeric::bisect_predicate(
      [&](double a) { return past_edge(k, r, a, b); }, w.lo, w.hi, tol);
  return is_left_edge(k) ? hi : lo;
}

double edge_residual(CurveKind k, const Rational& r, double a, double b) {
  const MonotoneLift m(Params(a, b), envelope_of(k));
  const auto range = gap_range(m, r);
  return is_left_edge(k) ? range.max : range.min;
}

PlateauEdges plateau_edges(double b, const Rational& r, Envelope which,
                           Window w, double tol) {
  if (!(tol > 0.0) || !(w.hi > w.lo)) {
    throw PreconditionError("plateau_edges needs tol > 0 and a non-empty window");
  }
  const MonotoneLift at_lo(Params(w.lo, b), which);
  const MonotoneLift at_hi(Params(w.hi, b), which);
  if (rho_at_least(at_lo, r) || rho_at_most(at_hi, r)) {
    throw BadWindowError("window [" + std::to_string(w.lo) + ", " +
                         std::to_string(w.hi) + "] does not bracket the " +
                         r.to_string() + " plateau at b = " + std::to_string(b));
  }
  const CurveKind left_kind = which == Envelope::plus ? CurveKind::Al : CurveKind::Br;
  const CurveKind right_kind = which == Envelope::plus ? CurveKind::Bl : CurveKind::Ar;
  PlateauEdges e{curve_point(left_kind, r, b, w, tol),
                 curve_point(right_kind, r, b, w, tol)};
  if (e.left > e.right + tol) {
    throw EmptyPlateauError("no parameter in the window has rotation " +
                            r.to_string() + " at b = " + std::to_string(b));
  }
  return e;
}

PlateauEdges plateau_edges(double b, const Rational& r, Envelope which,
                           double tol) {
  return plateau_edges(b, r, which, default_window(b, r), tol);
}

BoundaryCurve trace_curve(CurveKind k, const Rational& r, double b_min,
                          double b_max, double step, double tol) {
  const auto bs = b_grid(b_min, b_max, step);
  BoundaryCurve c{k, r, {}, tol};
  double a = curve_point(k, r, bs.front(), default_window(bs.front(), r), tol);
  c.samples.push_back({bs.front(), a, edge_residual(k, r, a, bs.front())});
  for (std::size_t i = 1; i < bs.size(); ++i) {
    const double b = bs[i];
    try {
      a = curve_point(k, r, b, cone_window(a, b - bs[i - 1], tol), tol);
    } catch (const BadWindowError&) {
      throw ContinuationLostError(std::string("lost ") + to_string(k) + " " +
                                      r.to_string() + " at b = " + std::to_string(b),
                                  b);
    }
    c.samples.push_back({b, a, edge_residual(k, r, a, b)});
  }
  return c;
}

LipschitzReport lipschitz_check(const BoundaryCurve& c) {
  return lipschitz_check(c, c.tol);
}

LipschitzReport lipschitz_check(const BoundaryCurve& c, double tol) {
  const auto& s = c.samples;
  if (s.size() < 2) throw PreconditionError("lipschitz_check needs >= 2 samples");
  LipschitzReport rep;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double db = s[i].b - s[i - 1].b;
    if (!(db > 0.0)) throw PreconditionError("curve samples must increase in b");
    rep.max_slope = std::max(rep.max_slope, std::abs(s[i].a - s[i - 1].a) / db);
  }
  const double step = (s.back().b - s.front().b) / static_cast<double>(s.size() - 1);
  rep.slack = 2.0 * tol / step;
  rep.ok = rep.max_slope <= kInvTwoPi + rep.slack;
  return rep;
}

Region region_boundary(const Rational& lo, const Rational& hi, double b_min,
                       double b_max, double step, double tol) {
  if (hi < lo) throw PreconditionError("region needs lower label <= upper label");
  Region region{lo, hi, {}};
  for (double b : b_grid(b_min, b_max, step)) {
    const auto minus_lo = plateau_edges(b, lo, Envelope::minus, tol);
    const auto plus_hi = plateau_edges(b, hi, Envelope::plus, tol);
    double left = std::max(minus_lo.left, plus_hi.left);
    double right = std::min(minus_lo.right, plus_hi.right);
    if (left > right + tol) continue;
    if (right - left < 4.0 * tol) left = right = 0.5 * (left + right);  // tip
    region.slices.push_back({b, left, right});
  }
  return region;
}

BoundaryResiduals boundary_condition_residuals(const Params& p,
                                               const Rational& r) {
  BoundaryResiduals res;
  PeriodicOrbit o;
  if (p.b() > 1.0) {
    auto pair = orbit_pair(p, r);
    o = std::move(pair.o);
    res.o_prime_absent = !pair.o_prime.has_value();
  } else {
    auto all = find_periodic_orbits(p, r);
    auto it = std::max_element(all.begin(), all.end(), [](const auto& l, const auto& r) {
      return l.multiplier < r.multiplier;
    });
    o = *it;
    res.o_prime_absent = all.size() == 1;
  }
  res.multiplier = o.multiplier;
  res.saddle_node = std::abs(o.multiplier - 1.0);
  if (p.b() <= 1.0) return res;

  const auto crit = critical_points(p);
  const double xc = crit.points[0];
  const double xk = crit.points[1];
  // P_j: last lifted orbit point at or before C = x_c; P_k: the next one.
  double pj = -std::numeric_limits<double>::infinity();
  double pk = std::numeric_limits<double>::infinity();
  for (double s : o.points) {
    const double below = s - std::ceil(s - xc);  // largest translate <= xc
    pj = std::max(pj, below);
  }
  for (double s : o.points) {
    const double above = s - std::floor(s - pj);  // smallest translate >= pj
    pk = std::min(pk, above <= pj ? above + 1.0 : above);
  }
  const double k_lift = xk - std::floor(xk - pj);
  res.p_j = pj;
  res.p_k = pk;
  res.bl_residual = eval(p, k_lift) - eval(p, pj);
  res.br_residual = eval(p, xc) - eval(p, pk);
  return res;
}

std::vector<IntersectionPoint> intersect_curves(const CurveRef& left,
                                                const CurveRef& right,
                                                double b_min, double b_max,
                                                double step, double tol) {
  if (right.label < left.label) {
    throw PreconditionError("intersect_curves needs left label <= right label");
  }
  const auto lc = trace_curve(left.kind, left.label, b_min, b_max, step, tol);
  const auto rc = trace_curve(right.kind, right.label, b_min, b_max, step, tol);

  auto finish = [&](double b, double a) {
    IntersectionPoint pt{a, b, left, right, std::nullopt, std::nullopt};
    try {
      pt.left_residuals = boundary_condition_residuals(Params(a, b), left.label);
    } catch (const NumericalError&) {
    }
    try {
      pt.right_residuals = boundary_condition_residuals(Params(a, b), right.label);
    } catch (const NumericalError&) {
    }
    return pt;
  };

  std::vector<IntersectionPoint> out;
  const auto& ls = lc.samples;
  const auto& rs = rc.samples;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const double g0 = ls[i].a - rs[i].a;
    if (g0 == 0.0) {
      out.push_back(finish(ls[i].b, ls[i].a));
      continue;
    }
    if (i + 1 == ls.size()) break;
    const double g1 = ls[i + 1].a - rs[i + 1].a;
    if (g1 == 0.0 || (g0 < 0.0) == (g1 < 0.0)) continue;

    double b_lo = ls[i].b, b_hi = ls[i + 1].b;
    double la = ls[i].a, ra = rs[i].a;
    const bool lo_negative = g0 < 0.0;
    double mid_l = la, mid_r = ra;
    while (b_hi - b_lo > tol) {
      const double mid = 0.5 * (b_lo + b_hi);
      if (mid <= b_lo || mid >= b_hi) break;
      mid_l = curve_point(left.kind, left.label, mid, cone_window(la, mid - b_lo, tol), tol);
      mid_r = curve_point(right.kind, right.label, mid, cone_window(ra, mid - b_lo, tol), tol);
      if ((mid_l - mid_r < 0.0) == lo_negative) {
        b_lo = mid;
        la = mid_l;
        ra = mid_r;
      } else {
        b_hi = mid;
      }
    }
    out.push_back(finish(0.5 * (b_lo + b_hi), 0.5 * (mid_l + mid_r)));
  }
  return out;
}

}  // namespace arnold
