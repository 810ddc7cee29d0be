#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arnold/lift.hpp"
#include "arnold/rational.hpp"

namespace arnold {

/// Boundary families of the tongue of a label p/q. Fixed mapping onto
/// plateau edges of the rotation number of the monotone envelopes:
///   Al = left edge of the plus-plateau,  Bl = right edge of the plus-plateau,
///   Br = left edge of the minus-plateau, Ar = right edge of the minus-plateau.
enum class CurveKind { Al, Ar, Bl, Br };

const char* to_string(CurveKind k) noexcept;
CurveKind parse_curve_kind(std::string_view text);

Envelope envelope_of(CurveKind k) noexcept;
bool is_left_edge(CurveKind k) noexcept;

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

struct PlateauEdges {
  double left = 0.0;
  double right = 0.0;

  double width() const noexcept { return right - left; }
};

/// Window that always brackets the plateau of r: rho of either envelope
/// lies within b/2π of a.
Window default_window(double b, const Rational& r);

/// inf and sup of {a : rho(envelope at (a, b)) == p/q}, each by bisection on
/// the certified predicates rho >= p/q and rho <= p/q.
/// BadWindowError if the window does not bracket the plateau;
/// EmptyPlateauError if the located edges are inconsistent.
PlateauEdges plateau_edges(double b, const Rational& r, Envelope which,
                           Window window, double tol);
PlateauEdges plateau_edges(double b, const Rational& r, Envelope which,
                           double tol);

/// Single edge of kind k at b, bisected inside window. Returns the a value
/// on the inner (certified) side. BadWindowError if not bracketed.
double curve_point(CurveKind k, const Rational& r, double b, Window window,
                   double tol);

/// How far the edge condition is from exact at (a, b): the relevant
/// extremum of F^q - id - p over a period (zero on the curve).
double edge_residual(CurveKind k, const Rational& r, double a, double b);

struct CurveSample {
  double b = 0.0;
  double a = 0.0;
  double residual = 0.0;
};

struct BoundaryCurve {
  CurveKind kind = CurveKind::Al;
  Rational label;
  std::vector<CurveSample> samples;  // strictly increasing in b
  double tol = 0.0;                  // bisection tolerance used for a
};

/// Continuation in b. Each step searches a - (Δb/2π)(1.25) - 10 tol to
/// a + (Δb/2π)(1.25) + 10 tol around the previous sample; the first sample
/// comes from the default window. Throws ContinuationLostError.
BoundaryCurve trace_curve(CurveKind k, const Rational& r, double b_min,
                          double b_max, double step, double tol);

struct LipschitzReport {
  double max_slope = 0.0;
  double slack = 0.0;
  bool ok = false;
};

/// max |Δa/Δb| over consecutive samples against 1/2π + 2 tol / step,
/// with step the mean sample spacing.
LipschitzReport lipschitz_check(const BoundaryCurve& c);
LipschitzReport lipschitz_check(const BoundaryCurve& c, double tol);

struct RegionSlice {
  double b = 0.0;
  double a_left = 0.0;
  double a_right = 0.0;
};

/// Parameters whose rotation interval is exactly [lo, hi].
struct Region {
  Rational lo;
  Rational hi;
  std::vector<RegionSlice> slices;  // empty slices omitted
};

Region region_boundary(const Rational& lo, const Rational& hi, double b_min,
                       double b_max, double step, double tol);

/// Lemma-style diagnostics at a parameter point.
struct BoundaryResiduals {
  double saddle_node = 0.0;     // |m_O - 1|
  bool o_prime_absent = true;
  double multiplier = 0.0;      // m_O
  // F(K) - F(P_j) and F(C) - F(P_k); only defined for b > 1.
  std::optional<double> bl_residual;
  std::optional<double> br_residual;
  // Orbit points bounding the arc holding both critical points.
  std::optional<double> p_j;
  std::optional<double> p_k;
};

BoundaryResiduals boundary_condition_residuals(const Params& p,
                                               const Rational& r);

struct CurveRef {
  CurveKind kind = CurveKind::Al;
  Rational label;
};

struct IntersectionPoint {
  double a = 0.0;
  double b = 0.0;
  CurveRef left;
  CurveRef right;
  std::optional<BoundaryResiduals> left_residuals;
  std::optional<BoundaryResiduals> right_residuals;
};

/// All sign changes of left(b) - right(b) on [b_min, b_max], scanned at
/// `step` and bisected in b to tol. Requires left.label <= right.label.
std::vector<IntersectionPoint> intersect_curves(const CurveRef& left,
                                                const CurveRef& right,
                                                double b_min, double b_max,
                                                double step, double tol);

}  // namespace arnold
