#pragma once

#include <numbers>
#include <vector>

namespace arnold {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Point (a, b) of the parameter plane of the standard family
///   F(x) = x + a + (b / 2π) sin(2πx),   b >= 0.
class Params {
 public:
  Params() = default;
  /// Throws PreconditionError if b < 0 or either value is not finite.
  Params(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_ = 0.0;
  double b_ = 0.0;
};

/// |F'(x)| below this counts as a critical point.
inline constexpr double kCriticalTol = 1e-9;
/// Absolute tolerance of the plateau-closing root of the envelopes.
inline constexpr double kPlateauRootTol = 1e-12;

double eval(const Params& p, double x);

/// Derivative of order 1, 2 or 3; any other order is a PreconditionError.
double deriv(const Params& p, double x, int order);

/// F'''/F' - 1.5 (F''/F')^2. Throws CriticalPointError when |F'(x)| < 1e-9.
double schwarzian(const Params& p, double x);

/// Critical points of F inside [0, 1).
struct CriticalSet {
  std::vector<double> points;  // ascending; x_c (local max) then x_k (local min)
  bool degenerate = false;     // b == 1: single inflection-type point at 1/2

  bool empty() const noexcept { return points.empty(); }
};

CriticalSet critical_points(const Params& p);

enum class Envelope { plus, minus };

/// Non-decreasing envelope of a standard lift in closed piecewise form.
///
/// plus:  F+(x) = sup_{y<=x} F(y). For b > 1 it follows F except on one
///        plateau per period, [x_c, s], where it is held at F(x_c) and s is
///        the first point past x_k with F(s) = F(x_c).
/// minus: F-(x) = inf_{y>=x} F(y). Plateau [t, x_k] held at F(x_k), where t
///        is the last point before x_c with F(t) = F(x_k).
///
/// For b <= 1 the lift is already non-decreasing and there is no plateau.
class MonotoneLift {
 public:
  MonotoneLift(const Params& base, Envelope which);

  double operator()(double x) const;
  double eval(double x) const { return (*this)(x); }

  const Params& base() const noexcept { return base_; }
  Envelope which() const noexcept { return which_; }
  bool has_plateau() const noexcept { return has_plateau_; }
  double plateau_start() const noexcept { return plateau_start_; }
  double plateau_end() const noexcept { return plateau_end_; }
  double plateau_value() const noexcept { return plateau_value_; }

 private:
  Params base_;
  Envelope which_;
  bool has_plateau_ = false;
  double plateau_start_ = 0.0;
  double plateau_end_ = 0.0;
  double plateau_value_ = 0.0;
};

/// Throws RootBracketError if the plateau-closing root cannot be bracketed.
MonotoneLift envelope(const Params& p, Envelope which);

const char* to_string(Envelope e) noexcept;

}  // namespace arnold
