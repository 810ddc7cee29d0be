#include "arnold/lift.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arnold/errors.hpp"
#include "arnold/numeric.hpp"

namespace arnold {

Params::Params(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw PreconditionError("parameters must be finite");
  }
  if (b < 0.0) throw PreconditionError("parameter b must be >= 0");
}

double eval(const Params& p, double x) {
  return x + p.a() + p.b() / kTwoPi * std::sin(kTwoPi * x);
}

double deriv(const Params& p, double x, int order) {
  const double b = p.b();
  switch (order) {
    case 1:
      return 1.0 + b * std::cos(kTwoPi * x);
    case 2:
      return -kTwoPi * b * std::sin(kTwoPi * x);
    case 3:
      return -kTwoPi * kTwoPi * b * std::cos(kTwoPi * x);
    default:
      throw PreconditionError("derivative order must be 1, 2 or 3, got " +
                              std::to_string(order));
  }
}

double schwarzian(const Params& p, double x) {
  const double d1 = deriv(p, x, 1);
  if (std::abs(d1) < kCriticalTol) {
    throw CriticalPointError("Schwarzian undefined at critical point x = " +
                             std::to_string(x));
  }
  const double r2 = deriv(p, x, 2) / d1;
  return deriv(p, x, 3) / d1 - 1.5 * r2 * r2;
}

CriticalSet critical_points(const Params& p) {
  CriticalSet out;
  const double b = p.b();
  if (b < 1.0) return out;
  if (b == 1.0) {
    out.points = {0.5};
    out.degenerate = true;
    return out;
  }
  const double xc = std::acos(-1.0 / b) / kTwoPi;
  out.points = {xc, 1.0 - xc};
  return out;
}

MonotoneLift::MonotoneLift(const Params& base, Envelope which)
    : base_(base), which_(which) {
  if (base.b() <= 1.0) return;

  const auto crit = critical_points(base);
  const double xc = crit.points[0];
  const double xk = crit.points[1];
  has_plateau_ = true;

  if (which == Envelope::plus) {
    const double v = arnold::eval(base, xc);
    auto g = [&](double s) { return arnold::eval(base, s) - v; };
    if (!(g(xk) < 0.0 && g(xc + 1.0) > 0.0)) {
      throw RootBracketError("plus-envelope plateau root not bracketed");
    }
    plateau_start_ = xc;
    plateau_end_ = numeric::bisect_root(g, xk, xc + 1.0, kPlateauRootTol);
    plateau_value_ = v;
  } else {
    const double v = arnold::eval(base, xk);
    auto g = [&](double t) { return arnold::eval(base, t) - v; };
    if (!(g(xk - 1.0) < 0.0 && g(xc) > 0.0)) {
      throw RootBracketError("minus-envelope plateau root not bracketed");
    }
    plateau_start_ = numeric::bisect_root(g, xk - 1.0, xc, kPlateauRootTol);
    plateau_end_ = xk;
    plateau_value_ = v;
  }
}

double MonotoneLift::operator()(double x) const {
  if (!has_plateau_) return arnold::eval(base_, x);
  // Reduce to the period [plateau_start, plateau_start + 1).
  const double n = std::floor(x - plateau_start_);
  const double y = x - n;
  const double f = arnold::eval(base_, y);
  if (y <= plateau_end_) {
    // Clamp so the closing-root error never puts F above F+ (or below F-).
    return n + (which_ == Envelope::plus ? std::max(plateau_value_, f)
                                         : std::min(plateau_value_, f));
  }
  return n + f;
}

MonotoneLift envelope(const Params& p, Envelope which) {
  return MonotoneLift(p, which);
}

const char* to_string(Envelope e) noexcept {
  return e == Envelope::plus ? "plus" : "minus";
}

}  // namespace arnold
