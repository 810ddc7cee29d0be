#include "arnold/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "arnold/errors.hpp"
#include "arnold/numeric.hpp"

namespace arnold {

namespace {

// G(x) = F^q(x) - x - p for a non-decreasing lift F.
class GapFunction {
 public:
  GapFunction(const MonotoneLift& m, const Rational& r)
      : m_(m), q_(r.q()), p_(static_cast<double>(r.p())) {}

  double operator()(double x) const {
    double y = x;
    for (std::int64_t i = 0; i < q_; ++i) y = m_(y);
    return y - x - p_;
  }

  std::int64_t q() const noexcept { return q_; }

 private:
  const MonotoneLift& m_;
  std::int64_t q_;
  double p_;
};

constexpr int kRefineCells = 6;

class GapScan {
 public:
  GapScan(const MonotoneLift& m, const Rational& r)
      : gap_(m, r),
        n_(static_cast<int>(std::max<std::int64_t>(64, 8 * r.q()))),
        h_(1.0 / n_),
        g_(n_ + 1) {
    for (int i = 0; i < n_; ++i) g_[i] = gap_(i * h_);
    g_[n_] = g_[0];  // G has period one
  }

  double grid_max() const { return *std::max_element(g_.begin(), g_.end()); }
  double grid_min() const { return *std::min_element(g_.begin(), g_.end()); }

  // Since F^q is non-decreasing, G(x) <= G(x_{i+1}) + h on cell i, so only
  // cells with that bound above the current best can hold a larger value.
  double refine_max(double stop_at) const {
    double best = grid_max();
    if (best >= stop_at) return best;
    std::vector<int> cells;
    for (int i = 0; i < n_; ++i) {
      if (g_[i + 1] + h_ >= best) cells.push_back(i);
    }
    std::sort(cells.begin(), cells.end(), [&](int l, int r) {
      return std::max(g_[l], g_[l + 1]) > std::max(g_[r], g_[r + 1]);
    });
    if (cells.size() > kRefineCells) cells.resize(kRefineCells);
    for (int i : cells) {
      if (g_[i + 1] + h_ < best) continue;
      const auto e = numeric::golden_max(gap_, i * h_, (i + 1) * h_);
      best = std::max(best, e.value);
      if (best >= stop_at) break;
    }
    return best;
  }

  // Mirror bound: G(x) >= G(x_i) - h on cell i.
  double refine_min(double stop_at) const {
    double best = grid_min();
    if (best <= stop_at) return best;
    std::vector<int> cells;
    for (int i = 0; i < n_; ++i) {
      if (g_[i] - h_ <= best) cells.push_back(i);
    }
    std::sort(cells.begin(), cells.end(), [&](int l, int r) {
      return std::min(g_[l], g_[l + 1]) < std::min(g_[r], g_[r + 1]);
    });
    if (cells.size() > kRefineCells) cells.resize(kRefineCells);
    for (int i : cells) {
      if (g_[i] - h_ > best) continue;
      const auto e = numeric::golden_min(gap_, i * h_, (i + 1) * h_);
      best = std::min(best, e.value);
      if (best <= stop_at) break;
    }
    return best;
  }

 private:
  GapFunction gap_;
  int n_;
  double h_;
  std::vector<double> g_;
};

// Iterates a degree-one lift keeping the orbit in [0, 1) plus an integer
// count, so long orbits do not lose precision.
template <class Map>
double displacement(const Map& f, double x0, long n) {
  double y = x0 - std::floor(x0);
  const double start = y;
  double turns = 0.0;
  for (long i = 0; i < n; ++i) {
    y = f(y);
    const double fl = std::floor(y);
    turns += fl;
    y -= fl;
  }
  return turns + y - start;
}

}  // namespace

long RhoOptions::n_iter() const {
  if (!(tol > 0.0)) throw PreconditionError("rho tolerance must be > 0");
  return std::max(1L, static_cast<long>(std::ceil(2.0 / tol)));
}

GapRange gap_range(const MonotoneLift& m, const Rational& r) {
  const GapScan scan(m, r);
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {scan.refine_min(-inf), scan.refine_max(inf)};
}

bool rho_at_least(const MonotoneLift& m, const Rational& r) {
  const GapScan scan(m, r);
  return scan.refine_max(-kGapZeroTol) >= -kGapZeroTol;
}

bool rho_at_most(const MonotoneLift& m, const Rational& r) {
  const GapScan scan(m, r);
  return scan.refine_min(kGapZeroTol) <= kGapZeroTol;
}

bool rho_exact_rational_test(const MonotoneLift& m, const Rational& r,
                             int q_max) {
  if (r.q() > q_max) {
    throw PreconditionError("denominator " + std::to_string(r.q()) +
                            " exceeds q_max " + std::to_string(q_max));
  }
  const GapScan scan(m, r);
  return scan.refine_max(-kGapZeroTol) >= -kGapZeroTol &&
         scan.refine_min(kGapZeroTol) <= kGapZeroTol;
}

RhoEstimate rho_monotone(const MonotoneLift& m, long n_iter, double x0,
                         int q_max, double snap_factor) {
  if (n_iter < 1) throw PreconditionError("n_iter must be >= 1");
  RhoEstimate est;
  const double n = static_cast<double>(n_iter);
  est.value = displacement(m, x0, n_iter) / n;
  est.error_bound = 1.0 / n;

  if (auto cand = snap_rational(est.value, snap_factor * est.error_bound, q_max)) {
    if (std::abs(est.value - cand->value()) <= est.error_bound &&
        rho_exact_rational_test(m, *cand, q_max)) {
      est.exact_rational = cand;
    }
  }
  return est;
}

RotationInterval rotation_interval(const Params& p, const RhoOptions& opts) {
  const long n = opts.n_iter();
  return {rho_monotone(envelope(p, Envelope::minus), n, opts.x0, opts.q_max,
                       opts.snap_factor),
          rho_monotone(envelope(p, Envelope::plus), n, opts.x0, opts.q_max,
                       opts.snap_factor)};
}

std::pair<double, double> rho_bounds_bruteforce(const Params& p, int n_x0,
                                                long n_iter) {
  if (n_x0 < 1 || n_iter < 1) {
    throw PreconditionError("n_x0 and n_iter must be >= 1");
  }
  const long tail = std::max(1L, n_iter / 2);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n_x0; ++i) {
    double y = static_cast<double>(i) / n_x0;
    const double start = y;
    double turns = 0.0;
    for (long k = 1; k <= n_iter; ++k) {
      y = eval(p, y);
      const double fl = std::floor(y);
      turns += fl;
      y -= fl;
      if (k >= tail) {
        const double avg = (turns + y - start) / static_cast<double>(k);
        lo = std::min(lo, avg);
        hi = std::max(hi, avg);
      }
    }
  }
  return {lo, hi};
}

std::optional<Rational> snap_rational(double value, double tol, int q_max) {
  if (!(tol > 0.0) || q_max < 1) {
    throw PreconditionError("snap_rational needs tol > 0 and q_max >= 1");
  }
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const auto p = static_cast<std::int64_t>(std::llround(value * q));
    if (std::abs(value - static_cast<double>(p) / q) <= tol) return Rational(p, q);
  }
  return std::nullopt;
}

}  // namespace arnold
