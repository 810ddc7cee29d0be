#include <doctest.h>

#include <cmath>
#include <numbers>

#include "arnold/errors.hpp"
#include "arnold/rotation.hpp"
#include "oracles.hpp"

using namespace arnold;

namespace {
constexpr double kInvTwoPi = 1.0 / (2.0 * std::numbers::pi);
}

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0, 1));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2") == Rational(-2, 1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0, 1));
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("1/x"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse(""), PreconditionError);
}

TEST_CASE("snap_rational examples") {
  CHECK(snap_rational(0.49999, 1e-3, 10) == Rational(1, 2));
  CHECK_FALSE(snap_rational(0.6180339, 1e-4, 10).has_value());
  CHECK(snap_rational(0.75, 1e-9, 4) == Rational(3, 4));
  CHECK(snap_rational(-0.3333, 1e-3, 5) == Rational(-1, 3));
  CHECK_THROWS_AS(snap_rational(0.5, 0.0, 4), PreconditionError);
}

TEST_CASE("snap_rational agrees with exhaustive enumeration") {
  oracle::Rng rng(23);
  for (int i = 0; i < 3000; ++i) {
    const double v = rng.uniform(-2, 2);
    const double tol = std::pow(10.0, rng.uniform(-5, -1));
    const int qmax = 1 + static_cast<int>(rng.uniform(0, 40));
    const auto got = snap_rational(v, tol, qmax);
    const auto want = oracle::nearest_fraction(v, tol, qmax);
    REQUIRE(got.has_value() == want.has_value());
    if (got) CHECK(*got == Rational(want->first, want->second));
  }
}

TEST_CASE("rho_monotone on exactly known cases") {
  const auto rigid = rho_monotone(envelope(Params(0.25, 0), Envelope::plus), 1000);
  CHECK(rigid.value == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(rigid.error_bound == doctest::Approx(1e-3));
  CHECK(rigid.exact_rational == Rational(1, 4));

  for (long n : {1L, 10L, 1000L}) {
    const auto fixed = rho_monotone(envelope(Params(0, 0.5), Envelope::plus), n);
    CHECK(fixed.exact_rational == Rational(0, 1));
  }

  const auto half = rho_monotone(envelope(Params(0.5, 0.9), Envelope::plus), 10000);
  CHECK(std::abs(half.value - 0.5) < 1e-4);
}

TEST_CASE("rho_exact_rational_test examples") {
  const double b = 0.5;
  CHECK(rho_exact_rational_test(envelope(Params(b * kInvTwoPi, b), Envelope::plus),
                                Rational(0, 1)));
  CHECK(rho_exact_rational_test(envelope(Params(0.25, 0), Envelope::plus), Rational(1, 4)));
  CHECK_FALSE(rho_exact_rational_test(envelope(Params(0.25, 0), Envelope::plus),
                                      Rational(0, 1)));
  CHECK_THROWS_AS(rho_exact_rational_test(envelope(Params(0, 0), Envelope::plus),
                                          Rational(1, 65)),
                  PreconditionError);
}

TEST_CASE("gap range brackets the closed-form tongue-0 gap") {
  // For b <= 1 and q = 1, G(x) = a + (b/2π) sin 2πx exactly.
  oracle::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(-0.5, 0.5), b = rng.uniform(0, 1);
    const auto r = gap_range(envelope(Params(a, b), Envelope::plus), Rational(0, 1));
    CHECK(r.max == doctest::Approx(a + b * kInvTwoPi).epsilon(1e-12));
    CHECK(r.min == doctest::Approx(a - b * kInvTwoPi).epsilon(1e-12));
  }
}

TEST_CASE("rotation_interval examples") {
  RhoOptions opts;
  const double n = static_cast<double>(opts.n_iter());

  const auto single = rotation_interval(Params(0.3, 0.5), opts);
  CHECK(std::abs(single.hi.value - single.lo.value) <= 2.0 / n);

  const auto sym0 = rotation_interval(Params(0, 2), opts);
  CHECK(std::abs(sym0.lo.value + sym0.hi.value) <= 2.0 / n);
  const auto [bf_lo, bf_hi] = rho_bounds_bruteforce(Params(0, 2), 256, 10000);
  CHECK(bf_lo >= sym0.lo.value - 2e-3);
  CHECK(bf_hi <= sym0.hi.value + 2e-3);

  const auto sym_half = rotation_interval(Params(0.5, 2), opts);
  CHECK(std::abs(sym_half.lo.value + sym_half.hi.value - 1.0) <= 2.0 / n);
}

TEST_CASE("brute-force oracle examples") {
  const auto [lo, hi] = rho_bounds_bruteforce(Params(0.25, 0), 16, 1000);
  CHECK(std::abs(lo - 0.25) <= 1e-3);
  CHECK(std::abs(hi - 0.25) <= 1e-3);
  const auto [lo0, hi0] = rho_bounds_bruteforce(Params(0, 0.5), 64, 4000);
  CHECK(std::abs(lo0) <= 1e-3);
  CHECK(std::abs(hi0) <= 1e-3);
  CHECK_THROWS_AS(rho_bounds_bruteforce(Params(0, 0.5), 0, 10), PreconditionError);
}

TEST_CASE("monotonicity of rho in a") {
  oracle::Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const double b = rng.uniform(0, 4);
    double a1 = rng.uniform(-1, 1), a2 = rng.uniform(-1, 1);
    if (a1 > a2) std::swap(a1, a2);
    for (auto which : {Envelope::plus, Envelope::minus}) {
      const auto r1 = rho_monotone(envelope(Params(a1, b), which), 2000);
      const auto r2 = rho_monotone(envelope(Params(a2, b), which), 2000);
      CHECK(r1.value <= r2.value + r1.error_bound + r2.error_bound);
    }
  }
}

TEST_CASE("translation and reflection of the rotation interval") {
  oracle::Rng rng(37);
  RhoOptions opts;
  opts.tol = 1e-3;
  for (int i = 0; i < 30; ++i) {
    const double a = rng.uniform(-1, 1), b = rng.uniform(0, 4);
    const auto base = rotation_interval(Params(a, b), opts);
    const auto shifted = rotation_interval(Params(a + 1.0, b), opts);
    const auto mirrored = rotation_interval(Params(-a, b), opts);
    const double eb = base.lo.error_bound + base.hi.error_bound;
    CHECK(std::abs(shifted.lo.value - base.lo.value - 1.0) <= eb);
    CHECK(std::abs(shifted.hi.value - base.hi.value - 1.0) <= eb);
    CHECK(std::abs(mirrored.lo.value + base.hi.value) <= eb);
    CHECK(std::abs(mirrored.hi.value + base.lo.value) <= eb);
  }
}

TEST_CASE("singleton intervals when b <= 1") {
  oracle::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto iv = rotation_interval(Params(rng.uniform(-1, 1), rng.uniform(0, 1)));
    CHECK(iv.width() <= iv.lo.error_bound + iv.hi.error_bound);
  }
}

TEST_CASE("brute force stays inside the rotation interval") {
  oracle::Rng rng(43);
  RhoOptions opts;
  opts.tol = 1e-3;
  for (int i = 0; i < 15; ++i) {
    const Params p(rng.uniform(-1, 1), rng.uniform(0, 4));
    const auto iv = rotation_interval(p, opts);
    const long n = 2000;
    const auto [lo, hi] = rho_bounds_bruteforce(p, 32, n);
    const double slack = 2.0 / n + 2.0 * iv.lo.error_bound;
    CHECK(lo >= iv.lo.value - slack);
    CHECK(hi <= iv.hi.value + slack);
  }
}

TEST_CASE("certified rationals are sound") {
  oracle::Rng rng(47);
  int certified = 0;
  for (int i = 0; i < 200; ++i) {
    const auto m = envelope(Params(rng.uniform(-1, 1), rng.uniform(0, 3)),
                            i % 2 ? Envelope::plus : Envelope::minus);
    const auto est = rho_monotone(m, 3000);
    if (!est.exact_rational) continue;
    ++certified;
    CHECK(rho_exact_rational_test(m, *est.exact_rational));
    CHECK(std::abs(est.value - est.exact_rational->value()) <= est.error_bound);
    // The certificate is exclusive: neighbouring labels must fail.
    const auto& r = *est.exact_rational;
    CHECK_FALSE(rho_exact_rational_test(m, Rational(r.p() * 2 + 1, r.q() * 2), 256));
  }
  CHECK(certified > 20);
}
