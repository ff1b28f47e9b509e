#include <doctest.h>

#include <cmath>
#include <numbers>

#include "uvr/ctc_bounds.hpp"
#include "uvr/ctc_geometry.hpp"

using namespace uvr;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLog4 = 1.3862943611198906;
}  // namespace

TEST_CASE("gamma values") {
  CHECK(gamma_curve(0.0).real() == doctest::Approx(kLog4).epsilon(1e-15));
  CHECK(gamma_curve(0.0).imag() == doctest::Approx(0.0).epsilon(1e-15));

  const Complex at_pi = gamma_curve(kPi);
  CHECK(at_pi.real() == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(at_pi.imag() == doctest::Approx(kPi).epsilon(1e-14));

  // continuity across the breakpoint
  CHECK(std::abs(gamma_curve(kPi - 1e-6) - at_pi) < 1e-5);
  CHECK(std::abs(gamma_curve(kPi - 1e-6) - gamma_curve(kPi + 1e-6)) < 1e-5);

  CHECK_THROWS_AS(gamma_curve(kTwoPi), std::domain_error);
  CHECK_THROWS_AS(gamma_curve(-7.0), std::domain_error);
}

TEST_CASE("gamma symmetry and strip bound") {
  for (int i = 1; i < 500; ++i) {
    const double t = -kTwoPi + kTwoPi * i / 250.0 * 0.999;
    if (std::abs(t) >= kTwoPi) continue;
    CHECK(std::abs(gamma_curve(-t) - std::conj(gamma_curve(t))) < 1e-12);
    CHECK(std::abs(gamma_curve(t).imag()) < 1.5 * kPi);
  }
  CHECK(std::abs(gamma_curve(kTwoPi - 1e-9).imag()) > 1.5 * kPi - 1e-8);
}

TEST_CASE("one-sided tangents at the junction") {
  CHECK(gamma_tangent(kPi, JunctionSide::inner) == Complex(0.0, 1.5));
  CHECK(gamma_tangent(kPi, JunctionSide::outer) == Complex(0.0, 0.5));
  CHECK(std::arg(gamma_tangent(kPi, JunctionSide::inner)) == kPi / 2.0);
  CHECK(std::arg(gamma_tangent(kPi, JunctionSide::outer)) == kPi / 2.0);

  // approach from both sides
  CHECK(std::abs(gamma_tangent(kPi - 1e-8) - Complex(0.0, 1.5)) < 1e-7);
  CHECK(std::abs(gamma_tangent(kPi + 1e-8) - Complex(0.0, 0.5)) < 1e-7);

  // interior value and the slope relation on the outer piece
  CHECK(std::abs(gamma_tangent(0.0) - Complex(0.0, 0.75)) < 1e-15);
  const Complex g32 = gamma_tangent(1.5 * kPi);
  CHECK(std::arg(g32) == doctest::Approx(0.75 * kPi).epsilon(1e-14));
  CHECK(g32.imag() / g32.real() ==
        doctest::Approx(std::tan(0.75 * kPi)).epsilon(1e-12));
}

TEST_CASE("turning rate") {
  CHECK(gamma_turning_rate(kPi / 2.0) == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(gamma_turning_rate(1.5 * kPi) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(gamma_turning_rate(gamma_convexity_limit())) < 1e-14);

  // signs: convex, concave, convex
  CHECK(gamma_turning_rate(0.5) > 0.0);
  CHECK(gamma_turning_rate(2.5) < 0.0);
  CHECK(gamma_turning_rate(5.0) > 0.0);
  CHECK_THROWS_AS(gamma_turning_rate(kPi), std::domain_error);
  CHECK_THROWS_AS(gamma_turning_rate(-0.5), std::domain_error);
}

TEST_CASE("common tangent") {
  const TangencyPair tp = common_tangent(1e-10);

  // frozen from the solved system
  CHECK(tp.u == doctest::Approx(1.0111757585803892).epsilon(1e-10));
  CHECK(tp.v == doctest::Approx(3.6127088985903043).epsilon(1e-10));
  CHECK(tp.b0_geo == doctest::Approx(0.24001389878972313).epsilon(1e-12));

  CHECK(std::tan(tp.v / 2.0) ==
        doctest::Approx(-(3.0 + std::cos(tp.u)) / std::sin(tp.u)).epsilon(1e-10));
  CHECK(1.0 - std::cos(tp.v) ==
        doctest::Approx(std::pow(3.0 + std::cos(tp.u), 2) /
                        (5.0 + 3.0 * std::cos(tp.u)))
            .epsilon(1e-10));
  CHECK(tp.b0_geo ==
        doctest::Approx(-1.0 / std::tan(tp.v / 2.0)).epsilon(1e-12));
  CHECK(std::abs(tp.v / 2.0 -
                 (tp.u + kPi / 2.0 -
                  std::atan(3.0 * std::sin(tp.u) / (1.0 + 3.0 * std::cos(tp.u))))) <
        1e-10);

  // agreement with the analytic branch crossover
  CHECK(std::abs(tp.b0_geo - b0_root(1e-10)) < 1e-8);
}

TEST_CASE("hull boundary") {
  const TangencyPair tp = common_tangent();
  const BoundaryCurve hull = hull_boundary(512);
  REQUIRE(hull.samples.size() >= 500);
  CHECK(hull.breakpoints.size() == 4);

  double prev_t = -1e9;
  for (const auto& s : hull.samples) {
    CHECK(s.t > prev_t);
    prev_t = s.t;
    // no parameter may fall on the omitted stretch
    const bool on_gap =
        std::abs(s.t) > tp.u + 1e-12 && std::abs(s.t) < tp.v - 1e-12;
    CHECK_FALSE(on_gap);
    CHECK(std::abs(s.w.imag()) < 1.5 * kPi);
  }

  // vertex set closed under conjugation
  const auto& v = hull.samples;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex mirrored = std::conj(v[v.size() - 1 - i].w);
    CHECK(std::abs(v[i].w - mirrored) < 1e-12);
  }

  // negated flag mirrors into W(C) coordinates
  const BoundaryCurve neg = hull_boundary(512, true);
  for (std::size_t i = 0; i < v.size(); ++i)
    CHECK(neg.samples[i].w == -v[i].w);
}

TEST_CASE("region membership") {
  CHECK(region_contains(Complex(0.0, 0.0)));
  CHECK(region_contains(Complex(10.0, 0.0)));
  CHECK_FALSE(region_contains(Complex(-kLog4 - 0.01, 0.0)));
  CHECK_FALSE(region_contains(Complex(0.0, 1.5 * kPi)));   // strip bound
  CHECK_FALSE(region_contains(Complex(0.0, -5.0)));
  CHECK(region_contains(Complex(3.0, 4.0)));               // inside upper lobe

  // boundary tolerance: a point just outside the leftmost boundary point is
  // accepted once tol covers the polygon discretization (~5e-7 at n=4096)
  CHECK(region_contains(Complex(-kLog4 - 1e-12, 0.0), 50.0, 4096, 1e-5));
  CHECK_FALSE(region_contains(Complex(-kLog4 - 0.01, 0.0), 50.0, 4096, 1e-5));

  CHECK_THROWS_AS(RegionPolygon(1.0, 4096), std::domain_error);
  CHECK_THROWS_AS(RegionPolygon(50.0, 128), std::invalid_argument);
}

TEST_CASE("pointwise region via h") {
  const BoundaryCurve curve = pointwise_region_h(0.5, 512);
  REQUIRE(curve.samples.size() == 512);
  CHECK(curve.closed);

  // conjugation symmetry of the image of +-theta
  for (std::size_t k = 1; k < 256; ++k) {
    const Complex upper = curve.samples[k].w;
    const Complex lower = curve.samples[512 - k].w;
    CHECK(std::abs(upper - std::conj(lower)) < 1e-12);
  }

  // every pointwise boundary point lies in the full region
  for (const auto& s : curve.samples)
    CHECK(region_contains(s.w, 50.0, 4096, 1e-9));

  // shrink toward h(0) = 0
  const BoundaryCurve tiny = pointwise_region_h(1e-6, 64);
  for (const auto& s : tiny.samples) CHECK(std::abs(s.w) < 1e-5);

  CHECK_THROWS_AS(pointwise_region_h(0.0, 64), std::domain_error);
}

TEST_CASE("biernacki value") {
  CHECK(biernacki_value(Complex(1.0, 0.0), Complex(1.0, 0.0)) ==
        Complex(0.0, 0.0));
  // u = v = 1 - r collapses to -log(1 - r)
  for (double r : {0.2, 0.5, 0.8}) {
    const Complex w = biernacki_value(Complex(1.0 - r, 0.0), Complex(1.0 - r, 0.0));
    CHECK(w.real() == doctest::Approx(-std::log1p(-r)).epsilon(1e-14));
    CHECK(w.imag() == 0.0);
  }
  // real-axis extremes of the pointwise region
  CHECK(biernacki_value(Complex(0.5, 0.0), Complex(1.5, 0.0)).real() ==
        doctest::Approx(kLog4).epsilon(1e-14));
  CHECK(biernacki_value(Complex(1.5, 0.0), Complex(0.5, 0.0)).real() ==
        doctest::Approx(-std::log(2.25)).epsilon(1e-14));
}

TEST_CASE("biernacki sampling") {
  const auto cloud = biernacki_samples(0.5, 5000);
  REQUIRE(cloud.size() == 5000);

  // deterministic
  const auto again = biernacki_samples(0.5, 5000);
  for (std::size_t i = 0; i < cloud.size(); ++i) CHECK(cloud[i] == again[i]);

  // the cloud reaches the two real-axis extremes of the pointwise region:
  // -log(2 u^2/(u+v)) at (u,v)=(1.5,0.5) and (0.5,1.5)
  double lo = 1e9, hi = -1e9;
  for (const auto& w : cloud) {
    lo = std::min(lo, w.real());
    hi = std::max(hi, w.real());
  }
  CHECK(lo == doctest::Approx(-std::log(2.25)).epsilon(1e-2));
  CHECK(hi == doctest::Approx(kLog4).epsilon(1e-2));

  CHECK_THROWS_AS(biernacki_samples(0.0, 100), std::domain_error);
}
