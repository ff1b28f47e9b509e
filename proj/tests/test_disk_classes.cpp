#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uvr/disk_classes.hpp"
#include "uvr/oracles.hpp"

using namespace uvr;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLog4 = 1.3862943611198906;
}  // namespace

TEST_CASE("grunsky disk") {
  SUBCASE("r=0 degenerates to the origin") {
    const RegionDisk d = grunsky_region(0.0);
    CHECK(d.center == Complex(0.0, 0.0));
    CHECK(d.radius == 0.0);
  }
  SUBCASE("r=0.5") {
    const RegionDisk d = grunsky_region(0.5);
    CHECK(d.center.real() == doctest::Approx(0.2876820724517809).epsilon(1e-15));
    CHECK(d.radius == doctest::Approx(1.0986122886681098).epsilon(1e-15));
  }
  SUBCASE("r=0.9 radius is log 19") {
    CHECK(grunsky_region(0.9).radius ==
          doctest::Approx(std::log(19.0)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(grunsky_region(1.0), std::domain_error);
  CHECK_THROWS_AS(grunsky_region(-0.1), std::domain_error);
}

TEST_CASE("psi over S") {
  CHECK(psi_s(0.5, kPi) == doctest::Approx(0.8109302162163288).epsilon(1e-15));
  CHECK(psi_s(0.0, 1.234) == 0.0);
  CHECK(psi_s(0.5, 0.0) == doctest::Approx(kLog4).epsilon(1e-15));

  // direct formula equals the disk support value at matching direction
  for (double r : {0.2, 0.6, 0.9}) {
    for (double t : {0.1, 1.0, 2.0, 3.0}) {
      const double b = -std::tan(t);
      const double via_disk =
          std::cos(t) * phi_s_pointwise(r, b, std::cos(t) > 0 ? BoundSign::plus
                                                              : BoundSign::minus);
      CHECK(via_disk == doctest::Approx(psi_s(r, t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("full-disk phi over S") {
  CHECK(phi_s(1.0, BoundSign::plus).is_pos_inf());
  CHECK(phi_s(-0.3, BoundSign::minus).is_neg_inf());
  CHECK(phi_s(0.0, BoundSign::minus).value() ==
        doctest::Approx(-kLog4).epsilon(1e-15));
}

TEST_CASE("marx boundary and membership") {
  SUBCASE("boundary points satisfy the inverse identity") {
    const BoundaryCurve curve = marx_boundary(0.5, DiskClass::star, 256);
    REQUIRE(curve.samples.size() == 256);
    CHECK(curve.closed);
    for (const auto& s : curve.samples) {
      const double back = std::abs(1.0 - std::exp(-s.w / 2.0));
      CHECK(back == doctest::Approx(0.5).epsilon(1e-12));
    }
    // real-axis points
    CHECK(curve.samples[0].w.real() == doctest::Approx(kLog4).epsilon(1e-15));
    CHECK(curve.samples[128].w.real() ==
          doctest::Approx(-0.8109302162163288).epsilon(1e-14));
  }
  SUBCASE("membership") {
    CHECK(marx_contains(Complex(0.0, 0.0), 0.3, DiskClass::star));
    CHECK(marx_contains(Complex(kLog4, 0.0), 0.5, DiskClass::star));  // boundary
    CHECK_FALSE(marx_contains(Complex(1.0, 3.0), 0.1, DiskClass::star));
  }
  CHECK_THROWS_AS(marx_boundary(0.0, DiskClass::star, 64), std::domain_error);
  CHECK_THROWS_AS(marx_boundary(0.5, DiskClass::star, 4), std::invalid_argument);
}

TEST_CASE("critical angles") {
  SUBCASE("b=0 pins the real axis") {
    const CriticalAngles a = critical_angles(0.5, 0.0);
    CHECK(a.theta1 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(a.theta2 == doctest::Approx(kPi).epsilon(1e-15));
  }
  SUBCASE("stationarity residual") {
    for (double r : {0.1, 0.5, 0.9}) {
      for (double b : {-3.0, -1.0, 0.5, 1.0, 4.0}) {
        const CriticalAngles a = critical_angles(r, b);
        for (double theta : {a.theta1, a.theta2}) {
          CHECK(theta >= 0.0);
          CHECK(theta < 2.0 * kPi);
          const double res = std::sin(theta) - b * std::cos(theta) + b * r;
          CHECK(std::abs(res) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("critical angles carry the extremal values") {
  // the closed form equals max/min over the two stationary angles, with no
  // assumption about which angle wins
  auto phi_at = [](double r, double b, double theta) {
    return -std::log(1.0 + r * r - 2.0 * r * std::cos(theta)) +
           2.0 * b * std::atan(r * std::sin(theta) / (1.0 - r * std::cos(theta)));
  };
  for (double r : {0.1, 0.5, 0.9}) {
    for (double b : {-4.0, -1.0, -0.2, 0.0, 0.3, 1.5, 5.0}) {
      const CriticalAngles a = critical_angles(r, b);
      const double v1 = phi_at(r, b, a.theta1);
      const double v2 = phi_at(r, b, a.theta2);
      CHECK(std::max(v1, v2) ==
            doctest::Approx(phi_star(r, b, BoundSign::plus, DiskClass::star))
                .epsilon(1e-12));
      CHECK(std::min(v1, v2) ==
            doctest::Approx(phi_star(r, b, BoundSign::minus, DiskClass::star))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("pointwise phi over the starlike class") {
  CHECK(phi_star(0.5, 0.0, BoundSign::minus, DiskClass::star) ==
        doctest::Approx(-0.8109302162163288).epsilon(1e-15));
  CHECK(phi_star(0.5, 0.0, BoundSign::plus, DiskClass::star) ==
        doctest::Approx(kLog4).epsilon(1e-15));
  CHECK(phi_star(0.0, 2.0, BoundSign::plus, DiskClass::star) == 0.0);

  // frozen against the refined grid oracle
  CHECK(phi_star(0.5, 1.0, BoundSign::plus, DiskClass::star) ==
        doctest::Approx(1.8057817814891022).epsilon(1e-13));
  CHECK(phi_star(0.5, 1.0, BoundSign::minus, DiskClass::star) ==
        doctest::Approx(-1.2304176365855403).epsilon(1e-13));
  const Extremum mx = grid_extremum(0.5, 1.0, ExtremumKind::max);
  CHECK(std::abs(mx.value - phi_star(0.5, 1.0, BoundSign::plus, DiskClass::star)) <
        1e-9);
}

TEST_CASE("full-disk phi over starlike and convex classes") {
  CHECK(phi_star_full_minus(0.0, DiskClass::star) ==
        doctest::Approx(-kLog4).epsilon(1e-15));
  CHECK(phi_star_full_minus(0.0, DiskClass::convex) ==
        doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  CHECK(phi_star_full_minus(1.0, DiskClass::star) ==
        doctest::Approx(-2.2639435073548419).epsilon(1e-14));
  CHECK(phi_star_full(3.0, BoundSign::plus, DiskClass::star).is_pos_inf());
  CHECK(phi_star_full(3.0, BoundSign::plus, DiskClass::convex).is_pos_inf());

  // limit of the pointwise value as r -> 1^-
  double prev_gap = 1e9;
  for (int k = 2; k <= 6; ++k) {
    const double r = 1.0 - std::pow(10.0, -k);
    const double gap = std::abs(phi_star(r, 1.0, BoundSign::minus, DiskClass::star) -
                                phi_star_full_minus(1.0, DiskClass::star));
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-5);
}

TEST_CASE("sum identity and halving on a grid") {
  for (double r : {0.05, 0.35, 0.65, 0.95}) {
    for (double b : {-5.0, -1.2, 0.0, 0.7, 5.0}) {
      const double plus = phi_star(r, b, BoundSign::plus, DiskClass::star);
      const double minus = phi_star(r, b, BoundSign::minus, DiskClass::star);
      CHECK(std::abs(plus + minus + 2.0 * std::log1p(-r * r)) < 1e-10);
      CHECK(phi_star(r, b, BoundSign::plus, DiskClass::convex) ==
            doctest::Approx(0.5 * plus).epsilon(1e-14));
    }
  }
}
