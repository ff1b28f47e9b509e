#include <doctest.h>

#include <cmath>

#include "uvr/ctc_bounds.hpp"
#include "uvr/power_deformation.hpp"

using namespace uvr;

namespace {
constexpr double kLog4 = 1.3862943611198906;
}

TEST_CASE("power_bound special exponents") {
  const PowerBound identity = power_bound({1.0, 0.0});
  CHECK(identity.kind == BoundKind::infimum);
  CHECK(identity.value == doctest::Approx(-kLog4).epsilon(1e-15));

  const PowerBound reflected = power_bound({-1.0, 0.0});
  CHECK(reflected.kind == BoundKind::supremum);
  CHECK(reflected.value == doctest::Approx(kLog4).epsilon(1e-15));

  CHECK(power_bound({2.0, 0.2}).value ==
        doctest::Approx(-2.8027430780484964).epsilon(1e-14));

  CHECK_THROWS_AS(power_bound({0.0, 1.0}), std::domain_error);
}

TEST_CASE("power_bound equals a * phi_minus(b/a) on both branches") {
  for (double a : {0.5, 1.0, 2.0, -0.5, -1.0, -2.0}) {
    for (double b = -1.0; b <= 1.0001; b += 0.05) {
      const PowerBound pb = power_bound({a, b});
      CHECK(std::abs(pb.value - a * phi_ctc_minus(b / a)) < 1e-12);
      CHECK(pb.kind == (a > 0 ? BoundKind::infimum : BoundKind::supremum));
    }
  }
}

TEST_CASE("case-boundary continuity") {
  for (double a : {0.5, 1.0, 2.0, -1.0}) {
    const double b_cross = std::abs(a) * b0();
    const double below = power_bound({a, std::nextafter(b_cross, 0.0)}).value;
    const double above =
        power_bound({a, std::nextafter(b_cross, 2.0 * b_cross)}).value;
    CHECK(std::abs(below - above) < 1e-9);
  }
}

TEST_CASE("power_eval") {
  CHECK(power_eval(Complex(0.0, 0.0), {2.0, 0.3}) == 0.0);
  CHECK(power_eval(Complex(1.5, -0.7), {1.0, 0.0}) == 1.5);
  CHECK(power_eval(Complex(1.5, -0.7), {0.0, 1.0}) == 0.7);
  CHECK(power_eval(Complex(2.0, 3.0), {0.5, -0.25}) ==
        doctest::Approx(1.0 + 0.75).epsilon(1e-15));
}
