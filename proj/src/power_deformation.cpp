#include "uvr/power_deformation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uvr/ctc_bounds.hpp"

namespace uvr {

PowerBound power_bound(PowerExponent c) {
  const double a = c.a;
  const double b = c.b;
  if (a == 0.0)
    throw std::domain_error(
        "power_bound: degenerate-exponent, a = 0 has no sharp closed form");

  const double aa = std::abs(a);
  const double ab = std::abs(b);
  const double sign_a = a > 0.0 ? 1.0 : -1.0;

  double value;
  if (ab / aa <= b0()) {
    const double root = std::sqrt(a * a - 8.0 * b * b);
    value = -0.5 * a *
                std::log(2.0 * (5.0 * a * a - 4.0 * b * b + 3.0 * aa * root) /
                         (a * a + b * b)) -
            sign_a * ab * std::atan(3.0 * ab / root);
  } else {
    value = 0.5 * a * std::log(a * a + b * b) - a * std::log(2.0 * aa) -
            sign_a * ab * (std::atan(ab / aa) + std::numbers::pi);
  }
  return PowerBound{a > 0.0 ? BoundKind::infimum : BoundKind::supremum, value};
}

double power_eval(Complex logw, PowerExponent c) {
  return c.a * logw.real() - c.b * logw.imag();
}

}  // namespace uvr
