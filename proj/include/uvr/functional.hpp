#pragma once

#include <cmath>

#include "uvr/extended_real.hpp"
#include "uvr/types.hpp"

namespace uvr {

/// Directions with |cos t| below this are rejected: the conversion between
/// the directional functional and the slope-parameter pair excludes
/// e^{it} = +-i.
inline constexpr double kAngleEpsilon = 1e-12;

/// Slope parameter for a direction angle: b = -tan t.
inline DirectionalParams directional_from_angle(double t) {
  if (std::abs(std::cos(t)) < kAngleEpsilon)
    throw std::domain_error(
        "direction-degenerate: |cos t| too small, no slope parameter");
  return DirectionalParams{t, -std::tan(t)};
}

/// Directional extremal value from the slope-parameter pair:
/// (cos t) * phi_plus when cos t > 0, (cos t) * phi_minus when cos t < 0.
/// The caller supplies phi_plus/phi_minus already evaluated at b = -tan t.
/// Infinite inputs propagate with the sign of cos t.
inline ExtendedReal psi_from_phi(double t, const ExtendedReal& phi_plus,
                                 const ExtendedReal& phi_minus) {
  const double c = std::cos(t);
  if (std::abs(c) < kAngleEpsilon)
    throw std::domain_error(
        "direction-degenerate: |cos t| too small for the phi conversion");
  return c > 0.0 ? c * phi_plus : c * phi_minus;
}

}  // namespace uvr
