#pragma once

#include <cstddef>

#include "uvr/extended_real.hpp"
#include "uvr/types.hpp"

namespace uvr {

// Closed forms and regions for the univalent class S and for the
// starlike / convex subclasses.  All logarithms are principal-branch;
// every argument in scope has positive real part (1 - zeta with |zeta| < 1),
// so no winding tracking is required.

/// Variability region of log[f(z)/z] over S at |z| = r: the closed disk
/// with center -log(1 - r^2) and radius log((1+r)/(1-r)).
RegionDisk grunsky_region(double r);

/// Directional supremum over S at |z| = r:
/// (1 - cos t) log(1+r) - (1 + cos t) log(1-r).
double psi_s(double r, double t);

/// Full-disk extremal values over S: the supremum is +inf for every b,
/// the infimum is -inf unless b = 0, where it equals -log 4.
ExtendedReal phi_s(double b, BoundSign sign);

/// Pointwise extremal values over S at |z| = r; support values of the
/// linear functional u + b v over the disk region.
double phi_s_pointwise(double r, double b, BoundSign sign);

/// Region of log[f(z)/z] over the starlike (scale 2) or convex (scale 1)
/// class at |z| = r.
MarxRegion marx_region(double r, DiskClass cls);

/// n boundary samples theta -> -scale * log(1 - r e^{i theta}), closed
/// polyline over theta in [0, 2*pi).  r = 0 is rejected: a one-point
/// region has no boundary polyline.
BoundaryCurve marx_boundary(double r, DiskClass cls, std::size_t n);

/// Membership through the inverse map: |1 - exp(-w/scale)| <= r + tol.
bool marx_contains(Complex w, double r, DiskClass cls, double tol = 1e-9);

/// The two stationary angles of phi(theta) on [0, 2*pi), solving
/// sin(theta) - b cos(theta) + b r = 0.
CriticalAngles critical_angles(double r, double b);

/// Pointwise extremal values over the starlike class (halved for convex):
///   plus:  log(1+b^2) - 2 log(sqrt(D) - r) + 2b arctan(b r / sqrt(D))
///   minus: log(1+b^2) - 2 log(sqrt(D) + r) - 2b arctan(b r / sqrt(D))
/// with D = 1 + b^2 (1 - r^2).  r = 0 gives exactly 0.
double phi_star(double r, double b, BoundSign sign, DiskClass cls);

/// Full-disk infimum over the starlike class,
/// log(1+b^2) - log 4 - 2b arctan b, halved for convex.
double phi_star_full_minus(double b, DiskClass cls);

/// Full-disk pair: the supremum is +inf for both classes, the infimum is
/// phi_star_full_minus.
ExtendedReal phi_star_full(double b, BoundSign sign, DiskClass cls);

}  // namespace uvr
