#pragma once

#include <cstddef>
#include <vector>

#include "uvr/types.hpp"

namespace uvr {

// Geometry of the full close-to-convex region W(C): its boundary curve
// gamma, the common tangent that closes the convex hull of -W(C), the
// point-in-region test, and the two pointwise region descriptions used
// as cross-checking oracles.
//
// Branch policy: principal logarithms throughout.  Every log argument in
// scope provably has positive real part, except 1 + 3 e^{it} near t = pi,
// where the imaginary part keeps a fixed sign on each half (positive for
// t in (0, pi)), so the principal branch stays continuous.  A violated
// positivity assertion raises instead of silently unwinding.

/// Which side of a formula breakpoint to evaluate at |t| = pi.
enum class JunctionSide { inner, outer };

/// Boundary parametrization of -W(C) on (-2*pi, 2*pi):
///   log(1 + 3 e^{it})                      for |t| <  pi,
///   log(1 - e^{it}) + sign(t) * pi * i     for pi <= |t| < 2*pi.
Complex gamma_curve(double t);

/// Tangent vector gamma'(t).  At |t| = pi the two one-sided derivatives
/// differ (3i/2 inside, i/2 outside, for t = pi); `side` selects which one
/// and is ignored elsewhere.
Complex gamma_tangent(double t, JunctionSide side = JunctionSide::outer);

/// d/dt arg gamma'(t) on (0, 2*pi) \ {pi}: positive where the curve is
/// convex, negative on (arccos(-1/3), pi).
double gamma_turning_rate(double t);

/// Parameter of the convexity change on the inner piece, arccos(-1/3).
double gamma_convexity_limit();

/// Solves the common-tangent system: the line tangent to gamma at some
/// u in (0, arccos(-1/3)) and again at v in (pi, 2*pi).  Bisection on the
/// tangency equation followed by a Newton polish; all residuals of the
/// tangency conditions are verified below `tol` before returning.
TangencyPair common_tangent(double tol = 1e-12);

/// Boundary polyline of the convex hull of -W(C): gamma restricted to
/// [-u, u] and [v, 2*pi) with the two tangent chords bridging the gaps
/// (and the conjugate arm).  `negated` returns it in W(C) coordinates.
BoundaryCurve hull_boundary(std::size_t n, bool negated = false);

/// Polygonal model of W(C): the curve -gamma sampled densely (cosine-spaced
/// parameter, refined toward the asymptotic arms) and closed off at
/// Re w = clip_x.  Build once, query many times.
class RegionPolygon {
 public:
  RegionPolygon(double clip_x, std::size_t n);

  /// True iff w lies inside the polygon or within `tol` of its boundary.
  /// Points at or beyond the strip |Im w| >= 3*pi/2 are rejected outright.
  bool contains(Complex w, double tol = 1e-9) const;

  const std::vector<Complex>& vertices() const { return vertices_; }

 private:
  std::vector<Complex> vertices_;
  double clip_x_;
};

/// Convenience wrapper over RegionPolygon; the default-parameter polygon is
/// built once and shared.
bool region_contains(Complex w, double clip_x = 50.0, std::size_t n = 4096,
                     double tol = 1e-9);

/// Image of the circle |z| = r under
///   h(z) = log(1 + z e^{2 i phi}) - 3 log(1 + z),  phi = arg(1 + z/3),
/// the boundary of the pointwise region at radius r.
BoundaryCurve pointwise_region_h(double r, std::size_t n);

/// -log[2 u^2 / (u + v)] on the continuous branch; requires Re u > 0 and
/// Re(u + v) > 0, which holds whenever both lie in a disk |. - 1| <= r
/// with r < 1.
Complex biernacki_value(Complex u, Complex v);

/// m points biernacki_value(u, v) with u, v drawn deterministically from
/// the disks |u - 1| <= r, |v - 1| <= r: a complete angle grid over
/// boundary-boundary pairs plus a low-discrepancy interior fill.  This is
/// the second, independent description of the pointwise region.
std::vector<Complex> biernacki_samples(double r, std::size_t m);

}  // namespace uvr
