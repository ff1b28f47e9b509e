#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace uvr {

using Complex = std::complex<double>;

/// Sign selector for the paired extremal functionals (supremum / infimum).
enum class BoundSign { plus, minus };

/// The two classes whose variability region is a log-image of a disk:
/// starlike (scale 2) and convex (scale 1).
enum class DiskClass { star, convex };

/// Evaluation radius |z|.  All classes handled here are rotationally
/// invariant, so the radius is the only pointwise parameter that matters.
class EvalPoint {
 public:
  explicit EvalPoint(double r) : r_(r) {
    if (!(r >= 0.0 && r < 1.0))
      throw std::domain_error("EvalPoint: radius must lie in [0, 1)");
  }
  double r() const { return r_; }

 private:
  double r_;
};

/// Direction angle t and the associated slope parameter b = -tan t.
struct DirectionalParams {
  double t;
  double b;
};

/// Closed disk in the w-plane.
struct RegionDisk {
  Complex center;
  double radius;

  bool contains(Complex w, double tol = 1e-9) const {
    return std::abs(w - center) <= radius + tol;
  }
};

/// Region of the form { -scale * log(1 - zeta) : |zeta| <= r }.
/// Membership is tested through the inverse map, which is exact.
struct MarxRegion {
  double r;
  double scale;  // 2 for starlike, 1 for convex

  bool contains(Complex w, double tol = 1e-9) const {
    return std::abs(1.0 - std::exp(-w / scale)) <= r + tol;
  }
};

/// The two stationary angles of the boundary functional on a Marx circle,
/// normalized to [0, 2*pi).
struct CriticalAngles {
  double theta1;
  double theta2;
};

/// Piecewise-parametric boundary polyline.  `breakpoints` lists parameter
/// values where the defining formula switches; `closed` marks loops
/// (the last sample connects back to the first).
struct BoundaryCurve {
  struct Sample {
    double t;
    Complex w;
  };

  std::vector<Sample> samples;
  std::vector<double> breakpoints;
  bool closed = false;
};

/// Solution of the common-tangent system: parameters of the two tangency
/// points and the slope parameter they determine.
struct TangencyPair {
  double u;       // tangency on the convex cap, 0 < u < arccos(-1/3)
  double v;       // tangency on the outer branch, pi < v < 2*pi
  double b0_geo;  // sin(u)/(3+cos(u)) = -cot(v/2)
};

/// Finitely supported probability measure on the circle.
struct AtomicMeasure {
  struct Atom {
    double angle;   // in [0, 2*pi)
    double weight;  // > 0
  };

  std::vector<Atom> atoms;

  double total_weight() const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.weight;
    return s;
  }

  /// Enforces the invariants: nonempty, positive weights, total 1 within 1e-14.
  void validate() const;
};

/// Close-to-convex sample description: f' = g' * p where g is convex
/// (built from `convex_measure`) and p has positive real part with p(0)=1
/// (built from `herglotz_measure`).
struct CtcSample {
  AtomicMeasure convex_measure;
  AtomicMeasure herglotz_measure;
  std::uint64_t seed = 0;
};

}  // namespace uvr
