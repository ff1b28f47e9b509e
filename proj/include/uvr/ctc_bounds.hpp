#pragma once

#include "uvr/extended_real.hpp"
#include "uvr/types.hpp"

namespace uvr {

// Sharp full-disk extremal values for close-to-convex functions: the two
// branches p and q of the infimum functional, their unique crossover b0,
// and the directional infimum.

/// Right endpoint of the p-branch domain, 1/(2*sqrt(2)).
inline constexpr double kPBranchLimit = 0.35355339059327373;

enum class Branch { p, q };

/// One evaluated branch point; the p branch only exists for
/// |b| <= 1/(2*sqrt(2)).
struct BranchValue {
  double b;
  Branch branch;
  double value;
};

BranchValue branch_value(double b, Branch which);

/// First branch of the infimum (support point on the convex cap):
///   p(b) = -1/2 log[2 (5 - 4b^2 + 3 sqrt(1-8b^2)) / (1+b^2)]
///          - b arctan(3b / sqrt(1-8b^2)),
/// defined for |b| <= 1/(2*sqrt(2)), with the analytic limit at the
/// endpoint (arctan term -> pi/2 * sign b).
double p_branch(double b);

/// Second branch (support point on the outer arm):
///   q(b) = 1/2 log(1+b^2) - log 2 - b (arctan b + pi).
double q_branch(double b);

/// The unique root of q(b) = p(b) in (0, 1/(2*sqrt(2))), by bisection;
/// q - p is strictly decreasing there, so the bracket cannot fail.
/// Stops once |q - p| < tol at the returned point.
double b0_root(double tol = 1e-12);

/// Cached high-precision b0, computed once on first use.
double b0();

/// Infimum functional as a plain double: p(|b|) for |b| <= b0, else q(|b|).
/// Even in b by the symmetry of the region.
double phi_ctc_minus(double b);

/// Full-disk extremal pair for close-to-convex functions: the supremum is
/// +inf for every b, the infimum is phi_ctc_minus.
ExtendedReal phi_ctc(double b, BoundSign sign);

/// Directional infimum for |t| < pi/2, the two-case closed form equal to
/// (cos t) * phi_ctc(tan t, minus).  (The supremum in this direction is
/// +inf, so only the infimum carries a finite closed form.)
double psi_minus_ctc(double t);

}  // namespace uvr
