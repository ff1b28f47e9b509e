#pragma once

#include "uvr/types.hpp"

namespace uvr {

// Sharp bounds for log|f_c(z)/z| under the power deformation
// f_c(z) = z (f(z)/z)^c over close-to-convex f, where c = a + b i.

struct PowerExponent {
  double a;  // real part of the exponent
  double b;  // imaginary part
};

enum class BoundKind { infimum, supremum };

struct PowerBound {
  BoundKind kind;
  double value;
};

/// Sharp bound for log|f_c(z)/z| over all close-to-convex f and all z:
/// an infimum when a > 0, a supremum when a < 0.  The two-case closed form
/// switches branches at |b/a| = b0.  a = 0 has no stated sharp constant
/// and is rejected.
PowerBound power_bound(PowerExponent c);

/// log|f_c(z)/z| from logw = log[f(z)/z]:  a * Re(logw) - b * Im(logw).
double power_eval(Complex logw, PowerExponent c);

}  // namespace uvr
