#include "uvr/ctc_bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uvr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

}  // namespace

double p_branch(double b) {
  const double ab = std::abs(b);
  if (ab > kPBranchLimit)
    throw std::domain_error("p_branch: |b| must not exceed 1/(2*sqrt(2))");

  const double under = 1.0 - 8.0 * b * b;
  const double root = under > 0.0 ? std::sqrt(under) : 0.0;
  // At the endpoint the square root vanishes and the arctan saturates.
  const double at = root > 0.0 ? std::atan(3.0 * b / root)
                               : std::copysign(kHalfPi, b);
  return -0.5 * std::log(2.0 * (5.0 - 4.0 * b * b + 3.0 * root) / (1.0 + b * b)) -
         b * at;
}

double q_branch(double b) {
  return 0.5 * std::log1p(b * b) - std::log(2.0) - b * (std::atan(b) + kPi);
}

BranchValue branch_value(double b, Branch which) {
  return BranchValue{b, which,
                     which == Branch::p ? p_branch(b) : q_branch(b)};
}

double b0_root(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("b0_root: tol must be > 0");

  auto gap = [](double b) { return q_branch(b) - p_branch(b); };

  // gap(0) = log 2 > 0, gap at the right endpoint < 0, and the gap is
  // strictly decreasing in between.
  double lo = 0.0;
  double hi = kPBranchLimit;
  for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  if (std::abs(gap(root)) >= tol)
    throw std::runtime_error("b0_root: residual tolerance not reached");
  return root;
}

double b0() {
  static const double cached = b0_root(1e-12);
  return cached;
}

double phi_ctc_minus(double b) {
  const double ab = std::abs(b);
  return ab <= b0() ? p_branch(ab) : q_branch(ab);
}

ExtendedReal phi_ctc(double b, BoundSign sign) {
  if (sign == BoundSign::plus) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(phi_ctc_minus(b));
}

double psi_minus_ctc(double t) {
  if (!(std::abs(t) < kHalfPi))
    throw std::domain_error("psi_minus_ctc: need |t| < pi/2");

  const double c = std::cos(t);
  const double s = std::sin(t);
  const double tt = std::tan(t);

  if (std::abs(tt) <= b0()) {
    const double root = std::sqrt(1.0 - 8.0 * tt * tt);
    return -0.5 * c * std::log(2.0 * (9.0 * c * c - 4.0 + 3.0 * c * c * root)) -
           s * std::atan(3.0 * tt / root);
  }
  return -c * std::log(2.0 * c) - std::abs(s) * (std::abs(t) + kPi);
}

}  // namespace uvr
