#include "uvr/disk_classes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uvr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_radius(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error(std::string(who) + ": radius must lie in [0, 1)");
}

double class_scale(DiskClass cls) { return cls == DiskClass::star ? 2.0 : 1.0; }

double wrap_angle(double x) {
  x = std::fmod(x, kTwoPi);
  return x < 0.0 ? x + kTwoPi : x;
}

}  // namespace

RegionDisk grunsky_region(double r) {
  require_radius(r, "grunsky_region");
  return RegionDisk{Complex(-std::log1p(-r * r), 0.0),
                    std::log1p(r) - std::log1p(-r)};
}

double psi_s(double r, double t) {
  require_radius(r, "psi_s");
  const double c = std::cos(t);
  return (1.0 - c) * std::log1p(r) - (1.0 + c) * std::log1p(-r);
}

ExtendedReal phi_s(double b, BoundSign sign) {
  if (sign == BoundSign::plus) return ExtendedReal::pos_inf();
  if (b == 0.0) return ExtendedReal::finite(-std::log(4.0));
  return ExtendedReal::neg_inf();
}

double phi_s_pointwise(double r, double b, BoundSign sign) {
  require_radius(r, "phi_s_pointwise");
  const RegionDisk disk = grunsky_region(r);
  // Support value of u + b v over a disk centered on the real axis.
  const double reach = disk.radius * std::sqrt(1.0 + b * b);
  return disk.center.real() + (sign == BoundSign::plus ? reach : -reach);
}

MarxRegion marx_region(double r, DiskClass cls) {
  require_radius(r, "marx_region");
  return MarxRegion{r, class_scale(cls)};
}

BoundaryCurve marx_boundary(double r, DiskClass cls, std::size_t n) {
  if (r == 0.0)
    throw std::domain_error(
        "marx_boundary: degenerate-region, r = 0 is a single point");
  require_radius(r, "marx_boundary");
  if (n < 8) throw std::invalid_argument("marx_boundary: need n >= 8");

  const double scale = class_scale(cls);
  BoundaryCurve curve;
  curve.closed = true;
  curve.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const Complex zeta = r * std::exp(Complex(0.0, theta));
    // Re(1 - zeta) >= 1 - r > 0, so the principal log is the right branch.
    curve.samples.push_back({theta, -scale * std::log(1.0 - zeta)});
  }
  return curve;
}

bool marx_contains(Complex w, double r, DiskClass cls, double tol) {
  require_radius(r, "marx_contains");
  return marx_region(r, cls).contains(w, tol);
}

CriticalAngles critical_angles(double r, double b) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("critical_angles: radius must lie in (0, 1)");
  const double disc = 1.0 + b * b * (1.0 - r * r);  // >= 1 always
  const double root = std::sqrt(disc);
  const double denom = 1.0 + b * b;
  const double c1 = (b * b * r + root) / denom;
  const double s1 = (b * root - b * r) / denom;
  const double c2 = (b * b * r - root) / denom;
  const double s2 = (-b * root - b * r) / denom;
  return CriticalAngles{wrap_angle(std::atan2(s1, c1)),
                        wrap_angle(std::atan2(s2, c2))};
}

double phi_star(double r, double b, BoundSign sign, DiskClass cls) {
  require_radius(r, "phi_star");
  if (r == 0.0) return 0.0;
  const double disc = 1.0 + b * b * (1.0 - r * r);
  const double root = std::sqrt(disc);
  const double common = std::log1p(b * b);
  const double star = sign == BoundSign::plus
                          ? common - 2.0 * std::log(root - r) +
                                2.0 * b * std::atan(b * r / root)
                          : common - 2.0 * std::log(root + r) -
                                2.0 * b * std::atan(b * r / root);
  return cls == DiskClass::star ? star : 0.5 * star;
}

double phi_star_full_minus(double b, DiskClass cls) {
  const double star = std::log1p(b * b) - std::log(4.0) - 2.0 * b * std::atan(b);
  return cls == DiskClass::star ? star : 0.5 * star;
}

ExtendedReal phi_star_full(double b, BoundSign sign, DiskClass cls) {
  if (sign == BoundSign::plus) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(phi_star_full_minus(b, cls));
}

}  // namespace uvr
