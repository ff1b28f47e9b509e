#include "uvr/ctc_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uvr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStripHalfWidth = 1.5 * std::numbers::pi;

void require_gamma_domain(double t) {
  if (!(std::abs(t) < kTwoPi))
    throw std::domain_error("gamma_curve: parameter must satisfy |t| < 2*pi");
}

Complex unit(double t) { return Complex(std::cos(t), std::sin(t)); }

// Inner-piece tangent 3 i e^{it} / (1 + 3 e^{it}); exact one-sided constants
// at |t| = pi, where 1 + 3 e^{it} = -2 exactly.
Complex tangent_inner(double t) {
  if (std::abs(t) == kPi) return Complex(0.0, t > 0 ? 1.5 : -1.5);
  const Complex e = unit(t);
  return Complex(0.0, 3.0) * e / (1.0 + 3.0 * e);
}

// Outer-piece tangent -i e^{it} / (1 - e^{it}); exact at |t| = pi.
Complex tangent_outer(double t) {
  if (std::abs(t) == kPi) return Complex(0.0, t > 0 ? 0.5 : -0.5);
  const Complex e = unit(t);
  return Complex(0.0, -1.0) * e / (1.0 - e);
}

double alpha_of(double u) {
  return std::atan(3.0 * std::sin(u) / (1.0 + 3.0 * std::cos(u)));
}

// Tangency equation for the common tangent, as a residual in u:
//   -(3+cos u)/sin u = (u + pi - 2 alpha) / (log(3+cos u) - log(5+3 cos u)).
double tangency_residual(double u) {
  const double lhs = -(3.0 + std::cos(u)) / std::sin(u);
  const double rhs = (u + kPi - 2.0 * alpha_of(u)) /
                     (std::log(3.0 + std::cos(u)) - std::log(5.0 + 3.0 * std::cos(u)));
  return lhs - rhs;
}

}  // namespace

Complex gamma_curve(double t) {
  require_gamma_domain(t);
  if (std::abs(t) < kPi) {
    const Complex arg = 1.0 + 3.0 * unit(t);
    // Re > 0 for |t| < arccos(-1/3); beyond that Im keeps the sign of t,
    // so the principal branch is still the continuous one.
    return std::log(arg);
  }
  const Complex arg = 1.0 - unit(t);
  // 1 - cos t rounds to zero within ~1e-9 of |t| = 2*pi; the value then sits
  // on the imaginary axis, still clear of the branch cut.
  if (arg.real() < 0.0 || (arg.real() == 0.0 && arg.imag() == 0.0))
    throw std::logic_error("gamma_curve: branch positivity violated");
  return std::log(arg) + Complex(0.0, t > 0 ? kPi : -kPi);
}

Complex gamma_tangent(double t, JunctionSide side) {
  require_gamma_domain(t);
  if (std::abs(t) < kPi) return tangent_inner(t);
  if (std::abs(t) == kPi && side == JunctionSide::inner) return tangent_inner(t);
  return tangent_outer(t);
}

double gamma_turning_rate(double t) {
  if (!(t > 0.0 && t < kTwoPi) || t == kPi)
    throw std::domain_error("gamma_turning_rate: need t in (0, 2*pi) \\ {pi}");
  if (t < kPi) {
    const double norm2 = std::norm(1.0 + 3.0 * unit(t));
    return (1.0 + 3.0 * std::cos(t)) / norm2;
  }
  const double norm2 = std::norm(1.0 - unit(t));
  return (1.0 - std::cos(t)) / norm2;
}

double gamma_convexity_limit() { return std::acos(-1.0 / 3.0); }

TangencyPair common_tangent(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("common_tangent: tol must be > 0");

  // The residual runs from -inf at u -> 0+ to a positive value at the
  // convexity limit; bisection cannot lose the root.
  const double delta = 1e-6;
  double lo = delta;
  double hi = gamma_convexity_limit() - delta;
  double flo = tangency_residual(lo);
  double fhi = tangency_residual(hi);
  if (!(flo < 0.0 && fhi > 0.0))
    throw std::runtime_error("common_tangent: tangency-not-found (no bracket)");

  for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = tangency_residual(mid);
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  double u = 0.5 * (lo + hi);

  // Newton polish with a numerical derivative.
  for (int i = 0; i < 4; ++i) {
    const double h = 1e-7;
    const double f = tangency_residual(u);
    const double df = (tangency_residual(u + h) - tangency_residual(u - h)) / (2.0 * h);
    const double step = f / df;
    if (!std::isfinite(step)) break;
    const double next = u - step;
    if (next > lo && next < hi) u = next;
  }

  const double alpha = alpha_of(u);
  const double v = 2.0 * u + kPi - 2.0 * alpha;
  const double b0_geo = std::sin(u) / (3.0 + std::cos(u));

  // All three tangency conditions must hold: equal tangent directions and
  // the chord aligned with them.
  const double dir_u = std::arg(gamma_tangent(u));
  const double dir_v = std::arg(gamma_tangent(v));
  const double dir_chord = std::arg(gamma_curve(v) - gamma_curve(u));
  if (std::abs(dir_u - dir_v) > tol || std::abs(dir_u - dir_chord) > tol ||
      std::abs(v / 2.0 - (u + kPi / 2.0 - alpha)) > tol)
    throw std::runtime_error("common_tangent: tangency-not-found (residuals)");

  return TangencyPair{u, v, b0_geo};
}

BoundaryCurve hull_boundary(std::size_t n, bool negated) {
  if (n < 64) throw std::invalid_argument("hull_boundary: need n >= 64");

  const TangencyPair tp = common_tangent();
  const double t_end = kTwoPi - 1e-6;

  // Three sampled pieces; the two tangent chords are drawn implicitly by
  // consecutive samples at the piece junctions.
  const std::size_t n_arm = n / 4;
  const std::size_t n_cap = n - 2 * n_arm;

  BoundaryCurve curve;
  curve.breakpoints = {-tp.v, -tp.u, tp.u, tp.v};
  curve.samples.reserve(n);

  auto emit_range = [&](double a, double b, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const double t = a + (b - a) * static_cast<double>(i) /
                               static_cast<double>(count - 1);
      Complex w = gamma_curve(t);
      if (negated) w = -w;
      curve.samples.push_back({t, w});
    }
  };

  emit_range(-t_end, -tp.v, n_arm);
  emit_range(-tp.u, tp.u, n_cap);
  emit_range(tp.v, t_end, n_arm);
  return curve;
}

RegionPolygon::RegionPolygon(double clip_x, std::size_t n) : clip_x_(clip_x) {
  if (!(clip_x > std::log(4.0)))
    throw std::domain_error("RegionPolygon: clip_x must exceed log 4");
  if (n < 1024) throw std::invalid_argument("RegionPolygon: need n >= 1024");

  // Boundary of W(C) is -gamma.  Sample with cosine spacing so density
  // rises toward the asymptotic arms at |t| -> 2*pi, stop a hair short of
  // the endpoint, and extend each arm horizontally to the clipping line.
  // The true boundary approaches Im = -+3*pi/2 exponentially fast, so the
  // horizontal extension is below 1e-9 off the curve at the cut.
  const double t_max = kTwoPi - 1e-9;
  vertices_.reserve(n + 2);

  const Complex first = -gamma_curve(-t_max);
  vertices_.push_back(Complex(clip_x, first.imag()));
  for (std::size_t i = 0; i < n; ++i) {
    const double s = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    const double t = t_max * std::sin(s * kPi / 2.0);
    vertices_.push_back(-gamma_curve(t));
  }
  const Complex last = vertices_.back();
  vertices_.push_back(Complex(clip_x, last.imag()));
}

bool RegionPolygon::contains(Complex w, double tol) const {
  if (std::abs(w.imag()) >= kStripHalfWidth) return false;
  if (w.real() > clip_x_) return false;

  // Crossing parity, with an edge-distance fallback so boundary points
  // within tol count as inside.
  bool inside = false;
  double min_dist2 = std::numeric_limits<double>::infinity();
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
    const Complex& a = vertices_[j];
    const Complex& b = vertices_[i];
    const bool crosses = (a.imag() > w.imag()) != (b.imag() > w.imag());
    if (crosses) {
      const double x_cross =
          a.real() + (w.imag() - a.imag()) * (b.real() - a.real()) /
                         (b.imag() - a.imag());
      if (w.real() < x_cross) inside = !inside;
    }
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double s = len2 > 0.0
                   ? ((w.real() - a.real()) * ab.real() +
                      (w.imag() - a.imag()) * ab.imag()) / len2
                   : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    min_dist2 = std::min(min_dist2, std::norm(w - (a + s * ab)));
  }
  return inside || min_dist2 <= tol * tol;
}

bool region_contains(Complex w, double clip_x, std::size_t n, double tol) {
  if (clip_x == 50.0 && n == 4096) {
    static const RegionPolygon shared(50.0, 4096);
    return shared.contains(w, tol);
  }
  return RegionPolygon(clip_x, n).contains(w, tol);
}

BoundaryCurve pointwise_region_h(double r, std::size_t n) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("pointwise_region_h: radius must lie in (0, 1)");
  if (n < 8) throw std::invalid_argument("pointwise_region_h: need n >= 8");

  BoundaryCurve curve;
  curve.closed = true;
  curve.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const Complex z = r * unit(theta);
    const double phi = std::arg(1.0 + z / 3.0);
    const Complex a = 1.0 + z * std::exp(Complex(0.0, 2.0 * phi));
    const Complex b = 1.0 + z;
    if (!(a.real() > 0.0 && b.real() > 0.0))
      throw std::logic_error("pointwise_region_h: branch positivity violated");
    curve.samples.push_back({theta, std::log(a) - 3.0 * std::log(b)});
  }
  return curve;
}

Complex biernacki_value(Complex u, Complex v) {
  if (!(u.real() > 0.0 && (u + v).real() > 0.0))
    throw std::domain_error("biernacki_value: branch positivity violated");
  return -(std::log(2.0) + 2.0 * std::log(u) - std::log(u + v));
}

std::vector<Complex> biernacki_samples(double r, std::size_t m) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("biernacki_samples: radius must lie in (0, 1)");
  if (m < 1) throw std::invalid_argument("biernacki_samples: need m >= 1");

  std::vector<Complex> out;
  out.reserve(m);

  // The region's extreme points come from boundary-boundary pairs, so half
  // the budget is a complete K x K angle grid with both radii pinned to r.
  const std::size_t grid_k =
      static_cast<std::size_t>(std::sqrt(static_cast<double>(m / 2)));
  for (std::size_t n = 0; n < grid_k * grid_k; ++n) {
    const double au = kTwoPi * (static_cast<double>(n % grid_k) + 0.5) /
                      static_cast<double>(grid_k);
    const double av = kTwoPi * (static_cast<double>(n / grid_k) + 0.5) /
                      static_cast<double>(grid_k);
    out.push_back(biernacki_value(1.0 + r * unit(au), 1.0 + r * unit(av)));
  }

  // Interior fill: deterministic Kronecker sweep mixing boundary and
  // interior radii.
  constexpr double kAngleStep1 = 0.6180339887498949;   // 1/golden ratio
  constexpr double kAngleStep2 = 0.41421356237309515;  // sqrt(2) - 1
  constexpr double kRadiusStep = 0.2360679774997897;   // sqrt(5) - 2
  auto frac = [](double x) { return x - std::floor(x); };

  for (std::size_t i = out.size(); out.size() < m; ++i) {
    const double di = static_cast<double>(i) + 1.0;
    const double au = kTwoPi * frac(di * kAngleStep1);
    const double av = kTwoPi * frac(di * kAngleStep2);
    const double interior = r * std::sqrt(frac(di * kRadiusStep));
    double ru = r;
    double rv = r;
    switch (i % 3) {
      case 1: rv = interior; break;
      case 2: ru = interior; rv = r * std::sqrt(frac(di * kRadiusStep + 0.5)); break;
      default: ru = interior; break;
    }
    out.push_back(biernacki_value(1.0 + ru * unit(au), 1.0 + rv * unit(av)));
  }
  return out;
}

}  // namespace uvr
