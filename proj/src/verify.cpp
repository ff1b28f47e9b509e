#include "uvr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "uvr/ctc_bounds.hpp"
#include "uvr/ctc_geometry.hpp"
#include "uvr/disk_classes.hpp"
#include "uvr/functional.hpp"
#include "uvr/oracles.hpp"
#include "uvr/power_deformation.hpp"
#include "uvr/record.hpp"

namespace uvr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Accumulates the worst residual of one check and remembers the first
// offending input.
class Check {
 public:
  Check(std::string name, double tol) : result_{std::move(name), true, 0.0, tol, ""} {}

  void observe(double residual, const std::string& where) {
    if (residual > result_.worst) result_.worst = residual;
    if (residual > result_.tol && result_.detail.empty()) {
      result_.passed = false;
      result_.detail = where;
    }
  }

  void require(bool ok, const std::string& where) {
    observe(ok ? 0.0 : 1.0, where);
  }

  CheckResult finish() const { return result_; }

 private:
  CheckResult result_;
};

std::string where_rb(double r, double b) {
  std::ostringstream s;
  s << "r=" << format_double(r, 9) << " b=" << format_double(b, 9);
  return s.str();
}

double tol_or(const VerifyOptions& opt, double def) {
  return opt.tol_override.value_or(def);
}

// ---------------------------------------------------------------------------
// identities suite
// ---------------------------------------------------------------------------

CheckResult check_star_sum_identity(const VerifyOptions& opt) {
  Check c("star-sum-identity", tol_or(opt, 1e-10));
  for (int i = 0; i < 20; ++i) {
    const double r = 0.05 + 0.90 * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double b = -5.0 + 10.0 * j / 19.0;
      const double sum = phi_star(r, b, BoundSign::plus, DiskClass::star) +
                         phi_star(r, b, BoundSign::minus, DiskClass::star);
      c.observe(std::abs(sum + 2.0 * std::log1p(-r * r)), where_rb(r, b));
    }
  }
  return c.finish();
}

CheckResult check_convex_half(const VerifyOptions& opt) {
  Check c("convex-is-half-star", tol_or(opt, 1e-12));
  for (int i = 0; i < 20; ++i) {
    const double r = 0.05 + 0.90 * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double b = -5.0 + 10.0 * j / 19.0;
      for (auto sign : {BoundSign::plus, BoundSign::minus}) {
        const double k = phi_star(r, b, sign, DiskClass::convex);
        const double st = phi_star(r, b, sign, DiskClass::star);
        c.observe(std::abs(k - 0.5 * st), where_rb(r, b));
      }
    }
  }
  return c.finish();
}

CheckResult check_star_monotonicity(const VerifyOptions& opt) {
  Check c("star-plus-monotonicity", tol_or(opt, 1e-12));
  const double h = 1e-3;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int j = 0; j <= 100; ++j) {
      const double b = -5.0 + 10.0 * j / 100.0;
      const double diff = phi_star(r, b + h, BoundSign::plus, DiskClass::star) -
                          phi_star(r, b, BoundSign::plus, DiskClass::star);
      // nondecreasing for b >= 0, nonincreasing for b + h <= 0
      if (b >= 0.0) c.observe(std::max(0.0, -diff), where_rb(r, b));
      if (b + h <= 0.0) c.observe(std::max(0.0, diff), where_rb(r, b));
    }
  }
  return c.finish();
}

CheckResult check_critical_angles(const VerifyOptions& opt) {
  Check c("critical-angle-stationarity", tol_or(opt, 1e-10));
  for (double r : {0.05, 0.3, 0.5, 0.8, 0.95}) {
    for (int j = 0; j <= 40; ++j) {
      const double b = -5.0 + 10.0 * j / 40.0;
      const CriticalAngles ang = critical_angles(r, b);
      for (double theta : {ang.theta1, ang.theta2}) {
        const double stat = std::sin(theta) - b * std::cos(theta) + b * r;
        const double denom = 1.0 - 2.0 * r * std::cos(theta) + r * r;
        c.observe(std::abs(-2.0 * r * stat / denom), where_rb(r, b));
        const double unit = std::abs(std::cos(theta) * std::cos(theta) +
                                     std::sin(theta) * std::sin(theta) - 1.0);
        c.observe(unit, where_rb(r, b));
      }
    }
  }
  return c.finish();
}

CheckResult check_gap_and_branch_values(const VerifyOptions& opt) {
  Check c("ctc-branch-identities", tol_or(opt, 1e-12));
  c.observe(std::abs(q_branch(0.0) - p_branch(0.0) - std::log(2.0)), "q(0)-p(0)");
  c.observe(std::abs(p_branch(0.0) + std::log(4.0)), "p(0)");
  return c.finish();
}

CheckResult check_branch_continuity(const VerifyOptions& opt) {
  Check c("ctc-branch-continuity", tol_or(opt, 1e-10));
  const double b = b0();
  c.observe(std::abs(p_branch(b) - q_branch(b)), "b=b0");

  // psi_minus continuity across |tan t| = b0: both case formulas at the
  // crossing angle.
  const double t = std::atan(b);
  const double cc = std::cos(t), ss = std::sin(t);
  const double root = std::sqrt(1.0 - 8.0 * b * b);
  const double case1 =
      -0.5 * cc * std::log(2.0 * (9.0 * cc * cc - 4.0 + 3.0 * cc * cc * root)) -
      ss * std::atan(3.0 * b / root);
  const double case2 = -cc * std::log(2.0 * cc) - std::abs(ss) * (std::abs(t) + kPi);
  c.observe(std::abs(case1 - case2), "t=atan(b0)");
  return c.finish();
}

CheckResult check_ctc_evenness(const VerifyOptions& opt) {
  Check c("ctc-evenness", tol_or(opt, 0.0));
  for (int j = 0; j <= 80; ++j) {
    const double b = 0.05 + 2.0 * j / 80.0;
    const double diff = phi_ctc_minus(-b) - phi_ctc_minus(b);
    c.observe(diff == 0.0 ? 0.0 : std::abs(diff), where_rb(0, b));
  }
  return c.finish();
}

CheckResult check_monotone_gap(const VerifyOptions& opt) {
  Check c("branch-gap-decreasing", tol_or(opt, 0.0));
  const int n = 1000;
  double prev = q_branch(0.0) - p_branch(0.0);
  for (int i = 1; i <= n; ++i) {
    const double b = kPBranchLimit * i / n;
    const double gap = q_branch(b) - p_branch(b);
    c.observe(gap < prev ? 0.0 : gap - prev, where_rb(0, b));
    prev = gap;
  }
  return c.finish();
}

CheckResult check_psi_consistency_s(const VerifyOptions& opt) {
  Check c("psi-consistency-s", tol_or(opt, 1e-10));
  for (double r : {0.1, 0.4, 0.7, 0.9}) {
    for (int j = 0; j <= 60; ++j) {
      const double t = -3.0 + 6.0 * j / 60.0;
      if (std::abs(std::cos(t)) <= 0.01) continue;
      const double b = -std::tan(t);
      const ExtendedReal psi = psi_from_phi(
          t, ExtendedReal::finite(phi_s_pointwise(r, b, BoundSign::plus)),
          ExtendedReal::finite(phi_s_pointwise(r, b, BoundSign::minus)));
      c.observe(std::abs(psi.value() - psi_s(r, t)), where_rb(r, t));
    }
  }
  return c.finish();
}

CheckResult check_psi_consistency_star(const VerifyOptions& opt) {
  Check c("psi-consistency-star", tol_or(opt, 1e-6));
  const std::size_t n = 1 << 16;
  for (double r : {0.3, 0.6, 0.9}) {
    const BoundaryCurve boundary = marx_boundary(r, DiskClass::star, n);
    for (double t : {0.0, 0.3, 0.7, 1.0, 2.0, 2.6, kPi}) {
      const double b = -std::tan(t);
      const ExtendedReal psi = psi_from_phi(
          t, ExtendedReal::finite(phi_star(r, b, BoundSign::plus, DiskClass::star)),
          ExtendedReal::finite(phi_star(r, b, BoundSign::minus, DiskClass::star)));
      // the directional value is a supremum of Re[e^{it} w] for every t;
      // the sign of cos t only selects which phi branch carries it
      double extreme = -std::numeric_limits<double>::infinity();
      for (const auto& s : boundary.samples) {
        const double proj = std::cos(t) * s.w.real() - std::sin(t) * s.w.imag();
        extreme = std::max(extreme, proj);
      }
      c.observe(std::abs(psi.value() - extreme), where_rb(r, t));
    }
  }
  return c.finish();
}

CheckResult check_gamma_junction(const VerifyOptions& opt) {
  Check c("gamma-junction", tol_or(opt, 1e-8));

  // Continuity: the gap across t = pi decays linearly in epsilon.
  double prev_gap = -1.0;
  for (double eps : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
    const double gap = std::abs(gamma_curve(kPi - eps) - gamma_curve(kPi + eps));
    c.observe(gap > 10.0 * eps ? gap : 0.0, "continuity eps=" + format_double(eps, 3));
    if (prev_gap > 0.0) {
      const double ratio = prev_gap / gap;
      c.require(ratio > 3.0 && ratio < 30.0, "linear decay at eps=" + format_double(eps, 3));
    }
    prev_gap = gap;
  }

  // C1: identical one-sided tangent directions, exactly pi/2.
  const double arg_in = std::arg(gamma_tangent(kPi, JunctionSide::inner));
  const double arg_out = std::arg(gamma_tangent(kPi, JunctionSide::outer));
  c.require(arg_in == arg_out && arg_in == kPi / 2.0, "one-sided arg at pi");
  return c.finish();
}

CheckResult check_gamma_shape(const VerifyOptions& opt) {
  Check c("gamma-shape", tol_or(opt, 1e-12));
  const double limit = gamma_convexity_limit();

  for (int i = 1; i < 4000; ++i) {
    const double t = kTwoPi * i / 4000.0;
    if (t == kPi) continue;
    const double rate = gamma_turning_rate(t);
    const bool convex_zone = (t < limit) || (t > kPi);
    if (convex_zone)
      c.observe(rate > 0.0 ? 0.0 : -rate + 1e-300, "t=" + format_double(t, 9));
    else if (t > limit && t < kPi)
      c.observe(rate < 0.0 ? 0.0 : rate + 1e-300, "t=" + format_double(t, 9));

    // strip bound and symmetry
    const Complex w = gamma_curve(t);
    c.require(std::abs(w.imag()) < 1.5 * kPi, "strip at t=" + format_double(t, 9));
    const Complex wm = gamma_curve(-t);
    c.observe(std::abs(wm - std::conj(w)), "symmetry t=" + format_double(t, 9));
  }

  // The strip bound is approached near the endpoints.
  c.require(std::abs(gamma_curve(kTwoPi - 1e-9).imag()) > 1.5 * kPi - 1e-8,
            "strip approach");
  return c.finish();
}

CheckResult check_support_line(const VerifyOptions& opt) {
  Check c("common-tangent-support-line", tol_or(opt, 1e-9));
  const TangencyPair tp = common_tangent();

  // Line through gamma_curve(u) with direction gamma'(u); the whole curve must lie
  // on one side (non-negative cross product toward the region).
  const Complex base = gamma_curve(tp.u);
  const Complex dir = gamma_tangent(tp.u) / std::abs(gamma_tangent(tp.u));
  double reference = 0.0;
  bool ref_set = false;
  for (int i = 1; i < 8192; ++i) {
    const double t = -kTwoPi + kTwoPi * 2.0 * i / 8192.0;
    const Complex d = gamma_curve(t) - base;
    const double side = dir.real() * d.imag() - dir.imag() * d.real();
    if (!ref_set && std::abs(side) > 1e-6) {
      reference = side;
      ref_set = true;
    }
    if (ref_set && side * reference < 0.0)
      c.observe(std::abs(side), "t=" + format_double(t, 9));
  }
  return c.finish();
}

// ---------------------------------------------------------------------------
// oracle suite
// ---------------------------------------------------------------------------

CheckResult check_phi_star_vs_grid(const VerifyOptions& opt) {
  Check c("phi-star-vs-grid-oracle", tol_or(opt, 1e-9));
  for (int i = 0; i < 20; ++i) {
    const double r = 0.05 + 0.90 * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double b = -5.0 + 10.0 * j / 19.0;
      const Extremum mx = grid_extremum(r, b, ExtremumKind::max);
      const Extremum mn = grid_extremum(r, b, ExtremumKind::min);
      c.observe(std::abs(mx.value - phi_star(r, b, BoundSign::plus, DiskClass::star)),
                where_rb(r, b) + " plus");
      c.observe(std::abs(mn.value - phi_star(r, b, BoundSign::minus, DiskClass::star)),
                where_rb(r, b) + " minus");
    }
  }
  return c.finish();
}

CheckResult check_phi_ctc_vs_curve(const VerifyOptions& opt) {
  Check c("phi-ctc-vs-curve-oracle", tol_or(opt, 1e-6));
  const TangencyPair tp = common_tangent();
  for (int j = 0; j < 50; ++j) {
    const double b = -2.0 + 4.0 * j / 49.0;
    const Extremum mx = curve_extremum(b);
    c.observe(std::abs(phi_ctc_minus(b) + mx.value), where_rb(0, b));

    // Support points stay off the non-convex stretch (u, v).
    const double t = std::abs(mx.param);
    c.require(t <= tp.u + 1e-6 || t >= tp.v - 1e-6,
              "support point t=" + format_double(mx.param, 9) + " b=" + format_double(b, 9));
  }
  return c.finish();
}

CheckResult check_b0_dual(const VerifyOptions& opt) {
  Check c("b0-dual-agreement", tol_or(opt, 1e-8));
  const double analytic = b0_root(1e-10);
  const TangencyPair tp = common_tangent(1e-9);
  c.observe(std::abs(analytic - tp.b0_geo), "analytic vs geometric");
  return c.finish();
}

// ---------------------------------------------------------------------------
// containment suite
// ---------------------------------------------------------------------------

bool inside_closed_polyline(const BoundaryCurve& curve, Complex w, double tol) {
  bool inside = false;
  double min_dist2 = std::numeric_limits<double>::infinity();
  const std::size_t m = curve.samples.size();
  for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
    const Complex a = curve.samples[j].w;
    const Complex b = curve.samples[i].w;
    if ((a.imag() > w.imag()) != (b.imag() > w.imag())) {
      const double x_cross = a.real() + (w.imag() - a.imag()) *
                                            (b.real() - a.real()) /
                                            (b.imag() - a.imag());
      if (w.real() < x_cross) inside = !inside;
    }
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double s = len2 > 0.0 ? ((w - a).real() * ab.real() + (w - a).imag() * ab.imag()) / len2
                          : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    min_dist2 = std::min(min_dist2, std::norm(w - (a + s * ab)));
  }
  return inside || min_dist2 <= tol * tol;
}

CheckResult check_starlike_containment(const VerifyOptions& opt) {
  Check c("starlike-containment", tol_or(opt, 1e-9));
  for (double r : {0.1, 0.5, 0.9}) {
    const RegionDisk disk = grunsky_region(r);
    for (std::size_t i = 0; i < opt.trials; ++i) {
      const AtomicMeasure m = random_measure(mix_seed(opt.seed, i), 8);
      const Complex w = sample_starlike(m, r);
      const double marx_excess =
          std::abs(1.0 - std::exp(-w / 2.0)) - r;
      const double disk_excess = std::abs(w - disk.center) - disk.radius;
      const std::string where =
          "r=" + format_double(r, 9) + " trial=" + std::to_string(i);
      c.observe(std::max(0.0, marx_excess), where + " (marx)");
      c.observe(std::max(0.0, disk_excess), where + " (grunsky)");
    }
  }
  return c.finish();
}

CheckResult check_convex_containment(const VerifyOptions& opt) {
  Check c("convex-containment", tol_or(opt, 1e-9));
  for (double r : {0.1, 0.5, 0.9}) {
    for (std::size_t i = 0; i < opt.trials; ++i) {
      const AtomicMeasure m = random_measure(mix_seed(opt.seed ^ 0xC0, i), 8);
      const Complex w = sample_convex(m, r);
      const double excess = std::abs(1.0 - std::exp(-w)) - r;
      c.observe(std::max(0.0, excess),
                "r=" + format_double(r, 9) + " trial=" + std::to_string(i));
    }
  }
  return c.finish();
}

CheckResult check_ctc_containment(const VerifyOptions& opt) {
  Check c("ctc-containment", tol_or(opt, 1e-6));
  const std::size_t trials = std::max<std::size_t>(1, opt.trials / 10);
  for (double r : {0.3, 0.6, 0.9}) {
    for (std::size_t i = 0; i < trials; ++i) {
      const CtcSample s = random_ctc_sample(mix_seed(opt.seed ^ 0xCC, i), 6);
      const Complex w = sample_ctc(s, r);
      const std::string where =
          "r=" + format_double(r, 9) + " trial=" + std::to_string(i);
      c.require(std::abs(w.imag()) < 1.5 * kPi, where + " (strip)");
      c.require(region_contains(w, 50.0, 4096, 1e-6), where + " (region)");
    }
  }
  return c.finish();
}

CheckResult check_ctc_sharpness(const VerifyOptions& opt) {
  Check c("ctc-sharpness", tol_or(opt, 1e-6));
  const std::size_t trials = std::max<std::size_t>(1, opt.trials / 10);
  std::vector<Complex> values;
  values.reserve(3 * trials);
  for (double r : {0.3, 0.6, 0.9})
    for (std::size_t i = 0; i < trials; ++i)
      values.push_back(
          sample_ctc(random_ctc_sample(mix_seed(opt.seed ^ 0xCC, i), 6), r));

  for (double b : {0.0, 0.1, -0.1, 0.5, -0.5, 1.0, -1.0}) {
    const double bound = phi_ctc_minus(b);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double fn = values[i].real() + b * values[i].imag();
      c.observe(std::max(0.0, bound - fn),
                "b=" + format_double(b, 9) + " sample=" + std::to_string(i));
    }
  }
  return c.finish();
}

CheckResult check_biernacki_in_h_region(const VerifyOptions& opt) {
  Check c("biernacki-in-h-region", tol_or(opt, 1e-5));
  for (double r : {0.3, 0.5, 0.8}) {
    const BoundaryCurve h_curve = pointwise_region_h(r, 4096);
    const auto cloud = biernacki_samples(r, 2000);
    for (std::size_t i = 0; i < cloud.size(); ++i)
      c.require(inside_closed_polyline(h_curve, cloud[i], 1e-5),
                "r=" + format_double(r, 9) + " sample=" + std::to_string(i));
  }
  return c.finish();
}

CheckResult check_h_in_full_region(const VerifyOptions& opt) {
  Check c("pointwise-in-full-region", tol_or(opt, 1e-6));
  for (double r : {0.3, 0.5, 0.8}) {
    const BoundaryCurve h_curve = pointwise_region_h(r, 1024);
    for (const auto& s : h_curve.samples)
      c.require(region_contains(s.w, 50.0, 4096, 1e-6),
                "r=" + format_double(r, 9) + " theta=" + format_double(s.t, 9));
  }
  return c.finish();
}

// ---------------------------------------------------------------------------
// powerdef suite
// ---------------------------------------------------------------------------

CheckResult check_power_identity(const VerifyOptions& opt) {
  Check c("power-identity", tol_or(opt, 1e-12));
  for (double a : {0.5, 1.0, 2.0, -0.5, -1.0, -2.0}) {
    for (int j = 0; j <= 40; ++j) {
      const double b = -1.0 + 2.0 * j / 40.0;
      const PowerBound pb = power_bound({a, b});
      const double expected = a * phi_ctc_minus(b / a);
      c.observe(std::abs(pb.value - expected),
                "a=" + format_double(a, 9) + " b=" + format_double(b, 9));
      c.require(pb.kind == (a > 0 ? BoundKind::infimum : BoundKind::supremum),
                "kind at a=" + format_double(a, 9));
    }
  }
  return c.finish();
}

CheckResult check_power_case_continuity(const VerifyOptions& opt) {
  Check c("power-case-continuity", tol_or(opt, 1e-9));
  for (double a : {0.5, 1.0, 2.0, -0.5, -1.0, -2.0}) {
    const double b_cross = std::abs(a) * b0();
    const double below = power_bound({a, std::nextafter(b_cross, 0.0)}).value;
    const double above = power_bound({a, std::nextafter(b_cross, 2.0 * b_cross)}).value;
    c.observe(std::abs(below - above), "a=" + format_double(a, 9));
  }
  return c.finish();
}

CheckResult check_power_sharpness(const VerifyOptions& opt) {
  Check c("power-sharpness", tol_or(opt, 1e-6));
  const std::size_t trials = std::max<std::size_t>(1, opt.trials / 20);
  std::vector<Complex> values;
  for (double r : {0.4, 0.8})
    for (std::size_t i = 0; i < trials; ++i)
      values.push_back(
          sample_ctc(random_ctc_sample(mix_seed(opt.seed ^ 0xF0, i), 6), r));

  for (double a : {0.5, 1.0, -0.5, -1.0}) {
    for (double b : {-0.3, 0.0, 0.3}) {
      const PowerBound pb = power_bound({a, b});
      for (std::size_t i = 0; i < values.size(); ++i) {
        const double val = power_eval(values[i], {a, b});
        const double breach = a > 0 ? pb.value - val : val - pb.value;
        c.observe(std::max(0.0, breach),
                  "a=" + format_double(a, 9) + " b=" + format_double(b, 9) +
                      " sample=" + std::to_string(i));
      }
    }
  }
  return c.finish();
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opt) {
  switch (suite) {
    case Suite::identities:
      return {check_star_sum_identity(opt),  check_convex_half(opt),
              check_star_monotonicity(opt),  check_critical_angles(opt),
              check_gap_and_branch_values(opt), check_branch_continuity(opt),
              check_ctc_evenness(opt),       check_monotone_gap(opt),
              check_psi_consistency_s(opt),  check_psi_consistency_star(opt),
              check_gamma_junction(opt),     check_gamma_shape(opt),
              check_support_line(opt)};
    case Suite::oracle:
      return {check_phi_star_vs_grid(opt), check_phi_ctc_vs_curve(opt),
              check_b0_dual(opt)};
    case Suite::containment:
      return {check_starlike_containment(opt), check_convex_containment(opt),
              check_ctc_containment(opt),      check_ctc_sharpness(opt),
              check_biernacki_in_h_region(opt), check_h_in_full_region(opt)};
    case Suite::powerdef:
      return {check_power_identity(opt), check_power_case_continuity(opt),
              check_power_sharpness(opt)};
  }
  throw std::logic_error("unknown suite");
}

std::vector<CheckResult> run_all_suites(const VerifyOptions& opt) {
  std::vector<CheckResult> all;
  for (Suite s : {Suite::identities, Suite::oracle, Suite::containment,
                  Suite::powerdef}) {
    auto part = run_suite(s, opt);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace uvr
