// uvr: compute sharp extremal values and variability regions of
// log[f(z)/z] over the classical univalent function classes, emit region
// geometry, and run the self-verification suites.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uvr/ctc_bounds.hpp"
#include "uvr/ctc_geometry.hpp"
#include "uvr/disk_classes.hpp"
#include "uvr/extended_real.hpp"
#include "uvr/io.hpp"
#include "uvr/oracles.hpp"
#include "uvr/power_deformation.hpp"
#include "uvr/record.hpp"
#include "uvr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string human_value(const uvr::ExtendedReal& v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return uvr::format_double(v.value(), 9);
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------

int cmd_bound(const std::string& cls_name, const std::string& kind_name,
              double b, bool has_r, double r) {
  using namespace uvr;
  const FunctionClass cls = function_class_from_string(cls_name);
  const BoundSign sign =
      kind_name == "plus" ? BoundSign::plus : BoundSign::minus;
  if (has_r) r = EvalPoint(r).r();  // validates 0 <= r < 1

  ExtendedReal value;
  switch (cls) {
    case FunctionClass::s:
      value = has_r ? ExtendedReal::finite(phi_s_pointwise(r, b, sign))
                    : phi_s(b, sign);
      break;
    case FunctionClass::star:
    case FunctionClass::convex: {
      const DiskClass dc =
          cls == FunctionClass::star ? DiskClass::star : DiskClass::convex;
      value = has_r ? ExtendedReal::finite(phi_star(r, b, sign, dc))
                    : phi_star_full(b, sign, dc);
      break;
    }
    case FunctionClass::ctc:
      if (has_r)
        throw UsageError(
            "--class ctc has no pointwise closed form; drop --r for the "
            "full-disk bound");
      value = phi_ctc(b, sign);
      break;
  }

  ResultRecord rec;
  rec.cls = cls;
  rec.functional =
      sign == BoundSign::plus ? Functional::phi_plus : Functional::phi_minus;
  rec.params.emplace_back("b", b);
  if (has_r) rec.params.emplace_back("r", r);
  rec.value = value;

  std::cout << render_record(rec) << '\n';
  std::cout << "phi_" << (sign == BoundSign::plus ? "plus" : "minus") << "("
            << format_double(b, 9) << ", " << cls_name << ")"
            << (has_r ? " at r=" + format_double(r, 9) : " over the full disk")
            << " = " << human_value(value) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_region(const std::string& cls_name, bool has_r, double r,
               std::size_t samples, const std::string& format,
               const std::string& out_path, bool hull, bool pointwise) {
  using namespace uvr;
  if (samples < 8) throw UsageError("--samples must be at least 8");
  const FunctionClass cls = function_class_from_string(cls_name);
  if (has_r) r = EvalPoint(r).r();

  std::vector<BoundaryCurve> curves;
  switch (cls) {
    case FunctionClass::s: {
      if (!has_r) throw UsageError("--class s requires --r");
      const RegionDisk disk = grunsky_region(r);
      BoundaryCurve circle;
      circle.closed = true;
      for (std::size_t k = 0; k < samples; ++k) {
        const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
        circle.samples.push_back(
            {t, disk.center + disk.radius * Complex(std::cos(t), std::sin(t))});
      }
      curves.push_back(std::move(circle));
      break;
    }
    case FunctionClass::star:
    case FunctionClass::convex: {
      if (!has_r) throw UsageError("--class star/convex requires --r");
      const DiskClass dc =
          cls == FunctionClass::star ? DiskClass::star : DiskClass::convex;
      curves.push_back(marx_boundary(r, dc, samples));
      break;
    }
    case FunctionClass::ctc: {
      if (pointwise) {
        if (!has_r) throw UsageError("--pointwise requires --r");
        curves.push_back(pointwise_region_h(r, samples));
        break;
      }
      // Boundary of W(C): -gamma over a symmetric parameter grid strictly
      // inside (-2*pi, 2*pi).
      BoundaryCurve curve;
      curve.breakpoints = {-std::numbers::pi, std::numbers::pi};
      const double h = 2.0 * kTwoPi / static_cast<double>(samples + 1);
      for (std::size_t i = 0; i < samples; ++i) {
        const double t = -kTwoPi + h * static_cast<double>(i + 1);
        curve.samples.push_back({t, -gamma_curve(t)});
      }
      curves.push_back(std::move(curve));
      if (hull) {
        // Tangent chord pair, in the same -w coordinates as the curve.
        const TangencyPair tp = common_tangent();
        for (double side : {1.0, -1.0}) {
          BoundaryCurve chord;
          chord.samples.push_back({side * tp.u, -gamma_curve(side * tp.u)});
          chord.samples.push_back({side * tp.v, -gamma_curve(side * tp.v)});
          curves.push_back(std::move(chord));
        }
      }
      break;
    }
  }

  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write to " + out_path);
  if (format == "csv") {
    // CSV holds a single polyline; chords are an SVG-only adornment.
    write_curve_csv(out, curves.front());
  } else if (format == "svg") {
    write_curves_svg(out, curves);
  } else {
    throw UsageError("--format must be csv or svg");
  }
  if (!out.good()) throw UsageError("write failed for " + out_path);

  std::cout << "wrote " << curves.front().samples.size() << " samples to "
            << out_path << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_b0(double tol, const std::string& method) {
  using namespace uvr;
  const bool want_analytic = method == "analytic" || method == "both";
  const bool want_geometric = method == "geometric" || method == "both";

  double analytic = 0.0, geometric = 0.0;
  if (want_analytic) {
    analytic = b0_root(tol);
    std::cout << "b0 method=analytic tol=" << format_double(tol, 9)
              << " value=" << format_double(analytic) << '\n';
  }
  if (want_geometric) {
    geometric = common_tangent(std::max(tol, 1e-12)).b0_geo;
    std::cout << "b0 method=geometric tol=" << format_double(tol, 9)
              << " value=" << format_double(geometric) << '\n';
  }
  if (want_analytic && want_geometric)
    std::cout << "difference = " << format_double(std::abs(analytic - geometric), 9)
              << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite_name, std::uint64_t seed,
               std::size_t trials, double tol, bool tol_set) {
  using namespace uvr;
  VerifyOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  if (tol_set) opt.tol_override = tol;

  std::vector<CheckResult> results;
  if (suite_name == "all") {
    results = run_all_suites(opt);
  } else {
    Suite suite;
    if (suite_name == "identities") suite = Suite::identities;
    else if (suite_name == "oracle") suite = Suite::oracle;
    else if (suite_name == "containment") suite = Suite::containment;
    else if (suite_name == "powerdef") suite = Suite::powerdef;
    else throw UsageError("unknown suite: " + suite_name);
    results = run_suite(suite, opt);
  }

  std::size_t failures = 0;
  std::printf("%-32s %-6s %-18s %-18s\n", "check", "status", "max-residual",
              "tolerance");
  for (const auto& r : results) {
    std::printf("%-32s %-6s %-18.9e %-18.9e\n", r.name.c_str(),
                r.passed ? "pass" : "FAIL", r.worst, r.tol);
    if (!r.passed) {
      ++failures;
      std::printf("  first failing case: %s\n", r.detail.c_str());
    }
  }
  std::printf("%zu/%zu checks passed (seed=%llu, trials=%zu)\n",
              results.size() - failures, results.size(),
              static_cast<unsigned long long>(seed), trials);
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

// ---------------------------------------------------------------------------

int cmd_power(double a, double b) {
  using namespace uvr;
  if (a == 0.0)
    throw UsageError(
        "--a 0 is unsupported: no sharp constant is established for a "
        "purely imaginary exponent");

  const PowerBound pb = power_bound({a, b});

  ResultRecord rec;
  rec.cls = FunctionClass::ctc;
  rec.functional = Functional::power;
  rec.params.emplace_back("a", a);
  rec.params.emplace_back("b", b);
  rec.value = ExtendedReal::finite(pb.value);

  std::cout << render_record(rec) << '\n';
  std::cout << (pb.kind == BoundKind::infimum ? "infimum" : "supremum")
            << " of log|f_c(z)/z| over close-to-convex f, c=" << format_double(a, 9)
            << (b >= 0 ? "+" : "") << format_double(b, 9)
            << "i: " << format_double(pb.value, 9) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "uvr: sharp extremal values and variability regions of log[f(z)/z] "
      "for univalent function classes"};
  app.require_subcommand(1);

  // bound
  std::string cls_name, kind_name = "minus";
  double b_param = 0.0, r_param = 0.0;
  auto* bound = app.add_subcommand("bound", "Extremal value of the functional");
  bound->add_option("--class", cls_name, "Function class")
      ->required()
      ->check(CLI::IsMember({"s", "star", "convex", "ctc"}));
  bound->add_option("--kind", kind_name, "Supremum (plus) or infimum (minus)")
      ->required()
      ->check(CLI::IsMember({"plus", "minus"}));
  bound->add_option("--b", b_param, "Slope parameter b")->required();
  auto* bound_r = bound->add_option("--r", r_param, "Radius |z| for the pointwise bound");

  // region
  std::string region_cls, region_format = "csv", region_out = "region.csv";
  std::size_t region_samples = 1024;
  bool region_hull = false, region_pointwise = false;
  double region_r = 0.0;
  auto* region = app.add_subcommand("region", "Emit region boundary geometry");
  region->add_option("--class", region_cls, "Function class")
      ->required()
      ->check(CLI::IsMember({"s", "star", "convex", "ctc"}));
  auto* region_r_opt = region->add_option("--r", region_r, "Radius |z|");
  region->add_option("--samples", region_samples, "Sample count");
  region->add_option("--format", region_format, "Output format")
      ->check(CLI::IsMember({"csv", "svg"}));
  region->add_option("--out", region_out, "Output path")->required();
  region->add_flag("--hull", region_hull, "Add the common-tangent chords (ctc)");
  region->add_flag("--pointwise", region_pointwise,
                   "Pointwise region boundary instead of the full one (ctc)");

  // b0
  double b0_tol = 1e-10;
  std::string b0_method = "both";
  auto* b0_cmd = app.add_subcommand("b0", "Crossover parameter b0");
  b0_cmd->add_option("--tol", b0_tol, "Root residual tolerance");
  b0_cmd->add_option("--method", b0_method, "Computation route")
      ->check(CLI::IsMember({"analytic", "geometric", "both"}));

  // verify
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 0;
  std::size_t verify_trials = 10000;
  double verify_tol = 0.0;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", verify_suite, "Suite to run")
      ->check(CLI::IsMember({"identities", "oracle", "containment", "powerdef", "all"}));
  verify->add_option("--seed", verify_seed, "Master seed for sampling");
  verify->add_option("--trials", verify_trials, "Samples per radius");
  auto* verify_tol_opt = verify->add_option("--tol", verify_tol,
                                            "Override every check tolerance");

  // power
  double power_a = 0.0, power_b = 0.0;
  auto* power = app.add_subcommand("power", "Sharp bound under power deformation");
  power->add_option("--a", power_a, "Real part of the exponent")->required();
  power->add_option("--b", power_b, "Imaginary part of the exponent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bound->parsed())
      return cmd_bound(cls_name, kind_name, b_param, bound_r->count() > 0, r_param);
    if (region->parsed())
      return cmd_region(region_cls, region_r_opt->count() > 0, region_r,
                        region_samples, region_format, region_out, region_hull,
                        region_pointwise);
    if (b0_cmd->parsed()) return cmd_b0(b0_tol, b0_method);
    if (verify->parsed())
      return cmd_verify(verify_suite, verify_seed, verify_trials, verify_tol,
                        verify_tol_opt->count() > 0);
    if (power->parsed()) return cmd_power(power_a, power_b);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
