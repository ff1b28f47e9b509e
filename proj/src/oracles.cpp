#include "uvr/oracles.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "uvr/ctc_geometry.hpp"

namespace uvr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Golden-section maximization on [a, b]; assumes the bracket came from a
// grid fine enough to isolate one local maximum.
Extremum golden_max(const std::function<double(double)>& f, double a, double b) {
  constexpr double kRatio = 0.6180339887498949;
  double c = b - kRatio * (b - a);
  double d = a + kRatio * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-13) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kRatio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kRatio * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  return Extremum{mid, f(mid)};
}

// Nodes and weights of N-point Gauss-Legendre quadrature on [-1, 1],
// by Newton iteration on the Legendre recurrence.
struct GaussLegendre {
  explicit GaussLegendre(std::size_t order) : nodes(order), weights(order) {
    const std::size_t n = order;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                          (static_cast<double>(n) + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 64; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
          const double dk = static_cast<double>(k);
          const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
          p0 = p1;
          p1 = p2;
        }
        dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double step = p1 / dp;
        x -= step;
        if (std::abs(step) < 1e-15) break;
      }
      nodes[i] = -x;
      nodes[n - 1 - i] = x;
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      weights[i] = w;
      weights[n - 1 - i] = w;
    }
  }

  std::vector<double> nodes;
  std::vector<double> weights;
};

Complex convex_derivative(const AtomicMeasure& m, double x) {
  Complex log_gp = 0.0;
  for (const auto& atom : m.atoms) {
    const Complex factor = 1.0 - x * std::exp(Complex(0.0, -atom.angle));
    log_gp += atom.weight * std::log(factor);
  }
  return std::exp(-2.0 * log_gp);
}

Complex herglotz_value(const AtomicMeasure& m, double x) {
  Complex p = 0.0;
  for (const auto& atom : m.atoms) {
    const Complex e = std::exp(Complex(0.0, -atom.angle));
    p += atom.weight * (1.0 + x * e) / (1.0 - x * e);
  }
  return p;
}

// Integral of f' over [x0, x1] with panel doubling until two successive
// levels agree to 1e-12.
Complex integrate_fprime(const CtcSample& s, double x0, double x1,
                         const GaussLegendre& rule) {
  auto fprime = [&](double x) {
    return convex_derivative(s.convex_measure, x) *
           herglotz_value(s.herglotz_measure, x);
  };
  auto level = [&](std::size_t panels) {
    Complex total = 0.0;
    const double h = (x1 - x0) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double a = x0 + h * static_cast<double>(p);
      Complex acc = 0.0;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        acc += rule.weights[k] * fprime(a + 0.5 * h * (rule.nodes[k] + 1.0));
      total += 0.5 * h * acc;
    }
    return total;
  };

  Complex prev = level(1);
  std::size_t panels = 2;
  for (int doubling = 0; doubling < 12; ++doubling, panels *= 2) {
    const Complex cur = level(panels);
    if (std::abs(cur - prev) < 1e-12) return cur;
    prev = cur;
  }
  throw std::runtime_error("sample_ctc: quadrature-failure (no convergence)");
}

double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

void AtomicMeasure::validate() const {
  if (atoms.empty())
    throw std::invalid_argument("AtomicMeasure: needs at least one atom");
  for (const auto& a : atoms)
    if (!(a.weight > 0.0))
      throw std::invalid_argument("AtomicMeasure: weights must be positive");
  if (std::abs(total_weight() - 1.0) > 1e-14)
    throw std::invalid_argument("AtomicMeasure: weights must sum to 1");
}

Extremum grid_extremum(double r, double b, ExtremumKind kind, std::size_t n) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("grid_extremum: radius must lie in (0, 1)");
  if (n < 256) throw std::invalid_argument("grid_extremum: need n >= 256");

  const double sign = kind == ExtremumKind::max ? 1.0 : -1.0;
  auto objective = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return sign * (-std::log(1.0 + r * r - 2.0 * r * c) +
                   2.0 * b * std::atan(r * s / (1.0 - r * c)));
  };

  std::size_t best = 0;
  double best_val = objective(0.0);
  const double h = kTwoPi / static_cast<double>(n);
  for (std::size_t k = 1; k < n; ++k) {
    const double val = objective(h * static_cast<double>(k));
    if (val > best_val) {
      best_val = val;
      best = k;
    }
  }
  // phi is periodic, so a bracket extending past [0, 2*pi) is harmless.
  const double center = h * static_cast<double>(best);
  Extremum e = golden_max(objective, center - h, center + h);
  if (best_val > e.value) e = Extremum{center, best_val};
  e.param = std::fmod(e.param + kTwoPi, kTwoPi);
  e.value *= sign;
  return e;
}

Extremum curve_extremum(double b, std::size_t n) {
  if (n < 4096) throw std::invalid_argument("curve_extremum: need n >= 4096");

  auto objective = [&](double t) {
    const Complex w = gamma_curve(t);
    return w.real() + b * w.imag();
  };

  // X -> -inf toward |t| = 2*pi, so the maximum is interior and a uniform
  // grid with a small endpoint margin cannot miss its cell.
  const double t_max = kTwoPi - 1e-6;
  const double step = 2.0 * t_max / static_cast<double>(n - 1);
  std::size_t best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double val = objective(-t_max + step * static_cast<double>(i));
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  const double center = -t_max + step * static_cast<double>(best);
  const double lo = std::max(center - step, -t_max);
  const double hi = std::min(center + step, t_max);
  Extremum e = golden_max(objective, lo, hi);
  if (best_val > e.value) e = Extremum{center, best_val};
  return e;
}

Complex sample_starlike(const AtomicMeasure& measure, double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("sample_starlike: radius must lie in (0, 1)");
  Complex w = 0.0;
  for (const auto& atom : measure.atoms) {
    // Re(1 - r e^{-i theta}) >= 1 - r > 0: principal branch.
    const Complex factor = 1.0 - r * std::exp(Complex(0.0, -atom.angle));
    w += atom.weight * std::log(factor);
  }
  return -2.0 * w;
}

Complex sample_convex(const AtomicMeasure& measure, double r) {
  return 0.5 * sample_starlike(measure, r);
}

Complex sample_ctc(const CtcSample& sample, double r, std::size_t quad_order) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("sample_ctc: radius must lie in (0, 1)");
  if (quad_order < 16)
    throw std::invalid_argument("sample_ctc: need quad_order >= 16");
  sample.convex_measure.validate();
  sample.herglotz_measure.validate();

  const GaussLegendre rule(quad_order);

  // Branch tracking: w = log(f(rho)/rho) continued from w -> 0 at the
  // origin across radial checkpoints; if the argument ever moves more than
  // pi/2 between checkpoints, rerun with twice as many.
  for (std::size_t checkpoints = 64; checkpoints <= 8192; checkpoints *= 2) {
    Complex f = 0.0;
    Complex w_prev = 0.0;
    double rho_prev = 0.0;
    bool jumped = false;
    for (std::size_t i = 1; i <= checkpoints && !jumped; ++i) {
      const double rho =
          r * static_cast<double>(i) / static_cast<double>(checkpoints);
      f += integrate_fprime(sample, rho_prev, rho, rule);
      Complex w = std::log(f / rho);
      const double wraps =
          std::round((w_prev.imag() - w.imag()) / kTwoPi);
      w += Complex(0.0, kTwoPi * wraps);
      if (std::abs(w.imag() - w_prev.imag()) > kPi / 2.0) {
        jumped = true;
        break;
      }
      w_prev = w;
      rho_prev = rho;
    }
    if (!jumped) return w_prev;
  }
  throw std::runtime_error("sample_ctc: branch tracking did not stabilize");
}

AtomicMeasure random_measure(std::uint64_t rng_seed, std::size_t max_atoms) {
  if (max_atoms < 1)
    throw std::invalid_argument("random_measure: need max_atoms >= 1");

  std::mt19937_64 eng(rng_seed);
  const std::size_t count = 1 + std::min<std::size_t>(
      max_atoms - 1,
      static_cast<std::size_t>(uniform01(eng) * static_cast<double>(max_atoms)));

  AtomicMeasure m;
  m.atoms.reserve(count);
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double angle = kTwoPi * uniform01(eng);
    double weight = -std::log1p(-uniform01(eng));
    if (weight <= 0.0) weight = 1e-300;
    m.atoms.push_back({angle, weight});
    total += weight;
  }
  for (auto& atom : m.atoms) atom.weight /= total;
  return m;
}

CtcSample random_ctc_sample(std::uint64_t seed, std::size_t max_atoms) {
  return CtcSample{random_measure(mix_seed(seed, 1), max_atoms),
                   random_measure(mix_seed(seed, 2), max_atoms), seed};
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 step keyed by the stream index.
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace uvr
