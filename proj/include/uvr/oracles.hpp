#pragma once

#include <cstddef>
#include <cstdint>

#include "uvr/types.hpp"

namespace uvr {

// Independent brute-force verifiers: grid / curve extremization against the
// closed forms, and exact or quadrature-based samplers of actual starlike,
// convex, and close-to-convex functions built from atomic measures.
// Everything here is deterministic given its inputs and seed.

enum class ExtremumKind { max, min };

/// Location/value pair returned by the extremizers.
struct Extremum {
  double param;  // angle theta or curve parameter t
  double value;
};

/// Extremum of phi(theta) = -log(1+r^2-2r cos theta)
///                          + 2b arctan(r sin theta / (1 - r cos theta))
/// over [0, 2*pi): coarse n-point grid, then golden-section refinement
/// around the best cell.
Extremum grid_extremum(double r, double b, ExtremumKind kind,
                       std::size_t n = 4096);

/// Maximum of X + bY over the boundary curve gamma_curve(t), t in (-2*pi, 2*pi),
/// dense sampling plus local refinement.  The caller negates for the
/// infimum functional.
Extremum curve_extremum(double b, std::size_t n = 8192);

/// log[f(z)/z] at z = r for the starlike function
/// f(z) = z * prod (1 - z e^{-i theta_k})^{-2 lambda_k}:
/// exactly -2 sum lambda_k log(1 - r e^{-i theta_k}).
Complex sample_starlike(const AtomicMeasure& measure, double r);

/// Half the starlike value: a point of the convex-class region for the
/// same measure.
Complex sample_convex(const AtomicMeasure& measure, double r);

/// log[f(r)/r] for the close-to-convex f with f' = g' * p described by
/// `sample`, via Gauss-Legendre quadrature of f' along [0, r] with panel
/// doubling, and branch continuation along increasing radius.
Complex sample_ctc(const CtcSample& sample, double r,
                   std::size_t quad_order = 16);

/// Deterministic-from-seed atomic probability measure: atom count uniform
/// in [1, max_atoms], uniform angles, Dirichlet(1) weights via normalized
/// exponentials.
AtomicMeasure random_measure(std::uint64_t rng_seed, std::size_t max_atoms);

/// Close-to-convex sample description with both measures derived
/// deterministically from one seed.
CtcSample random_ctc_sample(std::uint64_t seed, std::size_t max_atoms);

/// Stream derivation for Monte Carlo sweeps: trial i of a master seed gets
/// mix_seed(master, i), independent of any worker partitioning.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace uvr
