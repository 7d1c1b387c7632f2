#pragma once

#include <span>
#include <vector>

#include "affine/params.hpp"
#include "affine/rng.hpp"
#include "affine/stats.hpp"

namespace affine {

// Squared Bessel process dY = 2 sqrt(Y) dw + delta dt.
struct BesqSpec {
    double delta = 1.0;  // dimension parameter, >= 0
    double y0 = 0.0;     // initial value, >= 0
};

// Deterministic clock tau(t) mapping X onto a squared Bessel process via
// X_t = e^{-lambda t} Y(tau(t)):
//
//   tau(t) = alpha^2 (e^{lambda t} - 1) / (4 lambda),   tau(t) = alpha^2 t / 4 at lambda = 0.
//
// Implemented with expm1 so the two branches agree near lambda = 0.
double time_change(const DerivedParams& dp, double t);

// One draw from the exact BESQ^delta transition over a time step s > 0
// started at y0: 2s * Gamma(delta/2 + N) with N ~ Poisson(y0 / (2s)).
// This is the noncentral-chi-square law of dimension delta; for delta = 0
// the event N = 0 is the absorbing atom at the origin.
double besq_transition_sample(const BesqSpec& spec, double s, PathRng& rng);

// Exact sampling of X on an arbitrary increasing grid (t_grid[0] >= 0) by
// stepping Y through the time-changed increments and undoing the
// e^{-lambda t} scaling. Marginals and joint law are exact.
std::vector<double> sample_x_exact(const DerivedParams& dp, std::span<const double> t_grid,
                                   PathRng& rng);

// Distributional check of the Bessel scaling property: c * Y(t) from y0
// must equal Y'(c t) from c * y0 in law (same delta). Two independent
// batches of n exact-transition samples are compared with a two-sample KS
// test at the given threshold.
DistTestReport besq_scaling_check(const BesqSpec& spec, double c, double t, int n,
                                  std::uint64_t seed, double threshold = 0.02);

}  // namespace affine
