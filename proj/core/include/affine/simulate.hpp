#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "affine/params.hpp"

namespace affine {

enum class Scheme { euler_full_truncation, exact_besq_timechange };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

// Simulation request. The integration grid is 0, dt, 2dt, ...; if dt does
// not divide t_max a shorter final step is taken so the grid always ends at
// t_max. record_every thins what is stored (the first and last points are
// always kept); hit detection still runs on every integration step.
struct SimConfig {
    std::uint64_t n_paths = 1000;
    double t_max = 1.0;
    double dt = 1e-3;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::euler_full_truncation;
    std::uint64_t record_every = 1;
    bool absorb = false;  // hold paths at 0 after their first hit
    unsigned threads = 0;  // 0 = hardware concurrency; output is identical either way

    void validate() const;  // throws std::invalid_argument
};

// A batch of trajectories on a shared recorded grid. values is row-major:
// path p occupies [p*times.size(), (p+1)*times.size()).
//
// hit_times[p] is the first integration-grid time strictly after 0 at which
// the path touched or crossed zero (for the Euler scheme: where the
// pre-clamp update was <= 0). It refers to the integration grid and need
// not be one of the recorded times when record_every > 1.
struct PathSet {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<std::optional<double>> hit_times;
    SimConfig config;
    DerivedParams derived;

    std::size_t n_paths() const { return hit_times.size(); }
    std::size_t n_times() const { return times.size(); }
    std::span<const double> path(std::size_t p) const {
        return {values.data() + p * times.size(), times.size()};
    }
    std::vector<double> at_time_index(std::size_t k) const;
    std::vector<double> terminal_values() const;
};

// Trajectories of X under dX = alpha sqrt(X) dw + (alpha*phi_tilde - lambda X) dt.
//
// euler_full_truncation: the diffusion term uses sqrt(max(X,0)) and the state
// is clamped at 0 after each update. exact_besq_timechange: each grid point
// is sampled from the exact squared-Bessel transition composed with the
// deterministic time change, so marginals carry no discretization bias (and
// never touch 0 for delta >= 2, unlike the Euler scheme whose clamping can
// produce spurious grid zeros).
PathSet simulate_x(const ModelParams& params, const SimConfig& cfg);

// z = sqrt(X), pointwise from simulate_x with the same seed (shared
// randomness); hit times are copied from the X paths.
PathSet simulate_z(const ModelParams& params, const SimConfig& cfg);

// Exact sampling of the Ornstein-Uhlenbeck comparison process
// dy = (alpha/2) dw - (lambda/2) y dt started at y0, using the Gaussian
// transition with exact conditional variance (no Euler stepping).
PathSet simulate_ou(const DerivedParams& dp, double y0, const SimConfig& cfg);

// s(t) = e^{-lambda t/2} / z(t), pathwise from simulate_z with shared
// randomness. Requires delta = 3 and X0 > 0 so that s(0) is finite.
PathSet simulate_s(const ModelParams& params, const SimConfig& cfg);

struct HittingStats {
    double fraction_hit = 0.0;
    std::size_t n_hit = 0;
    std::size_t n_paths = 0;
    std::vector<double> quantiles;  // 10/50/90% among hitters; empty if none
};

HittingStats hitting_stats(const PathSet& paths);

}  // namespace affine
