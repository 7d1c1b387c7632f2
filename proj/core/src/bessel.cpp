#include "affine/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace affine {

double time_change(const DerivedParams& dp, double t) {
    if (t < 0.0) throw std::domain_error("time_change requires t >= 0");
    const double a2 = dp.alpha * dp.alpha;
    if (dp.lambda == 0.0) return a2 * t / 4.0;
    return a2 * std::expm1(dp.lambda * t) / (4.0 * dp.lambda);
}

double besq_transition_sample(const BesqSpec& spec, double s, PathRng& rng) {
    if (!(s > 0.0)) throw std::domain_error("besq transition requires a positive step");
    if (spec.delta < 0.0 || spec.y0 < 0.0)
        throw std::invalid_argument("besq transition requires delta >= 0 and y0 >= 0");
    const std::uint64_t n = rng.poisson(spec.y0 / (2.0 * s));
    const double shape = spec.delta / 2.0 + static_cast<double>(n);
    return 2.0 * s * rng.gamma(shape);
}

std::vector<double> sample_x_exact(const DerivedParams& dp, std::span<const double> t_grid,
                                   PathRng& rng) {
    if (t_grid.empty()) throw std::invalid_argument("sample_x_exact: empty grid");
    if (t_grid[0] < 0.0) throw std::invalid_argument("sample_x_exact: grid must start >= 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("sample_x_exact: grid must be strictly increasing");
    }

    std::vector<double> x(t_grid.size());
    double y = dp.x0;
    double tau_prev = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double tau_i = time_change(dp, t_grid[i]);
        const double step = tau_i - tau_prev;
        if (step > 0.0) {
            y = besq_transition_sample(BesqSpec{dp.delta, y}, step, rng);
        }
        tau_prev = tau_i;
        x[i] = std::exp(-dp.lambda * t_grid[i]) * y;
    }
    return x;
}

DistTestReport besq_scaling_check(const BesqSpec& spec, double c, double t, int n,
                                  std::uint64_t seed, double threshold) {
    if (!(c > 0.0)) throw std::invalid_argument("scaling check requires c > 0");
    if (n < 1) throw std::invalid_argument("scaling check requires n >= 1");

    std::vector<double> lhs(static_cast<std::size_t>(n));
    std::vector<double> rhs(static_cast<std::size_t>(n));
    const BesqSpec scaled{spec.delta, c * spec.y0};
    for (int i = 0; i < n; ++i) {
        PathRng rng_a(seed, static_cast<std::uint64_t>(i));
        PathRng rng_b(seed + 1, static_cast<std::uint64_t>(i));
        lhs[static_cast<std::size_t>(i)] = c * besq_transition_sample(spec, t, rng_a);
        rhs[static_cast<std::size_t>(i)] = besq_transition_sample(scaled, c * t, rng_b);
    }
    return ks_two_sample(lhs, rhs, threshold);
}

}  // namespace affine
