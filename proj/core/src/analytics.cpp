#include "affine/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "affine/bessel.hpp"
#include "affine/closed_forms.hpp"
#include "affine/rng.hpp"

namespace affine {

std::string to_string(EquationId id) {
    switch (id) {
        case EquationId::hjb: return "hjb";
        case EquationId::eta_forward: return "eta_forward";
        case EquationId::eta_star_adjoint: return "eta_star_adjoint";
        case EquationId::auxiliary_ode: return "auxiliary_ode";
    }
    return "unknown";
}

namespace {

struct TermSplit {
    double residual = 0.0;
    double scale = 0.0;  // max |term|
};

using Field = std::function<double(double, double)>;

TermSplit eval_terms(EquationId eq, const DerivedParams& dp, const Field& f, double t,
                     double q, double h) {
    const double th2 = dp.theta * dp.theta;
    const double v = potential_eval(potential_of(dp), q);
    const double f_t = (f(t + h, q) - f(t - h, q)) / (2.0 * h);
    const double f_qq = (f(t, q + h) - 2.0 * f(t, q) + f(t, q - h)) / (h * h);

    TermSplit out;
    switch (eq) {
        case EquationId::hjb: {
            const double f_q = (f(t, q + h) - f(t, q - h)) / (2.0 * h);
            const double terms[4] = {f_t, th2 / 2.0 * f_qq, -0.5 * f_q * f_q, v};
            out.residual = terms[0] + terms[1] + terms[2] + terms[3];
            for (double x : terms) out.scale = std::max(out.scale, std::abs(x));
            break;
        }
        case EquationId::eta_forward: {
            const double terms[3] = {th2 * f_t, th2 * th2 / 2.0 * f_qq, -v * f(t, q)};
            out.residual = terms[0] + terms[1] + terms[2];
            for (double x : terms) out.scale = std::max(out.scale, std::abs(x));
            break;
        }
        case EquationId::eta_star_adjoint: {
            const double terms[3] = {-th2 * f_t, th2 * th2 / 2.0 * f_qq, -v * f(t, q)};
            out.residual = terms[0] + terms[1] + terms[2];
            for (double x : terms) out.scale = std::max(out.scale, std::abs(x));
            break;
        }
        case EquationId::auxiliary_ode:
            throw std::invalid_argument("auxiliary_ode residuals are computed analytically");
    }
    return out;
}

}  // namespace

ResidualReport pde_residual(EquationId equation, const DerivedParams& dp,
                            const GridSpec& grid, double tolerance) {
    if (grid.nt < 1 || grid.nq < 1 || !(grid.h > 0.0))
        throw std::invalid_argument("pde_residual: invalid grid");

    Field f;
    switch (equation) {
        case EquationId::hjb:
            f = [&dp](double t, double q) { return action_s(dp, t, q); };
            break;
        case EquationId::eta_forward:
            f = [&dp](double t, double q) { return eta(dp, t, q); };
            break;
        case EquationId::eta_star_adjoint:
            if (dp.is_delta_one()) {
                f = [&dp](double t, double q) { return eta_star_delta1(dp, t, q); };
            } else if (dp.is_delta_three()) {
                f = [&dp](double t, double q) { return eta_star_delta3(dp, t, q); };
            } else {
                throw std::invalid_argument(
                    "eta* has a closed form only for delta = 1 or delta = 3");
            }
            break;
        case EquationId::auxiliary_ode:
            throw std::invalid_argument("use auxiliary_residual for the isovector system");
    }

    double max_abs = 0.0;
    double scale = 0.0;
    for (int it = 0; it < grid.nt; ++it) {
        const double t =
            grid.nt == 1 ? grid.t0 : grid.t0 + (grid.t1 - grid.t0) * it / (grid.nt - 1.0);
        for (int iq = 0; iq < grid.nq; ++iq) {
            const double q =
                grid.nq == 1 ? grid.q0 : grid.q0 + (grid.q1 - grid.q0) * iq / (grid.nq - 1.0);
            const TermSplit ts = eval_terms(equation, dp, f, t, q, grid.h);
            max_abs = std::max(max_abs, std::abs(ts.residual));
            scale = std::max(scale, ts.scale);
        }
    }

    ResidualReport rep;
    rep.equation = equation;
    rep.grid = grid;
    rep.max_abs_residual = max_abs;
    rep.max_rel_residual = scale > 0.0 ? max_abs / scale : max_abs;
    rep.tolerance = tolerance;
    rep.pass = rep.max_rel_residual <= tolerance;
    return rep;
}

OuMomentReport moment_check_ou(const PathSet& paths, const DerivedParams& dp, double t) {
    std::size_t idx = paths.times.size();
    for (std::size_t k = 0; k < paths.times.size(); ++k) {
        if (std::abs(paths.times[k] - t) <= 1e-12 * std::max(1.0, std::abs(t))) {
            idx = k;
            break;
        }
    }
    if (idx == paths.times.size())
        throw std::invalid_argument("moment_check_ou: t is not a recorded grid time");

    const std::vector<double> x = paths.at_time_index(idx);
    const double n = static_cast<double>(x.size());
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    var /= (n - 1.0);

    OuMomentReport rep;
    rep.t = t;
    rep.empirical_mean = mean;
    rep.empirical_variance = var;
    rep.expected_mean = delta1_mean(dp, t);
    rep.expected_variance = t == 0.0 ? 0.0 : delta1_variance(dp, t);
    rep.mean_se = std::sqrt(var / n);
    rep.variance_rel_se = std::sqrt(2.0 / (n - 1.0));
    if (t == 0.0) {
        rep.mean_pass = mean == rep.expected_mean;
        rep.variance_pass = var == 0.0;
    } else {
        rep.mean_pass = std::abs(mean - rep.expected_mean) <= 3.0 * rep.mean_se;
        rep.variance_pass = std::abs(var - rep.expected_variance) / rep.expected_variance <=
                            3.0 * rep.variance_rel_se;
    }
    rep.pass = rep.mean_pass && rep.variance_pass;
    return rep;
}

SExpectationReport s_expectation_study(const ModelParams& params, const SimConfig& cfg,
                                       std::span<const double> t_checkpoints,
                                       double increment_t, double increment_dt) {
    const DerivedParams dp = derive(params);
    if (!dp.is_delta_three())
        throw std::invalid_argument("s-expectation study requires delta = 3");
    if (!(dp.x0 > 0.0)) throw std::invalid_argument("s-expectation study requires X0 > 0");
    if (t_checkpoints.empty())
        throw std::invalid_argument("s-expectation study: no checkpoints");
    for (double t : t_checkpoints) {
        if (!(t > 0.0)) throw std::invalid_argument("checkpoints must be positive");
    }

    const std::size_t n = cfg.n_paths;
    const std::vector<double> grid(t_checkpoints.begin(), t_checkpoints.end());
    const std::vector<double> inc_grid{increment_t, increment_t + increment_dt};

    // Exact-transition sampling per path; accumulation is per-path-indexed,
    // then reduced sequentially, so results do not depend on thread count.
    std::vector<double> s_at(n * grid.size());
    std::vector<double> s_inc(n);
    for (std::size_t p = 0; p < n; ++p) {
        PathRng rng(cfg.seed, p);
        const std::vector<double> x = sample_x_exact(dp, grid, rng);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            s_at[p * grid.size() + k] = std::exp(-dp.lambda * grid[k] / 2.0) / std::sqrt(x[k]);
        }
        PathRng rng2(cfg.seed + 1, p);
        const std::vector<double> xi = sample_x_exact(dp, inc_grid, rng2);
        const double s_a = std::exp(-dp.lambda * inc_grid[0] / 2.0) / std::sqrt(xi[0]);
        const double s_b = std::exp(-dp.lambda * inc_grid[1] / 2.0) / std::sqrt(xi[1]);
        s_inc[p] = s_b - s_a;
    }

    SExpectationReport rep;
    rep.s0 = 1.0 / dp.z0;
    rep.n_paths = n;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double mean = 0.0;
        for (std::size_t p = 0; p < n; ++p) mean += s_at[p * grid.size() + k];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            const double d = s_at[p * grid.size() + k] - mean;
            var += d * d;
        }
        var /= static_cast<double>(n - 1);
        SCheckpoint cp;
        cp.t = grid[k];
        cp.mean = mean;
        cp.se = std::sqrt(var / static_cast<double>(n));
        cp.deviation_from_s0 = mean - rep.s0;
        rep.checkpoints.push_back(cp);
    }

    double inc_mean = 0.0;
    for (double v : s_inc) inc_mean += v;
    inc_mean /= static_cast<double>(n);
    double inc_var = 0.0;
    for (double v : s_inc) inc_var += (v - inc_mean) * (v - inc_mean);
    inc_var /= static_cast<double>(n - 1);
    rep.increment_t = increment_t;
    rep.increment_dt = increment_dt;
    rep.increment_mean = inc_mean;
    rep.increment_se = std::sqrt(inc_var / static_cast<double>(n));
    rep.increment_within_3se = std::abs(inc_mean) <= 3.0 * rep.increment_se;

    rep.constancy_supported = true;
    rep.monotone_decreasing = true;
    double prev = rep.s0;
    for (const auto& cp : rep.checkpoints) {
        if (std::abs(cp.deviation_from_s0) > 3.0 * cp.se) rep.constancy_supported = false;
        if (cp.mean > prev) rep.monotone_decreasing = false;
        prev = cp.mean;
    }
    return rep;
}

}  // namespace affine
