#include "affine/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "affine/bessel.hpp"
#include "affine/rng.hpp"

namespace affine {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::euler_full_truncation: return "euler_full_truncation";
        case Scheme::exact_besq_timechange: return "exact_besq_timechange";
    }
    return "unknown";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "euler_full_truncation") return Scheme::euler_full_truncation;
    if (name == "exact_besq_timechange") return Scheme::exact_besq_timechange;
    throw std::invalid_argument("unknown scheme: " + name);
}

void SimConfig::validate() const {
    if (n_paths < 1) throw std::invalid_argument("sim config requires n_paths >= 1");
    if (!(t_max > 0.0)) throw std::invalid_argument("sim config requires t_max > 0");
    if (!(dt > 0.0) || dt > t_max * (1.0 + 1e-9))
        throw std::invalid_argument("sim config requires 0 < dt <= t_max");
    if (record_every < 1) throw std::invalid_argument("sim config requires record_every >= 1");
}

std::vector<double> PathSet::at_time_index(std::size_t k) const {
    std::vector<double> out(n_paths());
    for (std::size_t p = 0; p < n_paths(); ++p) out[p] = values[p * times.size() + k];
    return out;
}

std::vector<double> PathSet::terminal_values() const {
    return at_time_index(times.size() - 1);
}

namespace {

// Integration grid: k full steps of dt plus a shorter final step when dt
// does not divide t_max.
std::vector<double> integration_grid(double t_max, double dt) {
    const auto n_full = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
    std::vector<double> grid;
    grid.reserve(n_full + 2);
    grid.push_back(0.0);
    for (std::size_t k = 1; k <= n_full; ++k) grid.push_back(static_cast<double>(k) * dt);
    if (grid.back() < t_max - 1e-9 * std::max(1.0, t_max)) grid.push_back(t_max);
    grid.back() = std::min(grid.back(), t_max);
    return grid;
}

std::vector<std::size_t> recorded_indices(std::size_t n_grid, std::uint64_t stride) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n_grid; k += stride) idx.push_back(k);
    if (idx.back() != n_grid - 1) idx.push_back(n_grid - 1);
    return idx;
}

template <typename Fn>
void parallel_over_paths(std::size_t n_paths, unsigned threads, Fn&& body) {
    unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (n_threads == 0) n_threads = 1;
    n_threads = static_cast<unsigned>(
        std::min<std::size_t>(n_threads, std::max<std::size_t>(n_paths, 1)));
    if (n_threads == 1) {
        body(std::size_t{0}, n_paths);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    const std::size_t chunk = (n_paths + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
        const std::size_t begin = static_cast<std::size_t>(t) * chunk;
        const std::size_t end = std::min(n_paths, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& th : pool) th.join();
}

PathSet make_path_set(const SimConfig& cfg, const DerivedParams& dp,
                      const std::vector<double>& grid,
                      const std::vector<std::size_t>& rec) {
    PathSet out;
    out.config = cfg;
    out.derived = dp;
    out.times.reserve(rec.size());
    for (std::size_t k : rec) out.times.push_back(grid[k]);
    out.values.assign(cfg.n_paths * rec.size(), 0.0);
    out.hit_times.assign(cfg.n_paths, std::nullopt);
    return out;
}

}  // namespace

PathSet simulate_x(const ModelParams& params, const SimConfig& cfg) {
    cfg.validate();
    const DerivedParams dp = derive(params);
    const std::vector<double> grid = integration_grid(cfg.t_max, cfg.dt);
    const std::vector<std::size_t> rec = recorded_indices(grid.size(), cfg.record_every);
    PathSet out = make_path_set(cfg, dp, grid, rec);
    const std::size_t n_rec = rec.size();

    if (cfg.scheme == Scheme::euler_full_truncation) {
        const double drift_level = dp.alpha * dp.phi_tilde;
        parallel_over_paths(cfg.n_paths, cfg.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t p = begin; p < end; ++p) {
                PathRng rng(cfg.seed, p);
                double x = dp.x0;
                std::size_t next_rec = 0;
                double* row = out.values.data() + p * n_rec;
                row[next_rec++] = x;
                bool hit = false;
                for (std::size_t k = 1; k < grid.size(); ++k) {
                    if (!(hit && cfg.absorb)) {
                        const double step = grid[k] - grid[k - 1];
                        const double dw = std::sqrt(step) * rng.normal();
                        const double pre = x + dp.alpha * std::sqrt(x) * dw +
                                           (drift_level - dp.lambda * x) * step;
                        if (pre <= 0.0 && !hit) {
                            hit = true;
                            out.hit_times[p] = grid[k];
                        }
                        x = std::max(pre, 0.0);
                        if (hit && cfg.absorb) x = 0.0;
                    }
                    if (next_rec < n_rec && rec[next_rec] == k) row[next_rec++] = x;
                }
            }
        });
    } else {
        parallel_over_paths(cfg.n_paths, cfg.threads, [&](std::size_t begin, std::size_t end) {
            std::span<const double> t_tail(grid.data() + 1, grid.size() - 1);
            for (std::size_t p = begin; p < end; ++p) {
                PathRng rng(cfg.seed, p);
                const std::vector<double> x_tail = sample_x_exact(dp, t_tail, rng);
                double* row = out.values.data() + p * n_rec;
                std::size_t next_rec = 0;
                row[next_rec++] = dp.x0;
                bool hit = false;
                double absorbed = 0.0;
                for (std::size_t k = 1; k < grid.size(); ++k) {
                    double x = x_tail[k - 1];
                    if (hit && cfg.absorb) x = absorbed;
                    if (x <= 0.0 && !hit) {
                        hit = true;
                        out.hit_times[p] = grid[k];
                    }
                    if (next_rec < n_rec && rec[next_rec] == k) row[next_rec++] = x;
                }
            }
        });
    }
    return out;
}

PathSet simulate_z(const ModelParams& params, const SimConfig& cfg) {
    PathSet out = simulate_x(params, cfg);
    for (double& v : out.values) v = std::sqrt(v);
    return out;
}

PathSet simulate_ou(const DerivedParams& dp, double y0, const SimConfig& cfg) {
    cfg.validate();
    const std::vector<double> grid = integration_grid(cfg.t_max, cfg.dt);
    const std::vector<std::size_t> rec = recorded_indices(grid.size(), cfg.record_every);
    PathSet out = make_path_set(cfg, dp, grid, rec);
    const std::size_t n_rec = rec.size();

    parallel_over_paths(cfg.n_paths, cfg.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            PathRng rng(cfg.seed, p);
            double y = y0;
            double* row = out.values.data() + p * n_rec;
            std::size_t next_rec = 0;
            row[next_rec++] = y;
            bool hit = false;
            for (std::size_t k = 1; k < grid.size(); ++k) {
                const double step = grid[k] - grid[k - 1];
                double sd;
                if (dp.lambda == 0.0) {
                    sd = 0.5 * dp.alpha * std::sqrt(step);
                } else {
                    sd = std::sqrt(dp.alpha * dp.alpha * (-std::expm1(-dp.lambda * step)) /
                                   (4.0 * dp.lambda));
                }
                y = std::exp(-dp.lambda * step / 2.0) * y + sd * rng.normal();
                if (y <= 0.0 && !hit) {
                    hit = true;
                    out.hit_times[p] = grid[k];
                }
                if (next_rec < n_rec && rec[next_rec] == k) row[next_rec++] = y;
            }
        }
    });
    return out;
}

PathSet simulate_s(const ModelParams& params, const SimConfig& cfg) {
    const DerivedParams dp = derive(params);
    if (!dp.is_delta_three())
        throw std::invalid_argument("s(t) is defined for delta = 3 only");
    if (!(dp.x0 > 0.0))
        throw std::invalid_argument("s(t) requires X0 > 0, otherwise s(0) is infinite");

    PathSet out = simulate_z(params, cfg);
    const std::size_t n_rec = out.times.size();
    for (std::size_t p = 0; p < out.n_paths(); ++p) {
        double* row = out.values.data() + p * n_rec;
        for (std::size_t k = 0; k < n_rec; ++k) {
            const double decay = std::exp(-dp.lambda * out.times[k] / 2.0);
            // Absorbed z-paths sit at 0; keep s at 0 there as well rather
            // than storing infinities.
            row[k] = row[k] > 0.0 ? decay / row[k] : 0.0;
        }
    }
    return out;
}

HittingStats hitting_stats(const PathSet& paths) {
    HittingStats st;
    st.n_paths = paths.n_paths();
    std::vector<double> hits;
    for (const auto& h : paths.hit_times) {
        if (h) hits.push_back(*h);
    }
    st.n_hit = hits.size();
    st.fraction_hit =
        st.n_paths == 0 ? 0.0 : static_cast<double>(st.n_hit) / static_cast<double>(st.n_paths);
    if (!hits.empty()) {
        std::sort(hits.begin(), hits.end());
        for (double p : {0.10, 0.50, 0.90}) {
            // Nearest-rank quantile.
            const auto idx = static_cast<std::size_t>(
                std::ceil(p * static_cast<double>(hits.size()))) - 1;
            st.quantiles.push_back(hits[std::min(idx, hits.size() - 1)]);
        }
    }
    return st;
}

}  // namespace affine
