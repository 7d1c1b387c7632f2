#include "affine/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "affine/special.hpp"

namespace affine {

std::string to_string(TestKind k) {
    switch (k) {
        case TestKind::ks_one_sample: return "ks_one_sample";
        case TestKind::ks_two_sample: return "ks_two_sample";
        case TestKind::chi_square_gof: return "chi_square_gof";
    }
    return "unknown";
}

DistTestReport ks_one_sample(std::span<const double> samples,
                             const std::function<double(double)>& cdf, double threshold) {
    if (samples.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
    std::vector<double> x(samples.begin(), samples.end());
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    DistTestReport r;
    r.kind = TestKind::ks_one_sample;
    r.statistic = d;
    r.n_a = x.size();
    r.threshold = threshold;
    r.p_value = std::numeric_limits<double>::quiet_NaN();
    r.pass = d <= threshold;
    return r;
}

DistTestReport ks_two_sample(std::span<const double> a, std::span<const double> b,
                             double threshold) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::vector<double> xa(a.begin(), a.end());
    std::vector<double> xb(b.begin(), b.end());
    std::sort(xa.begin(), xa.end());
    std::sort(xb.begin(), xb.end());
    const double na = static_cast<double>(xa.size());
    const double nb = static_cast<double>(xb.size());
    double d = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < xa.size() && j < xb.size()) {
        const double v = std::min(xa[i], xb[j]);
        while (i < xa.size() && xa[i] <= v) ++i;
        while (j < xb.size() && xb[j] <= v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    DistTestReport r;
    r.kind = TestKind::ks_two_sample;
    r.statistic = d;
    r.n_a = xa.size();
    r.n_b = xb.size();
    r.threshold = threshold;
    r.p_value = std::numeric_limits<double>::quiet_NaN();
    r.pass = d <= threshold;
    return r;
}

DistTestReport chi_square_gof(std::span<const double> samples,
                              const std::function<double(double)>& cdf, int n_bins,
                              double p_min, double lo_hint, double hi_hint) {
    if (samples.empty()) throw std::invalid_argument("chi_square_gof: empty sample");
    if (n_bins < 2) throw std::invalid_argument("chi_square_gof: need at least 2 bins");

    std::vector<double> edges(static_cast<std::size_t>(n_bins) - 1);
    for (int k = 1; k < n_bins; ++k) {
        const double p = static_cast<double>(k) / n_bins;
        edges[static_cast<std::size_t>(k - 1)] = invert_cdf(cdf, p, lo_hint, hi_hint);
    }

    std::vector<std::size_t> counts(static_cast<std::size_t>(n_bins), 0);
    for (double v : samples) {
        const auto it = std::upper_bound(edges.begin(), edges.end(), v);
        ++counts[static_cast<std::size_t>(it - edges.begin())];
    }

    const double expected = static_cast<double>(samples.size()) / n_bins;
    double stat = 0.0;
    for (std::size_t c : counts) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    const double dof = n_bins - 1;
    const double p_value = gamma_q(dof / 2.0, stat / 2.0);

    DistTestReport r;
    r.kind = TestKind::chi_square_gof;
    r.statistic = stat;
    r.n_a = samples.size();
    r.threshold = p_min;
    r.p_value = p_value;
    r.pass = p_value >= p_min;
    return r;
}

}  // namespace affine
