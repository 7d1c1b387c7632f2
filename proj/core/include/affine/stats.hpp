#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace affine {

enum class TestKind { ks_one_sample, ks_two_sample, chi_square_gof };

std::string to_string(TestKind k);

// Outcome of a distributional test. For the KS kinds, pass means
// statistic <= threshold; for the chi-square test, pass means
// p_value >= threshold. p_value is NaN for the KS kinds.
struct DistTestReport {
    TestKind kind = TestKind::ks_one_sample;
    double statistic = 0.0;
    std::size_t n_a = 0;
    std::size_t n_b = 0;  // 0 unless two-sample
    double threshold = 0.0;
    double p_value = 0.0;
    bool pass = false;
};

// Kolmogorov-Smirnov sup-distance between the empirical CDF of `samples`
// and the reference CDF. The CDF must be nondecreasing on the sample range.
DistTestReport ks_one_sample(std::span<const double> samples,
                             const std::function<double(double)>& cdf, double threshold);

// Two-sample KS sup-distance between empirical CDFs.
DistTestReport ks_two_sample(std::span<const double> a, std::span<const double> b,
                             double threshold);

// Chi-square goodness of fit over n_bins equal-probability bins of the
// reference CDF. Bin edges come from inverting the CDF; pass iff the
// chi-square p-value (n_bins - 1 dof) is >= p_min.
DistTestReport chi_square_gof(std::span<const double> samples,
                              const std::function<double(double)>& cdf, int n_bins,
                              double p_min, double lo_hint, double hi_hint);

}  // namespace affine
