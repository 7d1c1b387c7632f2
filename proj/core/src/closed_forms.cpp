#include "affine/closed_forms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "affine/special.hpp"

namespace affine {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_delta(const DerivedParams& dp, double want) {
    if (std::abs(dp.delta - want) > 1e-9) {
        std::ostringstream msg;
        msg << "closed form requires delta = " << want << " (got delta = " << dp.delta << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Potential potential_of(const DerivedParams& dp) {
    return Potential{dp.big_c, dp.big_d};
}

double potential_eval(const Potential& pot, double q) {
    if (q == 0.0) throw std::domain_error("potential has a 1/q^2 pole at q = 0");
    return pot.c / (q * q) + pot.d * q * q;
}

double bernstein_drift(const DerivedParams& dp, double q) {
    if (!(q > 0.0)) throw std::domain_error("bernstein drift requires q > 0");
    const double a2 = dp.alpha * dp.alpha;
    return (a2 * dp.delta - a2 - 4.0 * dp.lambda * q * q) / (8.0 * q);
}

double log_eta(const DerivedParams& dp, double t, double q) {
    const double a2 = dp.alpha * dp.alpha;
    if (dp.is_delta_one()) {
        if (q < 0.0) throw std::domain_error("eta requires q >= 0");
        return dp.lambda * dp.delta * t / 4.0 - dp.lambda * q * q / a2;
    }
    if (!(q > 0.0)) throw std::domain_error("eta requires q > 0 for delta != 1");
    return dp.lambda * dp.delta * t / 4.0 - dp.lambda * q * q / a2 +
           0.5 * (dp.delta - 1.0) * std::log(q);
}

double eta(const DerivedParams& dp, double t, double q) {
    return std::exp(log_eta(dp, t, q));
}

double action_s(const DerivedParams& dp, double t, double q) {
    if (!(q > 0.0)) throw std::domain_error("action requires q > 0");
    const double a2 = dp.alpha * dp.alpha;
    return -a2 * dp.lambda * dp.delta * t / 16.0 + dp.lambda * q * q / 4.0 -
           a2 * (dp.delta - 1.0) / 8.0 * std::log(q);
}

double eta_star_delta1(const DerivedParams& dp, double t, double q) {
    require_delta(dp, 1.0);
    if (!(dp.lambda > 0.0)) throw std::domain_error("eta* (delta=1) requires lambda > 0");
    if (!(t > 0.0)) throw std::domain_error("eta* requires t > 0");
    const double l = dp.lambda;
    const double a2 = dp.alpha * dp.alpha;
    const double em = std::exp(-l * t);
    const double emh = std::exp(-l * t / 2.0);
    const double denom = a2 * (1.0 - em);
    const double expo = (-l * q * q - l * q * q * em + 4.0 * l * q * dp.z0 * emh -
                         2.0 * l * dp.z0 * dp.z0 * em) /
                        denom;
    // Prefactor in logs: sinh(lambda t/2) overflows for large lambda*t.
    const double log_pref =
        -std::log(dp.alpha) + 0.5 * (std::log(l) - std::log(kPi) - log_sinh(l * t / 2.0));
    return std::exp(log_pref + expo);
}

double eta_star_delta3(const DerivedParams& dp, double t, double q) {
    require_delta(dp, 3.0);
    if (dp.lambda == 0.0) throw std::domain_error("eta* (delta=3) requires lambda != 0");
    if (!(t > 0.0)) throw std::domain_error("eta* requires t > 0");
    if (!(q > 0.0)) throw std::domain_error("eta* (delta=3) requires q > 0");
    if (dp.x0 != 0.0)
        throw std::invalid_argument("eta* (delta=3) closed form assumes X0 = 0");
    const double l = dp.lambda;
    const double a3 = dp.alpha * dp.alpha * dp.alpha;
    const double ratio = l / (-std::expm1(-l * t));  // lambda/(1-e^{-lt}) > 0 for both signs
    const double log_pref = std::log(16.0) + 1.5 * std::log(ratio) - std::log(a3) -
                            0.5 * std::log(2.0 * kPi);
    const double expo =
        -0.75 * l * t - l * q * q / (dp.alpha * dp.alpha * std::tanh(l * t / 2.0));
    return std::exp(log_pref + expo + std::log(q));
}

double delta1_mean(const DerivedParams& dp, double t) {
    return std::exp(-dp.lambda * t / 2.0) * dp.z0;
}

double delta1_variance(const DerivedParams& dp, double t) {
    const double a2 = dp.alpha * dp.alpha;
    if (dp.lambda == 0.0) return a2 * t / 4.0;
    return a2 * (-std::expm1(-dp.lambda * t)) / (4.0 * dp.lambda);
}

double density_delta1(const DerivedParams& dp, double t, double q) {
    if (!(t > 0.0)) throw std::domain_error("density requires t > 0");
    const double v = delta1_variance(dp, t);
    const double m = delta1_mean(dp, t);
    return normal_pdf((q - m) / std::sqrt(v)) / std::sqrt(v);
}

double cdf_delta1(const DerivedParams& dp, double t, double q) {
    if (!(t > 0.0)) throw std::domain_error("cdf requires t > 0");
    const double v = delta1_variance(dp, t);
    const double m = delta1_mean(dp, t);
    return normal_cdf((q - m) / std::sqrt(v));
}

double delta3_rate(const DerivedParams& dp, double t) {
    if (dp.lambda == 0.0) throw std::domain_error("delta=3 law requires lambda != 0");
    if (!(t > 0.0)) throw std::domain_error("delta=3 law requires t > 0");
    return 2.0 * dp.lambda / (dp.alpha * dp.alpha * (-std::expm1(-dp.lambda * t)));
}

double density_delta3(const DerivedParams& dp, double t, double q) {
    require_delta(dp, 3.0);
    if (dp.x0 != 0.0) throw std::invalid_argument("delta=3 law assumes X0 = 0");
    const double a = delta3_rate(dp, t);
    if (q < 0.0) return 0.0;
    // (1/sqrt(2pi)) * 16 lambda^{3/2} / (alpha^3 (1-e^{-lt})^{3/2}) = 4 a^{3/2}/sqrt(pi)
    return 4.0 * a * std::sqrt(a / kPi) * q * q * std::exp(-a * q * q);
}

double cdf_delta3(const DerivedParams& dp, double t, double q) {
    require_delta(dp, 3.0);
    if (dp.x0 != 0.0) throw std::invalid_argument("delta=3 law assumes X0 = 0");
    const double a = delta3_rate(dp, t);
    if (q <= 0.0) return 0.0;
    const double s = std::sqrt(a) * q;
    return std::erf(s) - 2.0 * std::sqrt(a / kPi) * q * std::exp(-a * q * q);
}

}  // namespace affine
