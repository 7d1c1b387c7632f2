#include "affine/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace affine {

namespace {
constexpr double kDeltaTol = 1e-9;
}

double DerivedParams::c_zero_tolerance() const {
    const double a4 = alpha * alpha * alpha * alpha;
    return 1e-12 * std::max(1.0, a4);
}

bool DerivedParams::c_is_zero() const {
    return std::abs(big_c) <= c_zero_tolerance();
}

bool DerivedParams::is_delta_one() const {
    return std::abs(delta - 1.0) <= kDeltaTol;
}

bool DerivedParams::is_delta_three() const {
    return std::abs(delta - 3.0) <= kDeltaTol;
}

DerivedParams derive(const ModelParams& p) {
    if (!(p.alpha > 0.0)) {
        std::ostringstream msg;
        msg << "model requires alpha > 0 (got alpha = " << p.alpha
            << "); alpha = 0 is the constant-volatility (Vasicek) case, out of scope";
        throw std::invalid_argument(msg.str());
    }
    const double x0 = p.alpha * p.r0 + p.beta;
    if (x0 < 0.0) {
        std::ostringstream msg;
        msg << "positivity hypothesis alpha*r0 + beta >= 0 violated (got " << x0 << ")";
        throw std::invalid_argument(msg.str());
    }
    const double phi_tilde = p.phi + p.lambda * p.beta / p.alpha;
    if (phi_tilde < 0.0) {
        std::ostringstream msg;
        msg << "model requires phi_tilde = phi + lambda*beta/alpha >= 0 (got " << phi_tilde
            << ")";
        throw std::invalid_argument(msg.str());
    }

    DerivedParams d;
    d.alpha = p.alpha;
    d.lambda = p.lambda;
    d.phi_tilde = phi_tilde;
    d.delta = 4.0 * phi_tilde / p.alpha;
    d.big_c = (p.alpha * p.alpha / 8.0) * (phi_tilde - p.alpha / 4.0) *
              (phi_tilde - 3.0 * p.alpha / 4.0);
    d.big_d = p.lambda * p.lambda / 8.0;
    d.theta = p.alpha / 2.0;
    d.x0 = x0;
    d.z0 = std::sqrt(x0);
    return d;
}

}  // namespace affine
