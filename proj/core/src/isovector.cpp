#include "affine/isovector.hpp"

#include <cmath>
#include <stdexcept>

namespace affine {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::c_nonzero_d_pos: return "c_nonzero_d_pos";
        case CaseTag::c_nonzero_d_zero: return "c_nonzero_d_zero";
        case CaseTag::c_nonzero_d_neg: return "c_nonzero_d_neg";
        case CaseTag::c_zero: return "c_zero";
    }
    return "unknown";
}

IsovectorCase classify(const Potential& pot, double zero_tol) {
    IsovectorCase cs;
    const bool c_zero = std::abs(pot.c) <= zero_tol;
    const bool d_zero = std::abs(pot.d) <= zero_tol;
    if (c_zero) {
        cs.tag = CaseTag::c_zero;
        cs.dimension = 6;
        return cs;
    }
    cs.dimension = 4;
    if (d_zero) {
        cs.tag = CaseTag::c_nonzero_d_zero;
    } else if (pot.d > 0.0) {
        cs.tag = CaseTag::c_nonzero_d_pos;
        cs.epsilon = std::sqrt(8.0 * pot.d);
    } else {
        cs.tag = CaseTag::c_nonzero_d_neg;
        cs.epsilon = std::sqrt(-8.0 * pot.d);
    }
    return cs;
}

IsovectorSolution::IsovectorSolution(IsovectorCase cs, double big_d, double theta,
                                     std::array<double, 4> c, std::array<double, 2> l)
    : case_(cs), big_d_(big_d), theta_(theta), c_(c), l_(l) {}

namespace {

enum class Family { exponential, polynomial, trigonometric };

Family family_of(double big_d, double zero_tol = 1e-12) {
    if (std::abs(big_d) <= zero_tol) return Family::polynomial;
    return big_d > 0.0 ? Family::exponential : Family::trigonometric;
}

}  // namespace

// T' = C1 e^{et} + C2 e^{-et}            (D > 0, e = sqrt(8D))
// T  = C1 t^2 + C2 t + C3                (D = 0)
// T' = C1 cos(et) + C2 sin(et)           (D < 0, e = sqrt(-8D))
double IsovectorSolution::t_n(double t) const {
    switch (family_of(big_d_)) {
        case Family::exponential: {
            const double e = std::sqrt(8.0 * big_d_);
            return c_[0] / e * std::exp(e * t) - c_[1] / e * std::exp(-e * t) + c_[2];
        }
        case Family::polynomial:
            return c_[0] * t * t + c_[1] * t + c_[2];
        case Family::trigonometric: {
            const double e = std::sqrt(-8.0 * big_d_);
            return c_[0] / e * std::sin(e * t) - c_[1] / e * std::cos(e * t) + c_[2];
        }
    }
    return 0.0;
}

double IsovectorSolution::t_n_dot(double t) const {
    switch (family_of(big_d_)) {
        case Family::exponential: {
            const double e = std::sqrt(8.0 * big_d_);
            return c_[0] * std::exp(e * t) + c_[1] * std::exp(-e * t);
        }
        case Family::polynomial:
            return 2.0 * c_[0] * t + c_[1];
        case Family::trigonometric: {
            const double e = std::sqrt(-8.0 * big_d_);
            return c_[0] * std::cos(e * t) + c_[1] * std::sin(e * t);
        }
    }
    return 0.0;
}

double IsovectorSolution::t_n_ddot(double t) const {
    switch (family_of(big_d_)) {
        case Family::exponential: {
            const double e = std::sqrt(8.0 * big_d_);
            return e * (c_[0] * std::exp(e * t) - c_[1] * std::exp(-e * t));
        }
        case Family::polynomial:
            return 2.0 * c_[0];
        case Family::trigonometric: {
            const double e = std::sqrt(-8.0 * big_d_);
            return e * (-c_[0] * std::sin(e * t) + c_[1] * std::cos(e * t));
        }
    }
    return 0.0;
}

double IsovectorSolution::t_n_dddot(double t) const {
    // T''' = 8 D T' in every family.
    return 8.0 * big_d_ * t_n_dot(t);
}

// l'' = 2 D l: exponential / affine / trigonometric in the sign of D.
double IsovectorSolution::l(double t) const {
    switch (family_of(big_d_)) {
        case Family::exponential: {
            const double w = std::sqrt(2.0 * big_d_);
            return l_[0] * std::exp(w * t) + l_[1] * std::exp(-w * t);
        }
        case Family::polynomial:
            return l_[0] * t + l_[1];
        case Family::trigonometric: {
            const double w = std::sqrt(-2.0 * big_d_);
            return l_[0] * std::cos(w * t) + l_[1] * std::sin(w * t);
        }
    }
    return 0.0;
}

double IsovectorSolution::l_ddot(double t) const {
    return 2.0 * big_d_ * l(t);
}

double IsovectorSolution::sigma(double t) const {
    if (family_of(big_d_) == Family::polynomial) {
        return theta_ * theta_ * c_[0] / 2.0 * t + c_[3];
    }
    return theta_ * theta_ / 4.0 * t_n_dot(t) + c_[3];
}

double IsovectorSolution::sigma_dot(double t) const {
    return theta_ * theta_ / 4.0 * t_n_ddot(t);
}

IsovectorSolution solve_auxiliary(const Potential& pot, double theta,
                                  std::span<const double> coeffs) {
    const IsovectorCase cs = classify(pot);
    const std::size_t want = cs.tag == CaseTag::c_zero ? 6 : 4;
    if (coeffs.size() != want) {
        throw std::invalid_argument("solve_auxiliary: expected " + std::to_string(want) +
                                    " coefficients for case " + to_string(cs.tag) + ", got " +
                                    std::to_string(coeffs.size()));
    }
    std::array<double, 4> c{coeffs[0], coeffs[1], coeffs[2], coeffs[3]};
    std::array<double, 2> l{0.0, 0.0};
    if (want == 6) l = {coeffs[4], coeffs[5]};
    return IsovectorSolution(cs, pot.d, theta, c, l);
}

ResidualReport auxiliary_residual(const IsovectorSolution& sol, const Potential& pot,
                                  std::span<const double> t_grid,
                                  std::span<const double> q_grid) {
    if (t_grid.empty() || q_grid.empty())
        throw std::invalid_argument("auxiliary_residual: empty grid");
    double max_abs = 0.0;
    for (double q : q_grid) {
        if (q == 0.0) throw std::invalid_argument("auxiliary_residual: q grid must avoid 0");
        for (double t : t_grid) {
            const double res = q * q * (2.0 * pot.d * sol.t_n_dot(t) - sol.t_n_dddot(t) / 4.0) +
                               q * (2.0 * pot.d * sol.l(t) - sol.l_ddot(t)) + sol.sigma_dot(t) -
                               sol.theta() * sol.theta() / 4.0 * sol.t_n_ddot(t) -
                               2.0 * pot.c * sol.l(t) / (q * q * q);
            max_abs = std::max(max_abs, std::abs(res));
        }
    }
    double max_coef = 0.0;
    for (double c : sol.coefficients()) max_coef = std::max(max_coef, std::abs(c));
    for (double c : sol.l_coefficients()) max_coef = std::max(max_coef, std::abs(c));

    ResidualReport rep;
    rep.equation = EquationId::auxiliary_ode;
    rep.grid.t0 = t_grid.front();
    rep.grid.t1 = t_grid.back();
    rep.grid.nt = static_cast<int>(t_grid.size());
    rep.grid.q0 = q_grid.front();
    rep.grid.q1 = q_grid.back();
    rep.grid.nq = static_cast<int>(q_grid.size());
    rep.grid.h = 0.0;  // analytic derivatives
    rep.max_abs_residual = max_abs;
    rep.max_rel_residual = max_abs / (1.0 + max_coef);
    rep.tolerance = 1e-8;
    rep.pass = rep.max_rel_residual <= rep.tolerance;
    return rep;
}

double CanonicalIsovectorD0::n_t(double t, double q) const {
    (void)q;
    switch (index) {
        case 1: return t * t;
        case 2: return t;
        case 3: return 1.0;
        default: return 0.0;
    }
}

double CanonicalIsovectorD0::n_q(double t, double q) const {
    switch (index) {
        case 1: return t * q;
        case 2: return q / 2.0;
        default: return 0.0;
    }
}

double CanonicalIsovectorD0::n_s(double t, double q) const {
    switch (index) {
        case 1: return 0.5 * (theta * theta * t - q * q);
        case 4: return 1.0;
        default: {
            (void)t;
            (void)q;
            return 0.0;
        }
    }
}

std::vector<CanonicalIsovectorD0> canonical_basis_d0(const Potential& pot, double theta) {
    const IsovectorCase cs = classify(pot);
    if (cs.tag != CaseTag::c_nonzero_d_zero) {
        throw std::invalid_argument(
            "canonical basis is available for the C != 0, D = 0 case only (got " +
            to_string(cs.tag) + ")");
    }
    std::vector<CanonicalIsovectorD0> basis;
    for (int i = 1; i <= 4; ++i) basis.push_back(CanonicalIsovectorD0{i, theta});
    return basis;
}

int model_isovector_dimension(const ModelParams& params) {
    const DerivedParams dp = derive(params);
    return classify(potential_of(dp), dp.c_zero_tolerance()).dimension;
}

}  // namespace affine
