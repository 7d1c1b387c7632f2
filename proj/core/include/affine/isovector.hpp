#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affine/closed_forms.hpp"
#include "affine/params.hpp"
#include "affine/reports.hpp"

namespace affine {

// Case split of the symmetry algebra of the equation with potential
// V = C/q^2 + D q^2. The algebra has dimension 6 exactly when C = 0 and
// dimension 4 otherwise; the shape of the solution family depends on the
// sign of D.
enum class CaseTag {
    c_nonzero_d_pos,   // 1a: C != 0, D > 0  (exponential family)
    c_nonzero_d_zero,  // 1b: C != 0, D = 0  (polynomial family)
    c_nonzero_d_neg,   // 1c: C != 0, D < 0  (trigonometric family)
    c_zero,            // 2:  C = 0          (adds the two-parameter l family)
};

std::string to_string(CaseTag tag);

struct IsovectorCase {
    CaseTag tag = CaseTag::c_zero;
    int dimension = 6;  // 6 iff tag == c_zero, else 4
    std::optional<double> epsilon;  // sqrt(8D) in 1a, sqrt(-8D) in 1c
};

// Tolerance below which a coefficient counts as exactly zero; scaled so that
// classification of exact inputs is stable.
IsovectorCase classify(const Potential& pot, double zero_tol = 1e-12);

// Closed-form solution of the auxiliary system
//
//   2*C*l = 0,   l'' = 2*D*l,   sigma' = (theta^2/4) T'',   T''' = 8*D*T'
//
// parametrized by (C1..C4) and, in the C = 0 case, additionally (L1, L2).
// All time derivatives are evaluated analytically from the closed forms.
class IsovectorSolution {
public:
    IsovectorSolution(IsovectorCase cs, double big_d, double theta,
                      std::array<double, 4> c, std::array<double, 2> l);

    const IsovectorCase& iso_case() const { return case_; }
    double theta() const { return theta_; }
    std::span<const double> coefficients() const { return c_; }
    std::span<const double> l_coefficients() const { return l_; }

    double t_n(double t) const;
    double t_n_dot(double t) const;
    double t_n_ddot(double t) const;
    double t_n_dddot(double t) const;
    double l(double t) const;
    double l_ddot(double t) const;
    double sigma(double t) const;
    double sigma_dot(double t) const;

private:
    IsovectorCase case_;
    double big_d_;
    double theta_;
    std::array<double, 4> c_;
    std::array<double, 2> l_;
};

// Builds the closed-form solution for the classified case. coeffs must have
// exactly 4 entries in cases 1a/1b/1c and 6 entries (C1..C4, L1, L2) in the
// C = 0 case.
IsovectorSolution solve_auxiliary(const Potential& pot, double theta,
                                  std::span<const double> coeffs);

// Evaluates the full auxiliary expression
//
//   q^2 (2D T' - T'''/4) + q (2D l - l'') + sigma' - (theta^2/4) T'' - 2 C l / q^3
//
// over the grid, with derivatives taken analytically. The report normalizes
// by 1 + max |coefficient| and passes at 1e-8.
ResidualReport auxiliary_residual(const IsovectorSolution& sol, const Potential& pot,
                                  std::span<const double> t_grid,
                                  std::span<const double> q_grid);

// One generator of the 4-dimensional algebra in the D = 0, C != 0 case,
// with components
//   N^t = C1 t^2 + C2 t + C3,
//   N^q = C1 t q + C2 q / 2,
//   N^S = (C1/2)(theta^2 t - q^2) + C4,
// specialized to C_j = delta_ij.
struct CanonicalIsovectorD0 {
    int index = 1;  // 1..4
    double theta = 1.0;

    double n_t(double t, double q) const;
    double n_q(double t, double q) const;
    double n_s(double t, double q) const;
};

// The four canonical generators for case 1b. Throws if (pot) does not
// classify as c_nonzero_d_zero.
std::vector<CanonicalIsovectorD0> canonical_basis_d0(const Potential& pot, double theta);

// Classification dimension for a model: derives (C, D) from the parameters
// and applies classify() with the model-scaled zero tolerance. Equals 6
// exactly when delta is 1 or 3.
int model_isovector_dimension(const ModelParams& params);

}  // namespace affine
