#pragma once

#include <string>

namespace affine {

enum class EquationId { hjb, eta_forward, eta_star_adjoint, auxiliary_ode };

std::string to_string(EquationId id);

// Rectangular evaluation grid with the finite-difference step h used for the
// numerical derivatives.
struct GridSpec {
    double t0 = 0.1;
    double t1 = 1.0;
    int nt = 19;
    double q0 = 0.5;
    double q1 = 3.0;
    int nq = 26;
    double h = 1e-4;
};

// Result of checking a closed form against its differential equation on a
// grid. Residuals are normalized by the largest magnitude attained by any
// individual term of the equation on the grid, so a pass means the equation
// balances relative to its own scale.
struct ResidualReport {
    EquationId equation = EquationId::hjb;
    GridSpec grid;
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

}  // namespace affine
