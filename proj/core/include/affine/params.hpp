#pragma once

namespace affine {

// Inputs of a one-factor affine short-rate model
//
//   dr(t) = sqrt(alpha*r(t) + beta) dw(t) + (phi - lambda*r(t)) dt
//
// under the pricing measure. alpha = 0 would be the constant-volatility
// (Vasicek) limit which this library does not simulate; beta = 0 is the
// classic square-root (CIR) model.
struct ModelParams {
    double alpha = 1.0;   // volatility-structure coefficient, must be > 0
    double beta = 0.0;    // affine offset of the squared volatility
    double phi = 0.0;     // drift constant
    double lambda = 0.0;  // mean-reversion rate
    double r0 = 0.0;      // initial short rate
};

// Quantities derived from ModelParams. These drive every closed form:
//
//   phi_tilde = phi + lambda*beta/alpha          (effective drift level)
//   delta     = 4*phi_tilde/alpha                (squared-Bessel dimension)
//   big_c     = (alpha^2/8)(phi_tilde - alpha/4)(phi_tilde - 3*alpha/4)
//             = (alpha^4/128)(delta - 1)(delta - 3)
//   big_d     = lambda^2/8
//   theta     = alpha/2                          (diffusion coeff of z = sqrt(X))
//   x0        = alpha*r0 + beta                  (initial value of X)
//   z0        = sqrt(x0)
//
// big_c and big_d are the coefficients of the potential V(q) = C/q^2 + D q^2
// attached to the model; big_c vanishes exactly when delta is 1 or 3.
struct DerivedParams {
    double alpha = 0.0;
    double lambda = 0.0;
    double phi_tilde = 0.0;
    double delta = 0.0;
    double big_c = 0.0;
    double big_d = 0.0;
    double theta = 0.0;
    double x0 = 0.0;
    double z0 = 0.0;

    // Scaled tolerance under which big_c counts as exactly zero. A raw
    // floating comparison would misclassify exact-parameter inputs such as
    // phi_tilde = 3*alpha/4 evaluated in double precision.
    double c_zero_tolerance() const;
    bool c_is_zero() const;
    bool is_delta_one() const;
    bool is_delta_three() const;
};

// Validates the model hypotheses and computes DerivedParams.
// Throws std::invalid_argument naming the violated hypothesis when
// alpha <= 0, alpha*r0 + beta < 0, or phi_tilde < 0.
DerivedParams derive(const ModelParams& p);

}  // namespace affine
