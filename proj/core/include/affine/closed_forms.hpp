#pragma once

#include "affine/params.hpp"

namespace affine {

// The potential V(t,q) = c/q^2 + d*q^2 attached to the model. For derived
// parameters, c = big_c and d = big_d.
struct Potential {
    double c = 0.0;
    double d = 0.0;
};

Potential potential_of(const DerivedParams& dp);

// V(q) = c/q^2 + d q^2. q == 0 is a pole of the first term.
double potential_eval(const Potential& pot, double q);

// Drift of the square-root process z = sqrt(X):
//
//   B(q) = (alpha^2*delta - alpha^2 - 4*lambda*q^2) / (8q)
//        = -lambda*q/2 + alpha^2*(delta-1)/(8q)
//
// For delta = 1 the 1/q singularity cancels and the drift is the pure
// Ornstein-Uhlenbeck drift -lambda*q/2.
double bernstein_drift(const DerivedParams& dp, double q);

// eta(t,q) = exp(lambda*delta*t/4 - lambda*q^2/alpha^2) * q^((delta-1)/2),
// the positive solution of theta^2 eta_t = -(theta^4/2) eta_qq + V eta.
// Evaluated in log space. q = 0 is admissible only at delta = 1, where the
// power factor is identically 1.
double eta(const DerivedParams& dp, double t, double q);
double log_eta(const DerivedParams& dp, double t, double q);

// S(t,q) = -theta^2 log(eta) -- the Hamilton-Jacobi-Bellman action
//   = -alpha^2*lambda*delta*t/16 + lambda*q^2/4 - (alpha^2*(delta-1)/8)*log(q).
double action_s(const DerivedParams& dp, double t, double q);

// Adjoint solutions eta*(t,q) = rho_t(q) / eta(t,q), in the two closed-form
// cases. Both are evaluated from their own displayed expressions (not as the
// quotient), so the identity eta * eta* = rho_t is a genuine cross-check.
//
// delta = 1 (requires lambda > 0, t > 0):
//   eta*(t,q) = (1/alpha) sqrt(lambda/(pi*sinh(lambda*t/2)))
//               * exp[(-l q^2 - l q^2 e^{-lt} + 4 l q z0 e^{-lt/2} - 2 l z0^2 e^{-lt})
//                     / (alpha^2 (1 - e^{-lt}))]          (l = lambda)
double eta_star_delta1(const DerivedParams& dp, double t, double q);

// delta = 3, X0 = 0 (requires lambda != 0, t > 0, q > 0):
//   eta*(t,q) = (16 lambda^{3/2})/(alpha^3 sqrt(2 pi)) (1-e^{-lt})^{-3/2}
//               * q exp(-3 lambda t/4 - lambda q^2/(alpha^2 tanh(lambda t/2)))
// The factor lambda^{3/2}/(1-e^{-lt})^{3/2} is computed as
// (lambda/(1-e^{-lt}))^{3/2}, which is positive for either sign of lambda.
double eta_star_delta3(const DerivedParams& dp, double t, double q);

// Time-t law of the comparison Ornstein-Uhlenbeck process y (delta = 1):
// normal with mean e^{-lambda t/2} z0 and variance alpha^2(1-e^{-lambda t})/(4 lambda)
// (variance alpha^2 t/4 in the lambda = 0 limit).
double density_delta1(const DerivedParams& dp, double t, double q);
double cdf_delta1(const DerivedParams& dp, double t, double q);
double delta1_mean(const DerivedParams& dp, double t);
double delta1_variance(const DerivedParams& dp, double t);

// Time-t law of z for delta = 3 started at X0 = 0:
//   rho_t(q) = (1/sqrt(2 pi)) * 16 lambda^{3/2} / (alpha^3 (1-e^{-lt})^{3/2})
//              * q^2 exp(-2 lambda q^2/(alpha^2(1-e^{-lt}))),  q >= 0.
// Negative q returns 0 by convention. Requires lambda != 0, t > 0, X0 = 0.
double density_delta3(const DerivedParams& dp, double t, double q);
double cdf_delta3(const DerivedParams& dp, double t, double q);

// Gaussian rate a(t) = 2*lambda/(alpha^2*(1 - e^{-lambda t})) appearing in the
// delta = 3 law; positive for either sign of lambda.
double delta3_rate(const DerivedParams& dp, double t);

}  // namespace affine
