#pragma once

#include <functional>

namespace affine {

double normal_pdf(double x);
double normal_cdf(double x);

// log(sinh(x)) for x > 0 without overflow at large x.
double log_sinh(double x);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x),
// a > 0, x >= 0. Q(k/2, x/2) is the chi-square survival function with k
// degrees of freedom.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Inverts a monotone-increasing CDF by bisection on an automatically
// expanded bracket. p must be in (0,1).
double invert_cdf(const std::function<double(double)>& cdf, double p, double lo_hint,
                  double hi_hint);

}  // namespace affine
