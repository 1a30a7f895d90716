#pragma once

#include <cstddef>

namespace nnent::special {

// ln Gamma(x), x > 0. Lanczos approximation with a recurrence shift for
// small arguments; absolute error at double precision across [1e-3, 1e6].
double log_gamma(double x);

// Psi(x) = d/dx ln Gamma(x), x > 0. Upward recurrence to x >= 10, then the
// asymptotic series. Absolute error below 1e-12 on [1e-3, 1e6].
double digamma(double x);

// Psi'(x) = d^2/dx^2 ln Gamma(x), x > 0. Same scheme as digamma.
double trigamma(double x);

// Volume of the Euclidean unit ball in R^m: pi^{m/2} / Gamma(m/2 + 1).
double unit_ball_volume(int m);
double log_unit_ball_volume(int m);

// C_k = [Gamma(k) / Gamma(k+1-q)]^{1/(1-q)}, the neighbor-order constant of
// the power-sum estimator. Continuous at q = 1 with limit exp(-digamma(k));
// arguments with |q-1| < 1e-8 are routed to the limit to avoid cancellation.
// Requires k >= 1 and q < k+1.
double c_k(int k, double q);
double log_c_k(int k, double q);

}  // namespace nnent::special
