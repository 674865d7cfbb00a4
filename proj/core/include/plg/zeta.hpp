#pragma once

namespace plg {

// Riemann zeta for real s > 1: partial sum plus Euler-Maclaurin tail.
double zeta(double s, double tol = 1e-12);

// g(x) = zeta(x - 1) - 2 zeta(x); its root on [2.1, 3] is beta_max.
double beta_max_gap(double x);

double beta_max(double tol = 1e-10);

}  // namespace plg
