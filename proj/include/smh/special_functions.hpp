#pragma once

// Gamma and Bessel-J layer. Every Gamma quotient used downstream goes through
// log_gamma so that ratios with large arguments never overflow.

namespace smh {

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Gamma(n + a) / Gamma(n + b), evaluated as exp(log_gamma(n+a) - log_gamma(n+b)).
/// Requires n + a > 0 and n + b > 0.
double gamma_ratio(double n, double a, double b);

/// Bessel function of the first kind J_nu(x) for real order nu > -1 and x >= 0.
///
/// Power series for small x (and for x well below the order), Miller's
/// backward recurrence normalised by the Neumann sum in the transition
/// region, and the Hankel asymptotic expansion for large x.
double bessel_j(double nu, double x);

/// d/dx J_nu(x) = (nu/x) J_nu(x) - J_{nu+1}(x), for x > 0.
double bessel_j_derivative(double nu, double x);

/// McMahon's large-zero expansion for the i-th positive zero of J_nu.
double bessel_zero_estimate(double nu, int i);

/// The i-th positive zero of J_nu (i >= 1). Zeros are bracketed by a sign scan
/// so the index is exact; each bracket is refined by safeguarded Newton
/// started from the McMahon estimate.
double bessel_j_zero(double nu, int i);

} // namespace smh
