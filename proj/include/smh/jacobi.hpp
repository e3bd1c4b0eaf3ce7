#pragma once

#include <span>
#include <vector>

namespace smh {

/// Exponents of the Jacobi weight (1-x)^alpha (1+x)^beta on [-1, 1].
struct JacobiParams
{
    double alpha = 0.0;
    double beta = 0.0;

    JacobiParams() = default;
    /// Throws std::invalid_argument unless alpha > -1 and beta > -1.
    JacobiParams(double alpha_, double beta_);

    friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

/// A polynomial written in the Jacobi basis {P_0, ..., P_n} for fixed (alpha, beta).
struct JacobiSeries
{
    JacobiParams params;
    std::vector<double> coeffs; ///< coeffs[i] multiplies P_i^{(alpha,beta)}

    /// Highest index with a nonzero coefficient, or -1 for the zero polynomial.
    int degree() const;
};

/// P_n^{(alpha,beta)}(x), normalised so that P_n(1) = binom(n+alpha, n).
double jacobi_eval(int n, const JacobiParams& params, double x);

/// Values P_0(x), ..., P_n(x) from one forward sweep of the recurrence.
std::vector<double> jacobi_eval_all(int n, const JacobiParams& params, double x);

/// P_n^{(alpha,beta)}(1) = Gamma(n+alpha+1) / (Gamma(n+1) Gamma(alpha+1)).
double value_at_one(int n, double alpha);

/// ln of the k-th derivative of P_n^{(alpha,beta)} at x = 1. Requires k <= n
/// (the value is strictly positive there).
double log_deriv_at_one(int n, int k, const JacobiParams& params);

/// k-th derivative of P_n^{(alpha,beta)} at x = 1; zero when k > n.
double deriv_at_one(int n, int k, const JacobiParams& params);

/// Squared L2 norm of P_n^{(alpha,beta)} under the Jacobi weight.
double norm2(int n, const JacobiParams& params);

/// Sum of coeffs[i] * P_i(x) by Clenshaw's backward recurrence.
double clenshaw_eval(const JacobiSeries& s, double x);

/// Derivative of a Jacobi series, expressed in the (alpha+1, beta+1) basis.
JacobiSeries derivative(const JacobiSeries& s);

/// n^{-alpha} P_n(1 - u^2 / (2 n^2)); tends to (u/2)^{-alpha} J_alpha(u).
double scaled_eval(int n, const JacobiParams& params, double u);

/// (u/2)^{-alpha} J_alpha(u), the classical endpoint limit; 1/Gamma(alpha+1) at u = 0.
double classical_limit(double alpha, double u);

} // namespace smh
