#include "smh/special_functions.hpp"

#include "smh/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace smh {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_order(double nu)
{
    if (!(nu > -1.0) || !std::isfinite(nu))
        throw std::domain_error("bessel order must be finite and > -1, got " + std::to_string(nu));
}

double bessel_series(double nu, double x)
{
    const double half = 0.5 * x;
    const double q = half * half;
    double term = std::exp(nu * std::log(half) - log_gamma(nu + 1.0));
    CompensatedSum sum;
    sum += term;
    for (int k = 1; k < 500; ++k) {
        term *= -q / (k * (k + nu));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum.value()) && k > half)
            break;
    }
    return sum.value();
}

// Hankel expansion; accurate once x is large compared with nu^2 / 2.
double bessel_hankel(double nu, double x)
{
    const double mu = 4.0 * nu * nu;
    const double eightx = 8.0 * x;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * eightx);
        const double mag = std::abs(term);
        if (mag > last)
            break;
        last = mag;
        // terms alternate between Q (odd k) and P (even k) with sign (-1)^floor(k/2)
        const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
        if (k % 2 == 1)
            q += signed_term;
        else
            p += signed_term;
        if (mag < 1e-17)
            break;
    }
    const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Miller's algorithm: run the three-term recurrence downward from an order
// well above max(nu, x), then fix the scale with
//   (x/2)^nu = Gamma(nu+1) * sum_k r_k J_{nu+2k}(x).
double bessel_miller(double nu, double x)
{
    const double reach = std::max(x, nu);
    int order = static_cast<int>(reach + 20.0 + 2.0 * std::sqrt(40.0 * reach));
    order += order % 2;

    // r_0 = 1, r_1 = nu + 2, r_k / r_{k-1} = (nu+2k)(nu+k-1) / ((nu+2k-2) k)
    const int kmax = order / 2;
    std::vector<double> r(static_cast<std::size_t>(kmax) + 1);
    r[0] = 1.0;
    r[1] = nu + 2.0;
    for (int k = 2; k <= kmax; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        r[kk] = r[kk - 1] * (nu + 2.0 * k) * (nu + k - 1.0) / ((nu + 2.0 * k - 2.0) * k);
    }

    double f_next = 0.0; // f_{m+1}
    double f = 1e-300;   // f_m
    CompensatedSum norm;
    for (int m = order; m >= 1; --m) {
        if (m % 2 == 0)
            norm += r[static_cast<std::size_t>(m / 2)] * f;
        const double f_prev = (2.0 * (nu + m) / x) * f - f_next;
        f_next = f;
        f = f_prev;
        if (std::abs(f) > 1e200) {
            f *= 1e-200;
            f_next *= 1e-200;
            const double rescaled = norm.value() * 1e-200;
            norm = CompensatedSum{};
            norm += rescaled;
        }
    }
    norm += r[0] * f;
    const double prefactor = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
    return prefactor * f / norm.value();
}

} // namespace

double log_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("log_gamma requires a finite positive argument, got " + std::to_string(x));
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double gamma_ratio(double n, double a, double b)
{
    if (!(n + a > 0.0) || !(n + b > 0.0))
        throw std::domain_error("gamma_ratio: arguments must stay right of the poles");
    if (a == b)
        return 1.0;
    return std::exp(log_gamma(n + a) - log_gamma(n + b));
}

double bessel_j(double nu, double x)
{
    check_order(nu);
    if (!(x >= 0.0))
        throw std::domain_error("bessel_j requires x >= 0");
    if (x == 0.0) {
        if (nu == 0.0)
            return 1.0;
        return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (x <= 8.0 || x * x <= 8.0 * (nu + 1.0))
        return bessel_series(nu, x);
    if (x >= std::max(40.0, 0.5 * nu * nu))
        return bessel_hankel(nu, x);
    return bessel_miller(nu, x);
}

double bessel_j_derivative(double nu, double x)
{
    if (!(x > 0.0))
        throw std::domain_error("bessel_j_derivative requires x > 0");
    return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

double bessel_zero_estimate(double nu, int i)
{
    const double mu = 4.0 * nu * nu;
    const double beta = (i + 0.5 * nu - 0.25) * std::numbers::pi;
    const double e = 8.0 * beta;
    return beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
}

double bessel_j_zero(double nu, int i)
{
    check_order(nu);
    if (i < 1)
        throw std::invalid_argument("bessel_j_zero: index must be >= 1");

    constexpr double step = 0.1;
    double lo = 1e-4 * step;
    double f_lo = bessel_j(nu, lo);
    int found = 0;
    const double limit = std::max(bessel_zero_estimate(nu, i + 2), 10.0) + 20.0 + 2.0 * nu;
    for (double hi = step; hi <= limit; hi += step) {
        const double f_hi = bessel_j(nu, hi);
        if (f_hi == 0.0 && ++found == i)
            return hi;
        if (f_lo * f_hi < 0.0 && ++found == i) {
            double a = lo;
            double b = hi;
            double fa = f_lo;
            const double guess = bessel_zero_estimate(nu, i);
            double z = (guess > a && guess < b) ? guess : 0.5 * (a + b);
            for (int it = 0; it < 200; ++it) {
                const double fz = bessel_j(nu, z);
                if (fz == 0.0)
                    return z;
                if ((fz < 0.0) == (fa < 0.0)) {
                    a = z;
                    fa = fz;
                } else {
                    b = z;
                }
                double next = z - fz / bessel_j_derivative(nu, z);
                if (!(next > a && next < b))
                    next = 0.5 * (a + b);
                const double delta = std::abs(next - z);
                z = next;
                if (delta <= 4.0 * kEps * z || (b - a) <= 4.0 * kEps * z)
                    break;
            }
            return z;
        }
        lo = hi;
        f_lo = f_hi;
    }
    throw std::runtime_error("bessel_j_zero: failed to bracket zero " + std::to_string(i) + " of J_"
                             + std::to_string(nu));
}

} // namespace smh
