#include "smh/asymptotics.hpp"

#include "smh/special_functions.hpp"
#include "smh/summation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace smh {

namespace {

RegimeTag compare_to_threshold(int sign)
{
    if (sign < 0)
        return RegimeTag::Subcritical;
    if (sign > 0)
        return RegimeTag::Supercritical;
    return RegimeTag::Critical;
}

} // namespace

std::string to_string(RegimeTag tag)
{
    switch (tag) {
    case RegimeTag::Subcritical:
        return "Subcritical";
    case RegimeTag::Critical:
        return "Critical";
    case RegimeTag::Supercritical:
        return "Supercritical";
    }
    return "Supercritical";
}

Regime classify(double gamma, double alpha, int j)
{
    if (!(alpha > -1.0))
        throw std::invalid_argument("classify: alpha must exceed -1");
    if (j < 0)
        throw std::invalid_argument("classify: j must be nonnegative");
    const double threshold = 2.0 * (alpha + 2.0 * j + 1.0);
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(threshold));
    const double diff = gamma - threshold;
    const int sign = std::abs(diff) <= slack ? 0 : (diff < 0 ? -1 : 1);
    return {compare_to_threshold(sign), threshold};
}

Regime classify(const Rational& gamma, const Rational& alpha, int j)
{
    if (!(alpha > Rational(-1)))
        throw std::invalid_argument("classify: alpha must exceed -1");
    if (j < 0)
        throw std::invalid_argument("classify: j must be nonnegative");
    const Rational threshold = Rational(2) * (alpha + Rational(2 * j + 1));
    const auto order = gamma <=> threshold;
    const int sign = order < 0 ? -1 : (order > 0 ? 1 : 0);
    return {compare_to_threshold(sign), threshold.to_double()};
}

Regime classify(const SobolevSetup& setup)
{
    if (setup.exact_alpha && setup.exact_gamma)
        return classify(*setup.exact_gamma, *setup.exact_alpha, setup.j);
    return classify(setup.mass.gamma, setup.params.alpha, setup.j);
}

double critical_mass_scale(double alpha, double beta, int j)
{
    return std::exp(2.0 * log_gamma(alpha + j + 1.0) + (alpha + beta + 2.0 * j + 1.0) * std::numbers::ln2)
           * (alpha + 2.0 * j + 1.0);
}

double critical_threshold_V(double alpha, double beta, int j)
{
    if (j <= 0)
        throw std::invalid_argument("critical_threshold_V: requires j > 0");
    return critical_mass_scale(alpha, beta, j) * (alpha + j + 1.0) / j;
}

double limit_deriv_ratio(RegimeTag tag, double alpha, double beta, int j, double M, int k)
{
    const double denom = alpha + j + k + 1.0;
    switch (tag) {
    case RegimeTag::Supercritical:
        return 1.0;
    case RegimeTag::Subcritical:
        return (k - j) / denom;
    case RegimeTag::Critical: {
        const double g = critical_mass_scale(alpha, beta, j);
        if (std::isinf(M))
            return (k - j) / denom;
        return (M * (k - j) + g * denom) / (denom * (M + g));
    }
    }
    return 1.0;
}

std::vector<double> limit_coeffs_from_ratios(double alpha, std::span<const double> ratios)
{
    return solve_connection_triangle(ratios, [alpha](int i, int k) { return shift_ratio_limit(alpha, i, k); });
}

LimitFunction limit_coeffs(RegimeTag tag, double alpha, double beta, int j, double M)
{
    LimitFunction lf;
    lf.alpha = alpha;
    lf.regime = {tag, 2.0 * (alpha + 2.0 * j + 1.0)};
    if (tag == RegimeTag::Supercritical) {
        lf.b.assign(static_cast<std::size_t>(j) + 2, 0.0);
        lf.b[0] = 1.0;
        return lf;
    }
    std::vector<double> ratios;
    for (int k = 0; k <= j + 1; ++k)
        ratios.push_back(limit_deriv_ratio(tag, alpha, beta, j, M, k));
    lf.b = limit_coeffs_from_ratios(alpha, ratios);
    return lf;
}

LimitFunction limit_coeffs(const SobolevSetup& setup)
{
    const Regime regime = classify(setup);
    const RegimeTag tag = setup.mass.vanishes() ? RegimeTag::Supercritical : regime.tag;
    LimitFunction lf = limit_coeffs(tag, setup.params.alpha, setup.params.beta, setup.j,
                                    setup.mass.limit_constant());
    lf.regime = regime;
    return lf;
}

double limit_eval(const LimitFunction& lf, double x)
{
    if (x < 0.0)
        throw std::invalid_argument("limit_eval: x must be nonnegative");
    const double a = lf.alpha;
    if (x < 1e-4) {
        // (x/2)^{-a} J_{a+2i}(x) = sum_m (-1)^m (x/2)^{2i+2m} / (m! Gamma(a+2i+m+1)); keep 2i+2m <= 4
        const double h2 = 0.25 * x * x;
        CompensatedSum sum;
        for (int i = 0; i < static_cast<int>(lf.b.size()) && i <= 2; ++i) {
            double power = std::pow(h2, i);
            double mfact = 1.0;
            for (int m = 0; i + m <= 2; ++m) {
                if (m > 0) {
                    power *= -h2;
                    mfact *= m;
                }
                sum += lf.b[static_cast<std::size_t>(i)] * std::ldexp(1.0, i) * power
                       / (mfact * std::exp(log_gamma(a + 2.0 * i + m + 1.0)));
            }
        }
        return sum.value();
    }
    const double scale = std::pow(0.5 * x, -a);
    CompensatedSum sum;
    for (int i = 0; i < static_cast<int>(lf.b.size()); ++i)
        sum += lf.b[static_cast<std::size_t>(i)] * std::ldexp(1.0, i) * bessel_j(a + 2.0 * i, x);
    return scale * sum.value();
}

double limit_eval_derivative(const LimitFunction& lf, double x)
{
    if (!(x > 0.0))
        throw std::invalid_argument("limit_eval_derivative: x must be positive");
    const double a = lf.alpha;
    const double scale = std::pow(0.5 * x, -a);
    CompensatedSum sum;
    for (int i = 0; i < static_cast<int>(lf.b.size()); ++i) {
        const double nu = a + 2.0 * i;
        // d/dx[(x/2)^{-a} J_nu] = (x/2)^{-a} [((nu - a)/x) J_nu - J_{nu+1}]
        const double term = (2.0 * i / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
        sum += lf.b[static_cast<std::size_t>(i)] * std::ldexp(1.0, i) * term;
    }
    return scale * sum.value();
}

double j0_identity_residual(double alpha, double beta, double M, double x)
{
    if (!(x > 0.0))
        throw std::invalid_argument("j0_identity_residual: x must be positive");
    const LimitFunction psi = limit_coeffs(RegimeTag::Critical, alpha, beta, 0, M);
    const double a = -2.0 * M * (alpha + 1.0)
                     / (M + std::exp((alpha + beta + 1.0) * std::numbers::ln2 + log_gamma(alpha + 2.0)
                                     + log_gamma(alpha + 1.0)));
    const double z0 = std::pow(x, -alpha) * bessel_j(alpha, x);
    const double z1 = std::pow(x, -alpha - 1.0) * bessel_j(alpha + 1.0, x);
    return std::abs(limit_eval(psi, x) - std::exp2(alpha) * (z0 + a * z1));
}

} // namespace smh
