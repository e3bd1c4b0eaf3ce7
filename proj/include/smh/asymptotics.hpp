#pragma once

#include "smh/rational.hpp"
#include "smh/sobolev.hpp"

#include <span>
#include <string>
#include <vector>

namespace smh {

enum class RegimeTag
{
    Subcritical,   ///< gamma < 2(alpha + 2j + 1): the mass dominates at x = 1
    Critical,      ///< gamma = 2(alpha + 2j + 1)
    Supercritical, ///< gamma > 2(alpha + 2j + 1): Q_n behaves like P_n
};

std::string to_string(RegimeTag tag);

struct Regime
{
    RegimeTag tag = RegimeTag::Supercritical;
    double threshold = 0.0; ///< 2(alpha + 2j + 1)
};

/// Compares gamma with 2(alpha + 2j + 1). The floating-point overload treats
/// values within a few ulps of the threshold as equal; the rational overload
/// is exact.
Regime classify(double gamma, double alpha, int j);
Regime classify(const Rational& gamma, const Rational& alpha, int j);
/// Uses the exact rationals of the setup when both are present.
Regime classify(const SobolevSetup& setup);

/// V = 2^{alpha+beta+2j+1} (alpha+j+1)(alpha+2j+1) Gamma(alpha+j+1)^2 / j.
/// Critical masses above V push the largest zero of Q_n past 1. Requires j > 0.
double critical_threshold_V(double alpha, double beta, int j);

/// Gamma(alpha+j+1)^2 2^{alpha+beta+2j+1} (alpha+2j+1), the mass scale of the
/// critical regime.
double critical_mass_scale(double alpha, double beta, int j);

/// lim Q_n^{(k)}(1) / P_n^{(k)}(1) for the given regime; M is the mass limit.
double limit_deriv_ratio(RegimeTag tag, double alpha, double beta, int j, double M, int k);

struct LimitFunction
{
    double alpha = 0.0;
    std::vector<double> b; ///< b_0..b_{j+1}
    Regime regime;
};

/// b_0..b_{j+1} from limiting derivative ratios, solving the same triangular
/// system as connection_coeffs with the shift ratios replaced by their limits.
std::vector<double> limit_coeffs_from_ratios(double alpha, std::span<const double> ratios);

LimitFunction limit_coeffs(RegimeTag tag, double alpha, double beta, int j, double M);
LimitFunction limit_coeffs(const SobolevSetup& setup);

/// sum_i b_i 2^i (x/2)^{-alpha} J_{alpha+2i}(x); b_0 / Gamma(alpha+1) at x = 0.
double limit_eval(const LimitFunction& lf, double x);
double limit_eval_derivative(const LimitFunction& lf, double x);

/// |psi_{alpha,0}(x) - 2^alpha (z_alpha(x) + a z_{alpha+1}(x))| with
/// z_nu(x) = x^{-nu} J_nu(x) and a = -2M(alpha+1)/(M + 2^{alpha+beta+1} Gamma(alpha+2) Gamma(alpha+1)),
/// where psi_{alpha,0} is the critical limit function for j = 0.
double j0_identity_residual(double alpha, double beta, double M, double x);

} // namespace smh
