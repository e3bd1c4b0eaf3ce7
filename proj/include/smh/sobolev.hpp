#pragma once

#include "smh/jacobi.hpp"
#include "smh/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace smh {

enum class MassPreset
{
    Plain,       ///< M / n^gamma
    ExpRational, ///< 3 e^n / ((6 e^n + 4) n^gamma), limit constant 1/2
    LogRatio,    ///< (7 ln(n+1) + 5) / ((3 + 2 ln n) n^gamma), limit constant 7/2
    PolyRatio,   ///< M n^2 (n - 1/2)(n + 2) / n^(gamma + 4)
    Custom,      ///< explicit table n -> M_n
};

std::string to_string(MassPreset preset);
/// Case-insensitive; throws std::invalid_argument for unknown names.
MassPreset parse_mass_preset(std::string_view name);

/// Degree-dependent mass M_n with M_n n^gamma -> M.
struct MassSequence
{
    MassPreset preset = MassPreset::Plain;
    double M = 0.0;
    double gamma = 0.0;
    std::map<int, double> custom_values;

    /// lim M_n n^gamma. Fixed by the formula for ExpRational and LogRatio.
    double limit_constant() const;
    // True when every M_n is zero, so Q_n is the plain Jacobi polynomial.
    bool vanishes() const;
};

/// M_n for n >= 1. Custom sequences throw std::out_of_range for missing n.
double mass(const MassSequence& seq, int n);

/// One varying discrete Jacobi-Sobolev problem: weight exponents, derivative
/// order j of the point mass at x = 1, and the mass sequence.
struct SobolevSetup
{
    JacobiParams params;
    int j = 0;
    MassSequence mass;
    /// Exact values of alpha and gamma when they came from a configuration;
    /// regime classification prefers these to the doubles.
    std::optional<Rational> exact_alpha;
    std::optional<Rational> exact_gamma;
};

struct KernelValue
{
    int n = 0;
    int j = 0;
    int k = 0;
    double value = 0.0;
    double scaled = 0.0; ///< value / n^(2 alpha + 2 j + 2 k + 2); equals value for n = 0
};

/// K_n^{(j,k)}(1,1) = sum_{i<=n} P_i^{(j)}(1) P_i^{(k)}(1) / ||P_i||^2.
KernelValue kernel_at_one(const JacobiParams& params, int n, int j, int k);
KernelValue kernel_at_one(const SobolevSetup& setup, int n, int j, int k);

/// Q_n in the Jacobi basis. coeffs[n] = 1 and, for i < n,
/// coeffs[i] = -c_n P_i^{(j)}(1) / ||P_i||^2 with
/// c_n = M_n P_n^{(j)}(1) / (1 + M_n K_{n-1}^{(j,j)}(1,1)).
JacobiSeries sobolev_polynomial(const SobolevSetup& setup, int n);

/// The scalar c_n above (0 for n = 0).
double correction_factor(const SobolevSetup& setup, int n);

/// Q_n^{(k)}(1) = P_n^{(k)}(1) - c_n K_{n-1}^{(j,k)}(1,1).
double q_deriv_at_one(const SobolevSetup& setup, int n, int k);

/// Q_n^{(k)}(1) / P_n^{(k)}(1), 0 <= k <= n.
double deriv_ratio(const SobolevSetup& setup, int n, int k);

/// (Q_n, Q_n)_S = ||P_n||^2 + M_n (P_n^{(j)}(1))^2 / (1 + M_n K_{n-1}^{(j,j)}(1,1)).
double sobolev_norm2(const SobolevSetup& setup, int n);

/// A_i(k, n) = (P_{n-i}^{(alpha+2i,beta)})^{(k-i)}(1) / (P_n^{(alpha,beta)})^{(k)}(1).
double shift_ratio(const JacobiParams& params, int i, int k, int n);

/// lim_n A_i(k, n) = 2^i Gamma(alpha+k+1) / Gamma(alpha+i+k+1).
double shift_ratio_limit(double alpha, int i, int k);

/// Forward substitution for b_0..b_K in
///   ratios[k] = sum_{i<=k} b_i binom(k,i) (-1)^i i! A(i,k),   k = 0..K.
std::vector<double> solve_connection_triangle(std::span<const double> ratios,
                                              const std::function<double(int, int)>& shift);

/// b_0(n), ..., b_{j+1}(n) of Q_n = sum_i b_i(n) (1-x)^i P_{n-i}^{(alpha+2i,beta)}.
/// Requires n >= j + 1.
std::vector<double> connection_coeffs(const SobolevSetup& setup, int n);

/// Evaluates the connection formula with the coefficients from connection_coeffs.
double connection_reconstruct(const SobolevSetup& setup, int n, double x);
double connection_reconstruct(const SobolevSetup& setup, int n, std::span<const double> b, double x);

} // namespace smh
