#pragma once

#include "smh/sobolev.hpp"

#include <string>
#include <vector>

namespace smh::cli {

struct PropertyResult
{
    std::string name;
    double worst = 0.0; ///< largest observed violation measure
    double bound = 0.0; ///< allowed value of `worst`
    bool pass = false;
    std::string detail;
};

struct NamedSetup
{
    std::string name;
    SobolevSetup setup;
};

/// The four published parameter sets plus a small Plain-mass case.
std::vector<NamedSetup> reference_setups();

/// Sobolev inner product of Q_n with P_m for m < n <= max_n, relative to ||P_n||^2.
PropertyResult check_orthogonality(int max_n = 100);
/// Connection formula against the Jacobi-series form on a 21-point grid, n <= max_n.
PropertyResult check_reconstruction(int max_n = 60);
/// Count, simplicity, at most one zero above 1, none at or below -1, residual.
PropertyResult check_zero_structure(const std::vector<int>& degrees);
PropertyResult check_j0_identity();
PropertyResult check_bessel_recurrence();
PropertyResult check_gamma_duplication();
/// Sup-distance to the limit on [0, 18] must shrink from n = 300 to n = 600.
PropertyResult check_mehler_heine_trend();
/// connection_coeffs at degree n against the limit coefficients, per regime.
PropertyResult check_limit_coefficients(int n = 4000);

/// Everything above; `fast` caps zero extraction at n = 250.
std::vector<PropertyResult> property_suite(bool fast);

} // namespace smh::cli
