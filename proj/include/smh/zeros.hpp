#pragma once

#include "smh/asymptotics.hpp"
#include "smh/sobolev.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smh {

/// Raised when root extraction cannot account for every zero.
class ZeroSearchError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct ZeroSet
{
    int n = 0;
    std::vector<double> zeros; ///< y_{n,1} > y_{n,2} > ... > y_{n,n}
    int outside_count = 0;     ///< zeros above 1 (0 or 1)
};

/// All n zeros of Q_n. Brackets come from a cosine grid on [-1, 1], a
/// second grid in u with x = 1 - u^2/(2n^2) for the cluster at 1, and an
/// expanding search on (1, 1.5] when zeros are still missing. Each bracket is
/// refined by bisection and safeguarded Newton in t = 1 - x.
ZeroSet sobolev_zeros(const SobolevSetup& setup, int n);

/// Whether the regime predicts a zero of Q_n above 1 for large n.
bool predicts_outside_zero(const SobolevSetup& setup);

struct ScaledZeros
{
    int n = 0;
    /// n sqrt(2(1 - y)) for the interior zeros that pair with the limit zeros
    std::vector<double> values;
    /// The largest zero when the regime predicts it leaves [-1, 1]; it is
    /// excluded from `values` and reported raw here.
    std::optional<double> outside_zero;
};

/// Scales the `count` largest zeros. When the regime predicts an exterior
/// zero, y_{n,1} is set aside and the next `count - 1` zeros are scaled, so
/// values[i] pairs with the i-th positive zero of the limit function.
ScaledZeros scaled_zeros(const SobolevSetup& setup, int n, int count);
ScaledZeros scaled_zeros(const SobolevSetup& setup, const ZeroSet& zs, int count);

/// First `count` positive zeros of the limit function.
std::vector<double> limit_zeros(const LimitFunction& lf, int count);

enum class ZeroLocation
{
    Inside,
    Outside,
};

std::string to_string(ZeroLocation loc);

struct LargestZeroReport
{
    ZeroLocation location = ZeroLocation::Inside;  ///< finite-n fact: sign of Q_n(1)
    ZeroLocation predicted = ZeroLocation::Inside; ///< from the regime (and M vs V when critical)
    double q_at_one = 0.0;                         ///< Q_n(1) / P_n(1)
};

/// Q_n has a positive leading coefficient and at most one zero above 1, so
/// the largest zero is outside exactly when Q_n(1) < 0. Requires j > 0.
LargestZeroReport largest_zero_location(const SobolevSetup& setup, int n);

struct ConvergenceRow
{
    int n = 0;
    std::vector<double> raw;    ///< the `count` largest zeros, decreasing
    ScaledZeros scaled;
};

struct ConvergenceTable
{
    std::vector<ConvergenceRow> rows;
    std::vector<double> limit; ///< limit zeros aligned with scaled values
    LimitFunction limit_function;
};

/// Rows for each n (computed on up to `threads` threads) plus the limit zeros.
ConvergenceTable convergence_table(const SobolevSetup& setup, const std::vector<int>& ns, int count, int threads = 1);

} // namespace smh
