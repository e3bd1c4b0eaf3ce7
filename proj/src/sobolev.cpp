#include "smh/sobolev.hpp"

#include "smh/special_functions.hpp"
#include "smh/summation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smh {

namespace {

void require(bool condition, const char* message)
{
    if (!condition)
        throw std::invalid_argument(message);
}

// K_{m}^{(j,k)}(1,1) for k = 0..kmax in one pass over i = 0..m.
std::vector<double> kernels_at_one(const JacobiParams& params, int m, int j, int kmax)
{
    std::vector<CompensatedSum> sums(static_cast<std::size_t>(kmax) + 1);
    for (int i = 0; i <= m; ++i) {
        const double dj = deriv_at_one(i, j, params);
        if (dj == 0.0)
            continue;
        const double w = dj / norm2(i, params);
        for (int k = 0; k <= kmax; ++k) {
            const double dk = deriv_at_one(i, k, params);
            if (dk != 0.0)
                sums[static_cast<std::size_t>(k)] += w * dk;
        }
    }
    std::vector<double> out;
    out.reserve(sums.size());
    for (const auto& s : sums)
        out.push_back(s.value());
    return out;
}

double binomial(int n, int k)
{
    return std::exp(log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0));
}

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

std::string to_string(MassPreset preset)
{
    switch (preset) {
    case MassPreset::Plain:
        return "Plain";
    case MassPreset::ExpRational:
        return "ExpRational";
    case MassPreset::LogRatio:
        return "LogRatio";
    case MassPreset::PolyRatio:
        return "PolyRatio";
    case MassPreset::Custom:
        return "Custom";
    }
    return "Plain";
}

MassPreset parse_mass_preset(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "plain")
        return MassPreset::Plain;
    if (lower == "exprational")
        return MassPreset::ExpRational;
    if (lower == "logratio")
        return MassPreset::LogRatio;
    if (lower == "polyratio")
        return MassPreset::PolyRatio;
    if (lower == "custom")
        return MassPreset::Custom;
    throw std::invalid_argument("unknown mass preset '" + std::string(name) + "'");
}

bool MassSequence::vanishes() const
{
    switch (preset) {
    case MassPreset::ExpRational:
    case MassPreset::LogRatio:
        return false;
    case MassPreset::Custom:
        return std::all_of(custom_values.begin(), custom_values.end(), [](const auto& kv) { return kv.second == 0.0; });
    default:
        return M == 0.0;
    }
}

double MassSequence::limit_constant() const
{
    switch (preset) {
    case MassPreset::ExpRational:
        return 0.5;
    case MassPreset::LogRatio:
        return 3.5;
    default:
        return M;
    }
}

double mass(const MassSequence& seq, int n)
{
    if (n < 1)
        throw std::invalid_argument("mass: n must be >= 1");
    const double nd = n;
    const double decay = std::exp(-seq.gamma * std::log(nd));
    switch (seq.preset) {
    case MassPreset::Plain:
        return seq.M * decay;
    case MassPreset::ExpRational:
        // 3 e^n / (6 e^n + 4) without forming e^n
        return 3.0 / (6.0 + 4.0 * std::exp(-nd)) * decay;
    case MassPreset::LogRatio:
        return (7.0 * std::log(nd + 1.0) + 5.0) / (3.0 + 2.0 * std::log(nd)) * decay;
    case MassPreset::PolyRatio:
        // n^2 (n - 1/2)(n + 2) / n^4 = (1 - 1/(2n))(1 + 2/n)
        return seq.M * (1.0 - 0.5 / nd) * (1.0 + 2.0 / nd) * decay;
    case MassPreset::Custom: {
        const auto it = seq.custom_values.find(n);
        if (it == seq.custom_values.end())
            throw std::out_of_range("custom mass sequence has no value for n = " + std::to_string(n));
        return it->second;
    }
    }
    return 0.0;
}

KernelValue kernel_at_one(const JacobiParams& params, int n, int j, int k)
{
    require(n >= 0 && j >= 0 && k >= 0, "kernel_at_one: indices must be nonnegative");
    CompensatedSum sum;
    for (int i = 0; i <= n; ++i) {
        const double dj = deriv_at_one(i, j, params);
        const double dk = deriv_at_one(i, k, params);
        if (dj != 0.0 && dk != 0.0)
            sum += dj * dk / norm2(i, params);
    }
    KernelValue out{n, j, k, sum.value(), sum.value()};
    if (n > 0)
        out.scaled = out.value / std::pow(static_cast<double>(n), 2.0 * params.alpha + 2.0 * j + 2.0 * k + 2.0);
    return out;
}

KernelValue kernel_at_one(const SobolevSetup& setup, int n, int j, int k)
{
    return kernel_at_one(setup.params, n, j, k);
}

double correction_factor(const SobolevSetup& setup, int n)
{
    require(n >= 0, "correction_factor: n must be nonnegative");
    if (n == 0)
        return 0.0;
    const double dn = deriv_at_one(n, setup.j, setup.params);
    if (dn == 0.0)
        return 0.0;
    const double mn = mass(setup.mass, n);
    if (mn == 0.0)
        return 0.0;
    const double kjj = kernel_at_one(setup.params, n - 1, setup.j, setup.j).value;
    return mn * dn / (1.0 + mn * kjj);
}

JacobiSeries sobolev_polynomial(const SobolevSetup& setup, int n)
{
    require(n >= 0, "sobolev_polynomial: n must be nonnegative");
    JacobiSeries q;
    q.params = setup.params;
    q.coeffs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    q.coeffs[static_cast<std::size_t>(n)] = 1.0;
    const double c = correction_factor(setup, n);
    if (c == 0.0)
        return q;
    for (int i = 0; i < n; ++i) {
        const double di = deriv_at_one(i, setup.j, setup.params);
        q.coeffs[static_cast<std::size_t>(i)] = di == 0.0 ? 0.0 : -c * di / norm2(i, setup.params);
    }
    return q;
}

double q_deriv_at_one(const SobolevSetup& setup, int n, int k)
{
    require(n >= 0 && k >= 0, "q_deriv_at_one: indices must be nonnegative");
    const double pn = deriv_at_one(n, k, setup.params);
    if (n == 0 || pn == 0.0)
        return pn;
    if (k == setup.j) {
        // P_n^{(j)}(1) - c_n K_{n-1}^{(j,j)} = P_n^{(j)}(1) / (1 + M_n K_{n-1}^{(j,j)}), free of cancellation
        const double mn = mass(setup.mass, n);
        return pn / (1.0 + mn * kernel_at_one(setup.params, n - 1, setup.j, setup.j).value);
    }
    const double c = correction_factor(setup, n);
    if (c == 0.0)
        return pn;
    return pn - c * kernel_at_one(setup.params, n - 1, setup.j, k).value;
}

double deriv_ratio(const SobolevSetup& setup, int n, int k)
{
    require(k >= 0 && k <= n, "deriv_ratio: need 0 <= k <= n");
    return q_deriv_at_one(setup, n, k) / deriv_at_one(n, k, setup.params);
}

double sobolev_norm2(const SobolevSetup& setup, int n)
{
    require(n >= 0, "sobolev_norm2: n must be nonnegative");
    const double base = norm2(n, setup.params);
    if (n == 0)
        return base;
    const double dn = deriv_at_one(n, setup.j, setup.params);
    const double mn = mass(setup.mass, n);
    if (dn == 0.0 || mn == 0.0)
        return base;
    const double kjj = kernel_at_one(setup.params, n - 1, setup.j, setup.j).value;
    return base + mn * dn * dn / (1.0 + mn * kjj);
}

double shift_ratio(const JacobiParams& params, int i, int k, int n)
{
    require(0 <= i && i <= k && k <= n, "shift_ratio: need 0 <= i <= k <= n");
    const JacobiParams shifted(params.alpha + 2.0 * i, params.beta);
    return std::exp(log_deriv_at_one(n - i, k - i, shifted) - log_deriv_at_one(n, k, params));
}

double shift_ratio_limit(double alpha, int i, int k)
{
    require(0 <= i && i <= k, "shift_ratio_limit: need 0 <= i <= k");
    return std::exp(i * std::numbers::ln2 + log_gamma(alpha + k + 1.0) - log_gamma(alpha + i + k + 1.0));
}

std::vector<double> solve_connection_triangle(std::span<const double> ratios,
                                              const std::function<double(int, int)>& shift)
{
    std::vector<double> b;
    b.reserve(ratios.size());
    for (int k = 0; k < static_cast<int>(ratios.size()); ++k) {
        CompensatedSum rhs;
        rhs += ratios[static_cast<std::size_t>(k)];
        for (int i = 0; i < k; ++i) {
            const double sign = (i % 2 == 0) ? 1.0 : -1.0;
            rhs += -b[static_cast<std::size_t>(i)] * binomial(k, i) * sign * factorial(i) * shift(i, k);
        }
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        b.push_back(rhs.value() / (sign * factorial(k) * shift(k, k)));
    }
    return b;
}

std::vector<double> connection_coeffs(const SobolevSetup& setup, int n)
{
    const int top = setup.j + 1;
    if (n < top)
        throw std::invalid_argument("connection_coeffs: requires n >= j + 1");
    const double c = correction_factor(setup, n);
    std::vector<double> kernels;
    if (c != 0.0)
        kernels = kernels_at_one(setup.params, n - 1, setup.j, top);
    std::vector<double> ratios(static_cast<std::size_t>(top) + 1, 1.0);
    if (c != 0.0) {
        const double mn = mass(setup.mass, n);
        for (int k = 0; k <= top; ++k) {
            const double kernel = kernels[static_cast<std::size_t>(k)];
            ratios[static_cast<std::size_t>(k)] =
                k == setup.j ? 1.0 / (1.0 + mn * kernel) : 1.0 - c * kernel / deriv_at_one(n, k, setup.params);
        }
    }
    const auto& params = setup.params;
    return solve_connection_triangle(ratios, [&params, n](int i, int k) { return shift_ratio(params, i, k, n); });
}

double connection_reconstruct(const SobolevSetup& setup, int n, std::span<const double> b, double x)
{
    CompensatedSum sum;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) {
        const JacobiParams shifted(setup.params.alpha + 2.0 * i, setup.params.beta);
        sum += b[static_cast<std::size_t>(i)] * std::pow(1.0 - x, i) * jacobi_eval(n - i, shifted, x);
    }
    return sum.value();
}

double connection_reconstruct(const SobolevSetup& setup, int n, double x)
{
    const auto b = connection_coeffs(setup, n);
    return connection_reconstruct(setup, n, b, x);
}

} // namespace smh
