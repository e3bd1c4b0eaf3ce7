#include "smh/zeros.hpp"

#include "smh/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

namespace smh {

namespace {

constexpr double kStepTolerance = 1e-14;
constexpr double kOutsideCap = 0.5;

struct Bracket
{
    double lo;
    double hi;
    double f_lo;
};

// Safeguarded Newton on f over [lo, hi] where f(lo) and f(hi) differ in sign.
template <class F, class DF>
double refine_root(const F& f, const DF& df, double lo, double hi, double f_lo, double tol)
{
    if (f_lo == 0.0)
        return lo;
    double x = 0.5 * (lo + hi);
    double dx_old = hi - lo;
    double dx = dx_old;
    for (int iter = 0; iter < 200; ++iter) {
        const double fx = f(x);
        if (fx == 0.0)
            return x;
        if ((fx < 0) == (f_lo < 0)) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
        }
        const double dfx = df(x);
        const double step = dfx != 0.0 ? fx / dfx : 0.0;
        const double candidate = x - step;
        const bool newton_ok = dfx != 0.0 && candidate > std::min(lo, hi) && candidate < std::max(lo, hi)
                               && std::abs(2.0 * step) <= std::abs(dx_old);
        dx_old = dx;
        if (newton_ok) {
            dx = step;
            x = candidate;
        } else {
            const double mid = 0.5 * (lo + hi);
            dx = x - mid;
            x = mid;
        }
        if (std::abs(dx) <= tol || std::abs(hi - lo) <= tol)
            return x;
    }
    return x;
}

std::vector<Bracket> scan_brackets(const std::vector<double>& grid, const std::vector<double>& values,
                                   std::vector<double>& exact)
{
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (values[i] == 0.0) {
            exact.push_back(grid[i]);
            continue;
        }
        if (i + 1 < grid.size() && values[i + 1] != 0.0 && (values[i] < 0) != (values[i + 1] < 0))
            out.push_back({grid[i], grid[i + 1], values[i]});
    }
    return out;
}

// Offsets t = 1 - x covering [-1, 1]: a cosine grid plus a u-grid near x = 1.
std::vector<double> offset_grid(const SobolevSetup& setup, int n, int density)
{
    std::vector<double> t;
    const int cos_points = 10 * (n + 1) * density;
    for (int k = 0; k <= cos_points; ++k) {
        const double s = std::sin(0.5 * std::numbers::pi * k / cos_points);
        t.push_back(2.0 * s * s);
    }
    const int cluster = std::max(1, (n + 3) / 4);
    const double u_max = 2.0 * bessel_zero_estimate(setup.params.alpha, cluster);
    const double du = 0.1 / density;
    const double scale = 1.0 / (2.0 * static_cast<double>(n) * n);
    for (double u = du; u <= u_max; u += du) {
        const double tt = u * u * scale;
        if (tt >= 2.0)
            break;
        t.push_back(tt);
    }
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

std::string describe_failure(const SobolevSetup& setup, int n, const std::vector<double>& roots)
{
    std::ostringstream os;
    os << "sobolev_zeros: found " << roots.size() << " of " << n << " zeros (alpha=" << setup.params.alpha
       << ", beta=" << setup.params.beta << ", j=" << setup.j << ", gamma=" << setup.mass.gamma
       << ", mass=" << to_string(setup.mass.preset) << ")";
    os.precision(17);
    os << "; located:";
    for (double r : roots)
        os << ' ' << r;
    return os.str();
}

} // namespace

ZeroSet sobolev_zeros(const SobolevSetup& setup, int n)
{
    if (n < 1)
        throw std::invalid_argument("sobolev_zeros: n must be >= 1");
    const JacobiSeries q = sobolev_polynomial(setup, n);
    const JacobiSeries dq = derivative(q);
    // Work in t = 1 - x so the cluster at x = 1 is resolved relative to t.
    const auto f = [&q](double t) { return clenshaw_eval(q, 1.0 - t); };
    const auto df = [&dq](double t) { return -clenshaw_eval(dq, 1.0 - t); };

    std::vector<double> offsets;
    for (int density = 1; density <= 4; density *= 2) {
        const std::vector<double> grid = offset_grid(setup, n, density);
        std::vector<double> values(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            values[i] = f(grid[i]);
        offsets.clear();
        for (const auto& b : scan_brackets(grid, values, offsets))
            offsets.push_back(refine_root(f, df, b.lo, b.hi, b.f_lo, kStepTolerance));

        if (static_cast<int>(offsets.size()) < n && values.front() != 0.0) {
            // Expanding search above x = 1.
            const double f_one = values.front();
            double prev = 0.0;
            for (double s = 1e-12; s <= kOutsideCap; s *= 2.0) {
                const double fs = f(-s);
                if (fs == 0.0) {
                    offsets.push_back(-s);
                    break;
                }
                if ((fs < 0) != (f_one < 0)) {
                    offsets.push_back(refine_root(f, df, -s, prev, fs, kStepTolerance));
                    break;
                }
                prev = -s;
            }
        }
        if (static_cast<int>(offsets.size()) == n)
            break;
    }

    std::sort(offsets.begin(), offsets.end());
    ZeroSet zs;
    zs.n = n;
    for (double t : offsets) {
        zs.zeros.push_back(1.0 - t);
        if (t < 0.0)
            ++zs.outside_count;
    }
    if (static_cast<int>(zs.zeros.size()) != n)
        throw ZeroSearchError(describe_failure(setup, n, zs.zeros));
    return zs;
}

bool predicts_outside_zero(const SobolevSetup& setup)
{
    if (setup.j <= 0 || setup.mass.vanishes())
        return false;
    switch (classify(setup).tag) {
    case RegimeTag::Subcritical:
        return true;
    case RegimeTag::Critical:
        return setup.mass.limit_constant() > critical_threshold_V(setup.params.alpha, setup.params.beta, setup.j);
    case RegimeTag::Supercritical:
        return false;
    }
    return false;
}

ScaledZeros scaled_zeros(const SobolevSetup& setup, const ZeroSet& zs, int count)
{
    if (count < 0 || count > zs.n)
        throw std::invalid_argument("scaled_zeros: need 0 <= count <= n");
    ScaledZeros out;
    out.n = zs.n;
    const bool skip = predicts_outside_zero(setup) || zs.outside_count > 0;
    if (skip && !zs.zeros.empty())
        out.outside_zero = zs.zeros.front();
    const std::size_t first = skip ? 1 : 0;
    const double nd = zs.n;
    for (std::size_t i = first; i < static_cast<std::size_t>(count) && i < zs.zeros.size(); ++i)
        out.values.push_back(nd * std::sqrt(2.0 * (1.0 - zs.zeros[i])));
    return out;
}

ScaledZeros scaled_zeros(const SobolevSetup& setup, int n, int count)
{
    return scaled_zeros(setup, sobolev_zeros(setup, n), count);
}

std::vector<double> limit_zeros(const LimitFunction& lf, int count)
{
    if (count < 1)
        throw std::invalid_argument("limit_zeros: count must be >= 1");
    const auto f = [&lf](double x) { return limit_eval(lf, x); };
    const auto df = [&lf](double x) { return limit_eval_derivative(lf, x); };
    const double top_order = lf.alpha + 2.0 * (static_cast<double>(lf.b.size()) - 1.0);
    double upper = bessel_zero_estimate(std::max(top_order, 0.0), count + 1) + 2.0 * std::numbers::pi;
    constexpr double step = 0.02;
    for (int attempt = 0; attempt <= 4; ++attempt, upper *= 2.0) {
        std::vector<double> roots;
        double x_prev = 1e-3;
        double f_prev = f(x_prev);
        for (double x = x_prev + step; x <= upper + step && static_cast<int>(roots.size()) < count; x += step) {
            const double fx = f(x);
            if (fx == 0.0) {
                roots.push_back(x);
            } else if (f_prev != 0.0 && (fx < 0) != (f_prev < 0)) {
                roots.push_back(refine_root(f, df, x_prev, x, f_prev, 1e-13));
            }
            x_prev = x;
            f_prev = fx;
        }
        if (static_cast<int>(roots.size()) >= count) {
            roots.resize(static_cast<std::size_t>(count));
            return roots;
        }
    }
    throw ZeroSearchError("limit_zeros: fewer than " + std::to_string(count) + " zeros located");
}

std::string to_string(ZeroLocation loc)
{
    return loc == ZeroLocation::Inside ? "Inside" : "Outside";
}

LargestZeroReport largest_zero_location(const SobolevSetup& setup, int n)
{
    if (setup.j <= 0)
        throw std::invalid_argument("largest_zero_location: requires j > 0");
    if (n < 1)
        throw std::invalid_argument("largest_zero_location: n must be >= 1");
    LargestZeroReport r;
    r.q_at_one = deriv_ratio(setup, n, 0);
    r.location = r.q_at_one < 0.0 ? ZeroLocation::Outside : ZeroLocation::Inside;
    r.predicted = predicts_outside_zero(setup) ? ZeroLocation::Outside : ZeroLocation::Inside;
    return r;
}

ConvergenceTable convergence_table(const SobolevSetup& setup, const std::vector<int>& ns, int count, int threads)
{
    for (int n : ns)
        if (n < count)
            throw std::invalid_argument("convergence_table: every n must be >= count");
    const auto row_for = [&setup, count](int n) {
        ConvergenceRow row;
        row.n = n;
        const ZeroSet zs = sobolev_zeros(setup, n);
        row.raw.assign(zs.zeros.begin(), zs.zeros.begin() + count);
        row.scaled = scaled_zeros(setup, zs, count);
        return row;
    };

    ConvergenceTable table;
    table.rows.resize(ns.size());
    const std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
    for (std::size_t start = 0; start < ns.size(); start += workers) {
        std::vector<std::future<ConvergenceRow>> pending;
        for (std::size_t i = start; i < std::min(ns.size(), start + workers); ++i)
            pending.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, row_for, ns[i]));
        for (std::size_t i = 0; i < pending.size(); ++i)
            table.rows[start + i] = pending[i].get();
    }

    table.limit_function = limit_coeffs(setup);
    const int limit_count = count - (predicts_outside_zero(setup) ? 1 : 0);
    if (limit_count > 0)
        table.limit = limit_zeros(table.limit_function, limit_count);
    return table;
}

} // namespace smh
