#include "smh/cli/properties.hpp"

#include "smh/asymptotics.hpp"
#include "smh/special_functions.hpp"
#include "smh/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace smh::cli {

namespace {

SobolevSetup make_setup(Rational alpha, Rational beta, int j, MassPreset preset, double M, Rational gamma)
{
    SobolevSetup s;
    s.params = JacobiParams(alpha.to_double(), beta.to_double());
    s.j = j;
    s.mass.preset = preset;
    s.mass.M = M;
    s.mass.gamma = gamma.to_double();
    s.exact_alpha = alpha;
    s.exact_gamma = gamma;
    return s;
}

PropertyResult finish(std::string name, double worst, double bound, std::string detail)
{
    return {std::move(name), worst, bound, worst <= bound, std::move(detail)};
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double mehler_heine_sup(const SobolevSetup& setup, const LimitFunction& lf, int n)
{
    const JacobiSeries q = sobolev_polynomial(setup, n);
    const double scale = std::pow(static_cast<double>(n), -setup.params.alpha);
    const double inv = 1.0 / (2.0 * static_cast<double>(n) * n);
    double sup = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double x = 18.0 * i / 199.0;
        sup = std::max(sup, std::abs(scale * clenshaw_eval(q, 1.0 - x * x * inv) - limit_eval(lf, x)));
    }
    return sup;
}

} // namespace

std::vector<NamedSetup> reference_setups()
{
    return {
        {"supercritical", make_setup(Rational(3), Rational(1), 3, MassPreset::ExpRational, 0.5, Rational(25))},
        {"subcritical", make_setup(Rational(3), Rational(-1, 2), 3, MassPreset::LogRatio, 3.5, Rational(4))},
        {"critical-M5", make_setup(Rational(-9, 10), Rational(-9, 10), 3, MassPreset::PolyRatio, 5.0, Rational(61, 5))},
        {"critical-M1e6",
         make_setup(Rational(-9, 10), Rational(-9, 10), 3, MassPreset::PolyRatio, 1e6, Rational(61, 5))},
        {"plain", make_setup(Rational(0), Rational(0), 1, MassPreset::Plain, 1.0, Rational(2))},
    };
}

PropertyResult check_orthogonality(int max_n)
{
    double worst = 0.0;
    std::string where;
    for (const auto& [name, setup] : reference_setups()) {
        for (int n = 1; n <= max_n; ++n) {
            const JacobiSeries q = sobolev_polynomial(setup, n);
            const double qj = q_deriv_at_one(setup, n, setup.j);
            const double mn = mass(setup.mass, n);
            const double hn = norm2(n, setup.params);
            for (int m = 0; m < n; ++m) {
                const double inner = q.coeffs[static_cast<std::size_t>(m)] * norm2(m, setup.params)
                                     + mn * qj * deriv_at_one(m, setup.j, setup.params);
                const double r = std::abs(inner) / hn;
                if (r > worst) {
                    worst = r;
                    where = name + " n=" + std::to_string(n) + " m=" + std::to_string(m);
                }
            }
        }
    }
    return finish("sobolev-orthogonality", worst, 1e-9, "worst at " + (where.empty() ? "-" : where));
}

PropertyResult check_reconstruction(int max_n)
{
    double worst = 0.0;
    std::string where;
    for (const auto& [name, setup] : reference_setups()) {
        for (int n = setup.j + 1; n <= max_n; ++n) {
            const JacobiSeries q = sobolev_polynomial(setup, n);
            const auto b = connection_coeffs(setup, n);
            std::vector<double> direct, recon;
            double scale = 0.0;
            for (int i = 0; i <= 20; ++i) {
                const double x = -1.0 + 0.1 * i;
                direct.push_back(clenshaw_eval(q, x));
                recon.push_back(connection_reconstruct(setup, n, b, x));
                scale = std::max(scale, std::abs(direct.back()));
            }
            for (std::size_t i = 0; i < direct.size(); ++i) {
                const double r = std::abs(direct[i] - recon[i]) / scale;
                if (r > worst) {
                    worst = r;
                    where = name + " n=" + std::to_string(n);
                }
            }
        }
    }
    return finish("connection-reconstruction", worst, 1e-8, "worst at " + (where.empty() ? "-" : where));
}

PropertyResult check_zero_structure(const std::vector<int>& degrees)
{
    std::vector<std::string> problems;
    double worst_residual = 0.0;
    for (const auto& [name, setup] : reference_setups()) {
        for (int n : degrees) {
            const std::string tag = name + " n=" + std::to_string(n);
            ZeroSet zs;
            try {
                zs = sobolev_zeros(setup, n);
            } catch (const ZeroSearchError& e) {
                problems.push_back(tag + ": " + e.what());
                continue;
            }
            if (static_cast<int>(zs.zeros.size()) != n)
                problems.push_back(tag + ": wrong count");
            if (zs.outside_count > 1)
                problems.push_back(tag + ": more than one zero above 1");
            if (zs.zeros.back() <= -1.0)
                problems.push_back(tag + ": zero at or below -1");
            for (std::size_t i = 0; i + 1 < zs.zeros.size(); ++i)
                if (!(zs.zeros[i] - zs.zeros[i + 1] > 1e-12))
                    problems.push_back(tag + ": zeros " + std::to_string(i + 1) + "," + std::to_string(i + 2)
                                       + " not separated");
            const JacobiSeries q = sobolev_polynomial(setup, n);
            double peak = 0.0;
            for (int i = 0; i <= 10 * (n + 1); ++i)
                peak = std::max(peak, std::abs(clenshaw_eval(q, std::cos(std::numbers::pi * i / (10.0 * (n + 1))))));
            for (double y : zs.zeros)
                worst_residual = std::max(worst_residual, std::abs(clenshaw_eval(q, y)) / peak);
        }
    }
    if (worst_residual > 1e-9)
        problems.push_back("residual " + fmt(worst_residual));
    std::string detail = problems.empty() ? "max |Q_n(y)|/max|Q_n| = " + fmt(worst_residual) : problems.front();
    if (problems.size() > 1)
        detail += " (+" + std::to_string(problems.size() - 1) + " more)";
    PropertyResult r{"zero-structure", static_cast<double>(problems.size()), 0.0, problems.empty(), detail};
    return r;
}

PropertyResult check_j0_identity()
{
    struct Case
    {
        double alpha, beta, M;
    };
    const Case cases[] = {{0.0, 0.0, 1.0}, {3.0, 1.0, 5.0}, {-0.9, -0.9, 5.0}, {0.5, -0.5, 1e6}, {2.0, 0.0, 0.25}};
    double worst = 0.0;
    for (const auto& c : cases)
        for (int i = 1; i <= 300; ++i)
            worst = std::max(worst, j0_identity_residual(c.alpha, c.beta, c.M, 0.1 * i));
    return finish("j0-identity", worst, 1e-9, "x in [0.1, 30]");
}

PropertyResult check_bessel_recurrence()
{
    double worst = 0.0;
    for (double nu : {-0.9, -0.5, 0.0, 0.5, 1.1, 3.0, 7.1, 10.0}) {
        for (int i = 1; i <= 500; ++i) {
            const double x = 0.1 * i;
            const double r = bessel_j(nu, x) - 2.0 * (nu + 1.0) / x * bessel_j(nu + 1.0, x) + bessel_j(nu + 2.0, x);
            worst = std::max(worst, std::abs(r));
        }
    }
    return finish("bessel-three-term", worst, 1e-10, "x in [0.1, 50]");
}

PropertyResult check_gamma_duplication()
{
    double worst = 0.0;
    for (double x : {3.1, 0.3, 1.7, 12.25, 40.5}) {
        const double lhs = std::exp(log_gamma(2.0 * x));
        const double rhs = std::exp(log_gamma(x) + log_gamma(x + 0.5) - (1.0 - 2.0 * x) * std::numbers::ln2)
                           / std::sqrt(std::numbers::pi);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    return finish("gamma-duplication", worst, 1e-12, "relative");
}

PropertyResult check_mehler_heine_trend()
{
    double worst = 0.0; // largest sup(600) / sup(300)
    std::string detail;
    for (const auto& [name, setup] : reference_setups()) {
        if (name == "plain")
            continue;
        const LimitFunction lf = limit_coeffs(setup);
        const double s300 = mehler_heine_sup(setup, lf, 300);
        const double s600 = mehler_heine_sup(setup, lf, 600);
        worst = std::max(worst, s600 / s300);
        detail += (detail.empty() ? "" : "; ") + name + " " + fmt(s300) + " -> " + fmt(s600);
    }
    PropertyResult r{"mehler-heine-trend", worst, 1.0, worst < 1.0, detail};
    return r;
}

PropertyResult check_limit_coefficients(int n)
{
    double worst = 0.0;
    std::string detail;
    for (const auto& [name, setup] : reference_setups()) {
        if (name == "plain")
            continue;
        const auto b = connection_coeffs(setup, n);
        const LimitFunction lf = limit_coeffs(setup);
        double err = 0.0;
        for (std::size_t i = 0; i < b.size(); ++i)
            err = std::max(err, std::abs(b[i] - lf.b[i]));
        worst = std::max(worst, err);
        detail += (detail.empty() ? "" : "; ") + name + " " + fmt(err);
    }
    return finish("limit-coefficients", worst, 5e-2, "n=" + std::to_string(n) + ": " + detail);
}

std::vector<PropertyResult> property_suite(bool fast)
{
    std::vector<int> degrees{25, 50, 150, 250};
    if (!fast)
        degrees.push_back(500);
    return {
        check_orthogonality(),     check_reconstruction(),    check_zero_structure(degrees),
        check_j0_identity(),       check_bessel_recurrence(), check_gamma_duplication(),
        check_mehler_heine_trend(), check_limit_coefficients(),
    };
}

} // namespace smh::cli
