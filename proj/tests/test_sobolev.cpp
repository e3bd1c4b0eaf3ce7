#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smh/asymptotics.hpp"
#include "smh/sobolev.hpp"
#include "smh/special_functions.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <stdexcept>

using namespace smh;

namespace {

SobolevSetup make(double a, double b, int j, MassPreset preset, double M, double gamma)
{
    SobolevSetup s;
    s.params = JacobiParams(a, b);
    s.j = j;
    s.mass.preset = preset;
    s.mass.M = M;
    s.mass.gamma = gamma;
    return s;
}

SobolevSetup supercritical() { return make(3, 1, 3, MassPreset::ExpRational, 0.5, 25); }
SobolevSetup subcritical() { return make(3, -0.5, 3, MassPreset::LogRatio, 3.5, 4); }
SobolevSetup critical(double M) { return make(-0.9, -0.9, 3, MassPreset::PolyRatio, M, 12.2); }
SobolevSetup unperturbed(double a, double b, int j) { return make(a, b, j, MassPreset::Plain, 0.0, 1.0); }

std::vector<SobolevSetup> all_presets()
{
    return {supercritical(), subcritical(), critical(5), critical(1e6), make(0, 0, 1, MassPreset::Plain, 1.0, 2.0),
            make(0.5, 0.5, 2, MassPreset::Plain, 10.0, 5.0)};
}

double k_fold_derivative_at_one(JacobiSeries s, int k)
{
    for (int i = 0; i < k; ++i)
        s = derivative(s);
    return s.coeffs.empty() ? 0.0 : clenshaw_eval(s, 1.0);
}

} // namespace

TEST_CASE("mass presets")
{
    MassSequence exp_rational{MassPreset::ExpRational, 0.0, 25.0, {}};
    CHECK(exp_rational.limit_constant() == 0.5);
    CHECK(mass(exp_rational, 800) * std::pow(800.0, 25.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::isfinite(mass(exp_rational, 5000)));

    MassSequence poly{MassPreset::PolyRatio, 5.0, 12.2, {}};
    const double expected = 5.0 * 250.0 * 250.0 * 249.5 * 252.0 / std::pow(250.0, 16.2);
    CHECK(mass(poly, 250) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(mass(poly, 100000) * std::pow(1e5, 12.2) == doctest::Approx(5.0).epsilon(1e-3));

    MassSequence plain{MassPreset::Plain, 0.0, 3.0, {}};
    for (int n : {1, 7, 500})
        CHECK(mass(plain, n) == 0.0);
    plain.M = 2.0;
    CHECK(mass(plain, 10) == doctest::Approx(2e-3));

    // The logarithmic preset approaches 7/2 only like 1/ln n.
    MassSequence log_ratio{MassPreset::LogRatio, 0.0, 4.0, {}};
    CHECK(log_ratio.limit_constant() == 3.5);
    const double far = mass(log_ratio, 2000000000) * std::pow(2e9, 4.0);
    CHECK(std::abs(far - 3.5) < 0.15);
    CHECK(std::abs(far - 3.5) < std::abs(mass(log_ratio, 1000) * 1e12 - 3.5));

    MassSequence custom{MassPreset::Custom, 0.0, 0.0, {{3, 0.25}}};
    CHECK(mass(custom, 3) == 0.25);
    CHECK_THROWS_AS(mass(custom, 4), std::out_of_range);
    CHECK_THROWS_AS(mass(plain, 0), std::invalid_argument);
    CHECK(parse_mass_preset("polyratio") == MassPreset::PolyRatio);
    CHECK_THROWS_AS(parse_mass_preset("bogus"), std::invalid_argument);
}

TEST_CASE("kernel_at_one")
{
    const JacobiParams legendre(0, 0);
    const KernelValue k0 = kernel_at_one(legendre, 0, 0, 0);
    CHECK(k0.value == doctest::Approx(0.5));
    CHECK(k0.scaled == k0.value);
    // C_{0,0} = 1 / (Gamma(1)^2 2^1 * 1) for alpha = beta = 0
    CHECK(std::abs(kernel_at_one(legendre, 2000, 0, 0).scaled - 0.5) <= 1e-2);

    const JacobiParams p(-0.9, -0.9);
    double prev = -1.0;
    for (int n = 0; n <= 60; ++n) {
        const double v = kernel_at_one(p, n, 3, 3).value;
        CHECK(v >= 0.0);
        CHECK(v >= prev);
        prev = v;
    }

    // Scaled values settle: successive doubling differences shrink.
    for (const JacobiParams q : {JacobiParams(3, 1), JacobiParams(-0.9, -0.9), JacobiParams(3, -0.5)}) {
        double last = INFINITY;
        for (int n : {50, 100, 200, 400}) {
            const double d = std::abs(kernel_at_one(q, 2 * n, 3, 1).scaled - kernel_at_one(q, n, 3, 1).scaled);
            CHECK(d < last);
            last = d;
        }
    }
}

TEST_CASE("sobolev_polynomial: structure")
{
    const auto s0 = unperturbed(0.3, 0.2, 2);
    const JacobiSeries q = sobolev_polynomial(s0, 9);
    for (int i = 0; i < 9; ++i)
        CHECK(q.coeffs[static_cast<std::size_t>(i)] == 0.0);
    CHECK(q.coeffs[9] == 1.0);
    CHECK(sobolev_polynomial(critical(5), 0).coeffs == std::vector<double>{1.0});
    for (const auto& s : all_presets())
        CHECK(sobolev_polynomial(s, 40).coeffs.back() == 1.0);
}

TEST_CASE("sobolev_polynomial: orthogonality residuals for n <= 100")
{
    for (const auto& s : all_presets()) {
        double worst = 0.0;
        for (int n = 1; n <= 100; ++n) {
            const JacobiSeries q = sobolev_polynomial(s, n);
            const double qj = q_deriv_at_one(s, n, s.j);
            const double mn = mass(s.mass, n);
            for (int m = 0; m < n; ++m) {
                const double r = q.coeffs[static_cast<std::size_t>(m)] * norm2(m, s.params)
                                 + mn * qj * deriv_at_one(m, s.j, s.params);
                worst = std::max(worst, std::abs(r) / norm2(n, s.params));
            }
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("sobolev_polynomial: orthogonality by quadrature and series differentiation")
{
    // Well-conditioned case where both sides can be computed independently.
    const SobolevSetup s = make(0, 0, 1, MassPreset::Plain, 3.0, 1.0);
    for (int n = 2; n <= 20; ++n) {
        const JacobiSeries q = sobolev_polynomial(s, n);
        const double qj = k_fold_derivative_at_one(q, s.j);
        for (int m = 0; m < n; ++m) {
            const double l2 = boost::math::quadrature::gauss<double, 30>::integrate(
                [&](double x) { return clenshaw_eval(q, x) * jacobi_eval(m, s.params, x); }, -1.0, 1.0);
            const double inner = l2 + mass(s.mass, n) * qj * deriv_at_one(m, s.j, s.params);
            CHECK(std::abs(inner) <= 1e-9 * norm2(n, s.params));
        }
    }
}

TEST_CASE("q_deriv_at_one")
{
    const auto s0 = unperturbed(3, 1, 3);
    for (int k = 0; k <= 4; ++k)
        CHECK(q_deriv_at_one(s0, 12, k) == doctest::Approx(deriv_at_one(12, k, s0.params)));

    for (const auto& s : {critical(5), critical(1e6), make(0, 0, 1, MassPreset::Plain, 1.0, 2.0),
                          make(1, 0.5, 2, MassPreset::Plain, 50.0, 1.0)}) {
        for (int n = 1; n <= 30; ++n)
            for (int k = 0; k <= std::min(3, n); ++k) {
                const double closed = q_deriv_at_one(s, n, k);
                const double series = k_fold_derivative_at_one(sobolev_polynomial(s, n), k);
                INFO("alpha=" << s.params.alpha << " n=" << n << " k=" << k);
                CHECK(std::abs(closed - series) <= 1e-4 * std::max(std::abs(closed), 1e-300)
                                                       + 1e-9 * deriv_at_one(n, k, s.params));
            }
        // first derivative also against a central difference of the Jacobi series
        const JacobiSeries q = sobolev_polynomial(s, 15);
        const double h = 1e-6;
        const double fd = (clenshaw_eval(q, 1 + h) - clenshaw_eval(q, 1 - h)) / (2 * h);
        CHECK(std::abs(fd - q_deriv_at_one(s, 15, 1)) <= 1e-4 * std::abs(q_deriv_at_one(s, 15, 1)));
    }
}

TEST_CASE("deriv_ratio limits by regime")
{
    CHECK(std::abs(deriv_ratio(supercritical(), 2000, 0) - 1.0) <= 5e-2);
    const double theta = limit_deriv_ratio(RegimeTag::Critical, -0.9, -0.9, 3, 5.0, 0);
    CHECK(std::abs(deriv_ratio(critical(5), 2000, 0) - theta) <= 5e-2);
    CHECK(std::abs(deriv_ratio(subcritical(), 2000, 3)) <= 5e-2);
    CHECK(std::abs(deriv_ratio(subcritical(), 2000, 0) - (-3.0 / 7.0)) <= 5e-2);
    CHECK_THROWS_AS(deriv_ratio(subcritical(), 3, 4), std::invalid_argument);
}

TEST_CASE("sobolev_norm2")
{
    const auto s0 = unperturbed(-0.9, -0.9, 3);
    for (int n : {0, 5, 80})
        CHECK(sobolev_norm2(s0, n) == norm2(n, s0.params));
    for (const auto& s : {supercritical(), critical(5), critical(1e6)})
        CHECK(std::abs(sobolev_norm2(s, 2000) / norm2(2000, s.params) - 1.0) <= 1e-2);
    // Subcritical: the excess behaves like 2(alpha+2j+1)/n = 20/n, just above 1e-2 at n = 2000.
    const auto sub = subcritical();
    const double excess = sobolev_norm2(sub, 2000) / norm2(2000, sub.params) - 1.0;
    CHECK(excess == doctest::Approx(20.0 / 2000).epsilon(1e-2));
    CHECK(std::abs(sobolev_norm2(sub, 4000) / norm2(4000, sub.params) - 1.0) <= 1e-2);
    for (const auto& s : all_presets()) {
        for (int n : {1, 4, 30, 150})
            CHECK(sobolev_norm2(s, n) >= norm2(n, s.params));
    }
}

TEST_CASE("connection coefficients")
{
    const auto s0 = unperturbed(3, 1, 3);
    const auto b0 = connection_coeffs(s0, 20);
    REQUIRE(b0.size() == 5);
    CHECK(b0[0] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < b0.size(); ++i)
        CHECK(std::abs(b0[i]) <= 1e-12);

    CHECK_THROWS_AS(connection_coeffs(critical(5), 3), std::invalid_argument);
    CHECK_NOTHROW(connection_coeffs(critical(5), 4));

    const auto super = connection_coeffs(supercritical(), 4000);
    CHECK(super[0] == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t i = 1; i < super.size(); ++i)
        CHECK(std::abs(super[i]) <= 1e-6);

    // j = 0, subcritical: b -> (0, -1/2)
    const auto sub0 = connection_coeffs(make(0.5, 0.0, 0, MassPreset::Plain, 1.0, 1.0), 4000);
    CHECK(std::abs(sub0[0]) <= 5e-2);
    CHECK(std::abs(sub0[1] + 0.5) <= 5e-2);
}

TEST_CASE("connection triangle reproduces the derivative ratios")
{
    for (const auto& s : all_presets())
        for (int n : {s.j + 1, 17, 60, 250}) {
            const auto b = connection_coeffs(s, n);
            for (int k = 0; k <= s.j + 1; ++k) {
                double sum = 0.0, fact = 1.0;
                for (int i = 0; i <= k; ++i) {
                    if (i > 0)
                        fact *= i;
                    const double binom = std::round(std::exp(log_gamma(k + 1.0) - log_gamma(i + 1.0) - log_gamma(k - i + 1.0)));
                    sum += b[static_cast<std::size_t>(i)] * binom * (i % 2 ? -1.0 : 1.0) * fact * shift_ratio(s.params, i, k, n);
                }
                CHECK(std::abs(sum - deriv_ratio(s, n, k)) <= 1e-10);
            }
        }
}

TEST_CASE("connection_reconstruct equals the Jacobi-series form")
{
    for (const auto& s : all_presets()) {
        double worst = 0.0;
        for (int n = s.j + 1; n <= 60; ++n) {
            const JacobiSeries q = sobolev_polynomial(s, n);
            const auto b = connection_coeffs(s, n);
            double scale = 0.0;
            std::vector<double> diff;
            for (int i = 0; i <= 20; ++i) {
                const double x = -1.0 + 0.1 * i;
                const double direct = clenshaw_eval(q, x);
                scale = std::max(scale, std::abs(direct));
                diff.push_back(std::abs(direct - connection_reconstruct(s, n, b, x)));
            }
            for (double d : diff)
                worst = std::max(worst, d / scale);
            CHECK(connection_reconstruct(s, n, b, 1.0)
                  == doctest::Approx(b[0] * value_at_one(n, s.params.alpha)).epsilon(1e-12));
        }
        CHECK(worst <= 1e-8);
    }
    const auto s0 = unperturbed(0.5, -0.5, 2);
    for (double x : {-1.0, -0.3, 0.4, 1.05})
        CHECK(connection_reconstruct(s0, 25, x) == doctest::Approx(jacobi_eval(25, s0.params, x)).epsilon(1e-10));
}

TEST_CASE("shift ratios approach their limits")
{
    for (const JacobiParams p : {JacobiParams(3, 1), JacobiParams(-0.9, -0.9), JacobiParams(3, -0.5)})
        for (int k = 0; k <= 4; ++k)
            for (int i = 0; i <= k; ++i) {
                const double lim = shift_ratio_limit(p.alpha, i, k);
                CHECK(std::abs(shift_ratio(p, i, k, 5000) - lim) <= 1e-2 * std::max(1.0, std::abs(lim)));
            }
    CHECK(shift_ratio(JacobiParams(3, 1), 0, 2, 40) == doctest::Approx(1.0));
    CHECK_THROWS_AS(shift_ratio(JacobiParams(3, 1), 3, 2, 40), std::invalid_argument);
}
