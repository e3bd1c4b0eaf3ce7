#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smh/jacobi.hpp"
#include "smh/special_functions.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace smh;

namespace {

// Independent long double three-term recurrence, used as a finite-difference oracle.
long double jacobi_ld(int n, long double a, long double b, long double x)
{
    if (n == 0)
        return 1.0L;
    long double p0 = 1.0L, p1 = (a + b + 2) * x / 2 + (a - b) / 2;
    for (int m = 2; m <= n; ++m) {
        const long double c = 2.0L * m + a + b;
        const long double p2 = ((c - 1) * (c * (c - 2) * x + a * a - b * b) * p1 - 2 * (m + a - 1) * (m + b - 1) * c * p0)
                               / (2.0L * m * (m + a + b) * (c - 2));
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// k-th central difference at x = 1 with one Richardson step.
double fd_derivative(int n, int k, double a, double b, long double h)
{
    const auto central = [&](long double step) {
        long double sum = 0.0L;
        long double binom = 1.0L;
        for (int i = 0; i <= k; ++i) {
            const long double sign = (i % 2 == 0) ? 1.0L : -1.0L;
            sum += sign * binom * jacobi_ld(n, a, b, 1.0L + (k / 2.0L - i) * step);
            binom = binom * (k - i) / (i + 1);
        }
        return sum / std::pow(step, static_cast<long double>(k));
    };
    return static_cast<double>((4.0L * central(h / 2) - central(h)) / 3.0L);
}

} // namespace

TEST_CASE("JacobiParams rejects non-integrable weights")
{
    CHECK_THROWS_AS(JacobiParams(-1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(JacobiParams(0.0, -1.5), std::invalid_argument);
    CHECK_NOTHROW(JacobiParams(-0.9, -0.9));
}

TEST_CASE("jacobi_eval basics")
{
    const JacobiParams p(0.3, -0.4);
    CHECK(jacobi_eval(0, p, 0.123) == 1.0);
    CHECK(jacobi_eval(1, JacobiParams(0, 0), 0.5) == doctest::Approx(0.5));
    for (int n : {1, 5, 40, 300})
        CHECK(jacobi_eval(n, p, 1.0) == doctest::Approx(value_at_one(n, p.alpha)).epsilon(1e-11));
    const auto all = jacobi_eval_all(30, p, 0.3);
    REQUIRE(all.size() == 31);
    CHECK(all[30] == doctest::Approx(jacobi_eval(30, p, 0.3)).epsilon(1e-15));
}

TEST_CASE("value_at_one")
{
    CHECK(value_at_one(0, 2.7) == 1.0);
    CHECK(value_at_one(2, 3) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(value_at_one(5, 0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("deriv_at_one: closed values")
{
    const JacobiParams legendre(0, 0);
    CHECK(deriv_at_one(7, 0, JacobiParams(1.5, 0.5)) == doctest::Approx(value_at_one(7, 1.5)).epsilon(1e-13));
    CHECK(deriv_at_one(3, 3, legendre) == doctest::Approx(15.0).epsilon(1e-13));
    CHECK(deriv_at_one(2, 5, legendre) == 0.0);
    const JacobiParams p(1, 1);
    const double h = 1e-6;
    const double fd = (jacobi_eval(2, p, 1 + h) - jacobi_eval(2, p, 1 - h)) / (2 * h);
    CHECK(std::abs(deriv_at_one(2, 1, p) - fd) / deriv_at_one(2, 1, p) <= 1e-5);
}

TEST_CASE("deriv_at_one agrees with k-fold finite differences, n <= 30, k <= 4")
{
    for (const JacobiParams p : {JacobiParams(0, 0), JacobiParams(3, 1), JacobiParams(-0.9, -0.9), JacobiParams(0.5, -0.5)})
        for (int n = 0; n <= 30; ++n)
            for (int k = 1; k <= std::min(4, n); ++k) {
                const double exact = deriv_at_one(n, k, p);
                const double fd = fd_derivative(n, k, p.alpha, p.beta, 0.2L / (n * n));
                INFO("alpha=" << p.alpha << " n=" << n << " k=" << k);
                CHECK(std::abs(fd - exact) / std::abs(exact) <= 1e-5);
            }
}

TEST_CASE("norm2")
{
    CHECK(norm2(0, JacobiParams(0, 0)) == doctest::Approx(2.0).epsilon(1e-15));
    for (int n : {1, 2, 10, 99})
        CHECK(norm2(n, JacobiParams(0, 0)) == doctest::Approx(2.0 / (2 * n + 1)).epsilon(1e-13));
    const JacobiParams p(1, 0);
    const double quad = boost::math::quadrature::gauss<double, 64>::integrate(
        [&](double x) { return jacobi_eval(1, p, x) * jacobi_eval(1, p, x) * (1 - x); }, -1.0, 1.0);
    CHECK(std::abs(norm2(1, p) - quad) / quad <= 1e-10);
    CHECK(norm2(0, JacobiParams(-0.9, -0.9)) > 0.0);
}

TEST_CASE("orthogonality under quadrature, degree <= 30")
{
    for (const JacobiParams p : {JacobiParams(0, 0), JacobiParams(1, 0), JacobiParams(2, 1), JacobiParams(3, 3)}) {
        const auto w = [&](double x) { return std::pow(1 - x, p.alpha) * std::pow(1 + x, p.beta); };
        for (int n = 0; n <= 30; n += 3)
            for (int m = 0; m <= n; m += 2) {
                const double ip = boost::math::quadrature::gauss<double, 64>::integrate(
                    [&](double x) { return jacobi_eval(n, p, x) * jacobi_eval(m, p, x) * w(x); }, -1.0, 1.0);
                const double expected = n == m ? norm2(n, p) : 0.0;
                INFO("alpha=" << p.alpha << " n=" << n << " m=" << m);
                CHECK(std::abs(ip - expected) <= 1e-9 * norm2(n, p));
            }
    }
}

TEST_CASE("symmetry P_n^(a,b)(-x) = (-1)^n P_n^(b,a)(x)")
{
    const JacobiParams p(0.7, -0.3), q(-0.3, 0.7);
    for (int n = 0; n <= 100; n += 7)
        for (double x = -1.0; x <= 1.0; x += 0.125) {
            const double lhs = jacobi_eval(n, p, -x);
            const double rhs = (n % 2 ? -1.0 : 1.0) * jacobi_eval(n, q, x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
        }
}

TEST_CASE("clenshaw_eval")
{
    const JacobiParams p(3, 1);
    for (int n : {0, 1, 2, 9, 40}) {
        JacobiSeries s{p, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
        s.coeffs.back() = 1.0;
        CHECK(s.degree() == n);
        CHECK(clenshaw_eval(s, 0.37) == doctest::Approx(jacobi_eval(n, p, 0.37)).epsilon(1e-12));
    }
    CHECK(clenshaw_eval(JacobiSeries{JacobiParams(0, 0), {1.0, 1.0}}, 0.5) == doctest::Approx(1.5));
    CHECK(JacobiSeries{p, {0.0, 0.0}}.degree() == -1);

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int degree : {20, 50}) {
        JacobiSeries s{JacobiParams(-0.9, 0.4), {}};
        for (int i = 0; i <= degree; ++i)
            s.coeffs.push_back(coef(rng));
        for (double x : {-0.95, -0.2, 0.3, 0.99, 1.0}) {
            double naive = 0.0, scale = 0.0;
            for (int i = 0; i <= degree; ++i) {
                const double term = s.coeffs[static_cast<std::size_t>(i)] * jacobi_eval(i, s.params, x);
                naive += term;
                scale += std::abs(term);
            }
            CHECK(std::abs(clenshaw_eval(s, x) - naive) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("derivative of a series")
{
    JacobiSeries s{JacobiParams(0.5, -0.5), {0.3, -1.0, 2.0, 0.25, 0.0, 1.5}};
    const JacobiSeries d = derivative(s);
    CHECK(d.params.alpha == doctest::Approx(1.5));
    CHECK(d.params.beta == doctest::Approx(0.5));
    for (double x : {-0.8, 0.1, 0.9}) {
        const double h = 1e-6;
        const double fd = (clenshaw_eval(s, x + h) - clenshaw_eval(s, x - h)) / (2 * h);
        CHECK(clenshaw_eval(d, x) == doctest::Approx(fd).epsilon(1e-7));
    }
    JacobiSeries unit{JacobiParams(3, 1), std::vector<double>(13, 0.0)};
    unit.coeffs[12] = 1.0;
    CHECK(clenshaw_eval(derivative(derivative(unit)), 1.0)
          == doctest::Approx(deriv_at_one(12, 2, unit.params)).epsilon(1e-12));
}

TEST_CASE("scaled_eval and the classical endpoint limit")
{
    const JacobiParams p(3, 1);
    CHECK(classical_limit(3, 0) == doctest::Approx(1.0 / 6.0));
    CHECK(scaled_eval(4000, p, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-2));
    CHECK(std::abs(scaled_eval(500, p, 6.38016)) <= 2e-2);
    const auto sup_error = [&](int n) {
        double sup = 0.0;
        for (int i = 0; i <= 300; ++i) {
            const double u = 15.0 * i / 300;
            sup = std::max(sup, std::abs(scaled_eval(n, p, u) - classical_limit(3, u)));
        }
        return sup;
    };
    CHECK(sup_error(400) < sup_error(200));
    const double u = 4.2;
    CHECK(classical_limit(0.5, u) == doctest::Approx(std::pow(u / 2, -0.5) * bessel_j(0.5, u)).epsilon(1e-14));
}
