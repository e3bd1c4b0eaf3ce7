#include "smh/jacobi.hpp"

#include "smh/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace smh {

namespace {

// P_m = (a_m x + c_m) P_{m-1} - d_m P_{m-2}, valid for m >= 2.
struct RecurrenceStep
{
    double slope;
    double offset;
    double damping;
};

RecurrenceStep recurrence_step(int m, double a, double b)
{
    const double c = 2.0 * m + a + b;
    const double denom = 2.0 * m * (m + a + b) * (c - 2.0);
    return {(c - 1.0) * c * (c - 2.0) / denom,
            (c - 1.0) * (a * a - b * b) / denom,
            2.0 * (m + a - 1.0) * (m + b - 1.0) * c / denom};
}

void require_degree(int n)
{
    if (n < 0)
        throw std::invalid_argument("jacobi: degree must be nonnegative");
}

} // namespace

JacobiParams::JacobiParams(double alpha_, double beta_)
    : alpha(alpha_)
    , beta(beta_)
{
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::invalid_argument("Jacobi parameters must satisfy alpha > -1 and beta > -1 (got "
                                    + std::to_string(alpha) + ", " + std::to_string(beta) + ")");
}

int JacobiSeries::degree() const
{
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[static_cast<std::size_t>(i)] != 0.0)
            return i;
    return -1;
}

double jacobi_eval(int n, const JacobiParams& params, double x)
{
    require_degree(n);
    const double a = params.alpha;
    const double b = params.beta;
    double prev = 1.0;
    if (n == 0)
        return prev;
    double cur = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    for (int m = 2; m <= n; ++m) {
        const auto s = recurrence_step(m, a, b);
        const double next = (s.slope * x + s.offset) * cur - s.damping * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> jacobi_eval_all(int n, const JacobiParams& params, double x)
{
    require_degree(n);
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    out[0] = 1.0;
    if (n == 0)
        return out;
    out[1] = 0.5 * (params.alpha + params.beta + 2.0) * x + 0.5 * (params.alpha - params.beta);
    for (int m = 2; m <= n; ++m) {
        const auto s = recurrence_step(m, params.alpha, params.beta);
        const auto i = static_cast<std::size_t>(m);
        out[i] = (s.slope * x + s.offset) * out[i - 1] - s.damping * out[i - 2];
    }
    return out;
}

double value_at_one(int n, double alpha)
{
    require_degree(n);
    if (!(alpha > -1.0))
        throw std::invalid_argument("value_at_one: alpha must exceed -1");
    return std::exp(log_gamma(n + alpha + 1.0) - log_gamma(n + 1.0) - log_gamma(alpha + 1.0));
}

double log_deriv_at_one(int n, int k, const JacobiParams& params)
{
    require_degree(n);
    if (k < 0 || k > n)
        throw std::invalid_argument("log_deriv_at_one: need 0 <= k <= n");
    const double a = params.alpha;
    const double b = params.beta;
    // the Gamma(n+a+b+k+1)/Gamma(n+a+b+1) factor is 1 for k = 0, and its
    // denominator may sit left of a pole when n = 0 and a + b <= -1
    const double growth = k == 0 ? 0.0 : log_gamma(n + a + b + k + 1.0) - log_gamma(n + a + b + 1.0);
    return -k * std::numbers::ln2 + growth + log_gamma(n + a + 1.0) - log_gamma(n - k + 1.0) - log_gamma(a + k + 1.0);
}

double deriv_at_one(int n, int k, const JacobiParams& params)
{
    require_degree(n);
    if (k < 0)
        throw std::invalid_argument("deriv_at_one: derivative order must be nonnegative");
    if (k > n)
        return 0.0;
    return std::exp(log_deriv_at_one(n, k, params));
}

double norm2(int n, const JacobiParams& params)
{
    require_degree(n);
    const double a = params.alpha;
    const double b = params.beta;
    // n = 0 with a + b + 1 near 0: Gamma(n+a+b+1)(2n+a+b+1) = Gamma(a+b+2)
    const double log_head = (a + b + 1.0) * std::numbers::ln2;
    if (n == 0)
        return std::exp(log_head + log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(a + b + 2.0));
    return std::exp(log_head - std::log(2.0 * n + a + b + 1.0) + log_gamma(n + a + 1.0) + log_gamma(n + b + 1.0)
                    - log_gamma(n + 1.0) - log_gamma(n + a + b + 1.0));
}

double clenshaw_eval(const JacobiSeries& s, double x)
{
    const int n = static_cast<int>(s.coeffs.size()) - 1;
    if (n < 0)
        return 0.0;
    const double a = s.params.alpha;
    const double b = s.params.beta;
    // b_k = c_k + A_{k+1}(x) b_{k+1} - D_{k+2} b_{k+2}, result b_0.
    double b1 = 0.0; // b_{k+1}
    double b2 = 0.0; // b_{k+2}
    double damping_ahead = 0.0; // D_{k+2}
    for (int k = n; k >= 1; --k) {
        double bk = s.coeffs[static_cast<std::size_t>(k)];
        double damping_here = 0.0;
        if (k + 1 <= n) {
            const auto st = recurrence_step(k + 1, a, b);
            bk += (st.slope * x + st.offset) * b1 - damping_ahead * b2;
            damping_here = st.damping;
        }
        damping_ahead = damping_here;
        b2 = b1;
        b1 = bk;
    }
    // k = 0: A_1(x) = P_1(x), and D_2 is the damping of step m = 2.
    const double p1 = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    return s.coeffs[0] + p1 * b1 - damping_ahead * b2;
}

JacobiSeries derivative(const JacobiSeries& s)
{
    // d/dx P_i^{(a,b)} = (i + a + b + 1)/2 * P_{i-1}^{(a+1,b+1)}
    JacobiSeries out;
    out.params = JacobiParams(s.params.alpha + 1.0, s.params.beta + 1.0);
    const auto n = s.coeffs.size();
    if (n <= 1) {
        out.coeffs = {0.0};
        return out;
    }
    out.coeffs.resize(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        out.coeffs[i - 1] = 0.5 * (static_cast<double>(i) + s.params.alpha + s.params.beta + 1.0) * s.coeffs[i];
    return out;
}

double scaled_eval(int n, const JacobiParams& params, double u)
{
    if (n < 1)
        throw std::invalid_argument("scaled_eval: n must be positive");
    const double t = u * u / (2.0 * n * n);
    if (t > 2.0)
        throw std::invalid_argument("scaled_eval: argument leaves [-1, 1]");
    return std::pow(static_cast<double>(n), -params.alpha) * jacobi_eval(n, params, 1.0 - t);
}

double classical_limit(double alpha, double u)
{
    if (u == 0.0)
        return std::exp(-log_gamma(alpha + 1.0));
    return std::pow(0.5 * u, -alpha) * bessel_j(alpha, u);
}

} // namespace smh
