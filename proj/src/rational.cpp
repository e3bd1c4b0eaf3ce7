#include "smh/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace smh {

namespace {

using wide = __int128;

std::int64_t narrow(wide v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::invalid_argument("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational make(wide num, wide den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide a = num < 0 ? -num : num;
    wide b = den;
    while (b != 0) {
        const wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (first != last && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    return value;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational Rational::parse(std::string_view text)
{
    const auto whole = text;
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty rational");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto p = parse(text.substr(0, slash));
        const auto q = parse(text.substr(slash + 1));
        if (q.num_ == 0)
            throw std::invalid_argument("rational with zero denominator: '" + std::string(whole) + "'");
        return make(wide(p.num_) * q.den_, wide(p.den_) * q.num_);
    }

    // decimal with optional exponent
    std::int64_t exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        exponent = parse_int(text.substr(e + 1), whole);
        text = text.substr(0, e);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
        exponent -= static_cast<std::int64_t>(text.size() - dot - 1);
    } else {
        digits = std::string(text);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    if (exponent > 18 || exponent < -18 || digits.size() > 19)
        throw std::invalid_argument("rational out of range: '" + std::string(whole) + "'");

    wide num = 0;
    for (char c : digits)
        num = num * 10 + (c - '0');
    wide den = 1;
    for (; exponent > 0; --exponent)
        num *= 10;
    for (; exponent < 0; ++exponent)
        den *= 10;
    return make(negative ? -num : num, den);
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return make(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const wide lhs = wide(a.num_) * b.den_;
    const wide rhs = wide(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace smh
