#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace smh {

/// Exact rational number with 64-bit numerator and positive denominator, kept
/// in lowest terms. Used for the configuration fields whose comparisons must
/// not be decided by decimal rounding.
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Parses "p/q", integers, and finite decimals ("-0.9", "12.2", "1e6")
    /// exactly. Throws std::invalid_argument on malformed input or overflow.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace smh
