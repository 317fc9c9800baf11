#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace conewb {

using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator, so structural equality is numeric equality.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) // NOLINT(google-explicit-constructor)
        : value_(static_cast<long>(v)) {}

    Rational(const Integer& v) // NOLINT(google-explicit-constructor)
        : value_(v) {}

    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "p/q", "-p/q" (optionally surrounded by whitespace).
    /// Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// "p/q", or "p" when the denominator is one.
    [[nodiscard]] std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_;
};

Rational abs(const Rational& r);

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

} // namespace conewb

template <>
struct std::hash<conewb::Rational> {
    std::size_t operator()(const conewb::Rational& r) const noexcept;
};
