#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace crcert {

using BigInt = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "a", "a/b", or a decimal literal such as "-27.48".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    BigInt floor() const;
    BigInt ceil() const;
    Rational abs() const;
    Rational pow(unsigned e) const;

    /// Fits the value into int64; throws DomainError if it is not an integer in range.
    std::int64_t to_int64() const;

    /// Lossy, for human-facing output only.
    double to_double() const { return value_.get_d(); }

    /// "n" or "n/d".
    std::string to_string() const;

    /// Decimal rendering with `digits` significant digits, rounded to nearest.
    std::string to_decimal(int digits = 6) const;

    /// Exact fixed-point rendering with `places` decimals; rounds half away from zero.
    std::string to_fixed(int places) const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

/// Parses a decimal literal (optional sign, digits, optional fraction) into an exact fraction.
Rational rational_from_decimal(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace crcert
