#include "crcert/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "crcert/errors.hpp"

namespace crcert {

namespace {

BigInt pow10(unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational rational_from_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);

    // "5", "5.", ".5" and "5.25" are accepted; "." and "" are not.
    const bool int_ok = int_part.empty() || all_digits(int_part);
    const bool frac_ok = frac_part.empty() || all_digits(frac_part);
    if (!int_ok || !frac_ok || (int_part.empty() && frac_part.empty())) {
        throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    }

    std::string digits(int_part);
    digits += frac_part;
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    if (negative) num = -num;
    return Rational(num, pow10(static_cast<unsigned>(frac_part.size())));
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return rational_from_decimal(text);

    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
        num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
        throw ParseError("malformed fraction '" + std::string(text) + "'");
    }
    std::string num_str(num);
    if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
    const BigInt d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(BigInt(num_str, 10), d);
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

BigInt Rational::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(unsigned e) const {
    Rational result(1);
    Rational base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw DomainError("value " + to_string() + " is not an integer");
    const BigInt& n = value_.get_num();
    if (!n.fits_slong_p()) throw DomainError("integer " + to_string() + " does not fit in 64 bits");
    return n.get_si();
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_fixed(int places) const {
    const BigInt scale = pow10(static_cast<unsigned>(places));
    const BigInt& num = value_.get_num();
    const BigInt& den = value_.get_den();
    BigInt magnitude;
    mpz_abs(magnitude.get_mpz_t(), num.get_mpz_t());
    BigInt scaled = magnitude * scale * 2 + den;  // round half away from zero
    BigInt denom2 = den * 2;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), denom2.get_mpz_t());

    std::string digits = q.get_str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places)) {
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    const bool negative = num < 0 && q != 0;
    return negative ? "-" + digits : digits;
}

std::string Rational::to_decimal(int digits) const {
    if (is_zero()) return "0";
    // Find the decimal exponent so that `digits` significant figures fit.
    const Rational a = abs();
    int exponent = 0;  // a in [10^exponent, 10^(exponent+1))
    Rational probe = a;
    while (probe >= Rational(10)) {
        probe /= 10;
        ++exponent;
    }
    while (probe < Rational(1)) {
        probe *= 10;
        --exponent;
    }
    const int places = digits - 1 - exponent;
    if (places >= 0) return to_fixed(places);
    // Large magnitudes: round to an integer multiple of 10^(-places).
    const Rational unit = Rational(pow10(static_cast<unsigned>(-places)));
    return (*this / unit).to_fixed(0) + std::string(static_cast<std::size_t>(-places), '0');
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.value_ = -r.value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace crcert
