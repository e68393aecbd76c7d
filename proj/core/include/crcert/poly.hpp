#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crcert/rational.hpp"

namespace crcert {

enum class Var { n, alpha, r };

std::string to_string(Var v);

/// Dense univariate polynomial with exact coefficients, tagged with its variable.
/// Coefficients are stored by ascending degree and never carry trailing zeros.
class UniPoly {
public:
    explicit UniPoly(Var v = Var::alpha) : var_(v) {}
    UniPoly(Var v, std::vector<Rational> coeffs);

    static UniPoly constant(Var v, Rational c);
    static UniPoly monomial(Var v, Rational c, std::size_t degree);
    static UniPoly variable(Var v) { return monomial(v, Rational(1), 1); }
    /// a*x + b
    static UniPoly linear(Var v, Rational a, Rational b);

    Var var() const { return var_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(std::size_t i) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;
    /// Sign of p(x) as x -> +oo (0 for the zero polynomial).
    int sign_at_pos_infinity() const;

    UniPoly derivative() const;
    UniPoly monic() const;
    /// Divides every coefficient by a positive constant so the content is 1; keeps signs.
    UniPoly primitive() const;
    UniPoly pow(unsigned e) const;
    /// p(x + shift)
    UniPoly taylor_shift(const Rational& shift) const;
    UniPoly with_var(Var v) const { return UniPoly(v, coeffs_); }

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;

    /// Two zero polynomials compare equal regardless of tag.
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    std::string to_string() const;

private:
    void trim();
    void require_same_var(const UniPoly& o, const char* op) const;

    Var var_;
    std::vector<Rational> coeffs_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'): same distinct roots, all simple.
UniPoly squarefree_part(const UniPoly& p);

/// Sparse polynomial in (r, alpha). Keys are (degree in r, degree in alpha).
class BiPoly {
public:
    using Key = std::pair<unsigned, unsigned>;

    BiPoly() = default;
    explicit BiPoly(Rational c);

    static BiPoly r();
    static BiPoly alpha();
    static BiPoly term(Rational c, unsigned r_degree, unsigned alpha_degree);
    /// Embeds a polynomial in alpha (or r) as a BiPoly.
    static BiPoly from(const UniPoly& p);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(unsigned r_degree, unsigned alpha_degree) const;
    int degree_r() const;
    int degree_alpha() const;

    Rational eval(const Rational& r_value, const Rational& alpha_value) const;
    /// Fixes r, leaving a polynomial in alpha.
    UniPoly at_r(const Rational& r_value) const;
    /// Fixes alpha, leaving a polynomial in r.
    UniPoly at_alpha(const Rational& alpha_value) const;
    /// Substitutes r := r0 + s; the result keeps s in the r slot.
    BiPoly shift_r(const Rational& r0) const;
    BiPoly pow(unsigned e) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
    BiPoly operator-() const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    std::string to_string() const;

private:
    void add_term(const Key& k, const Rational& c);

    std::map<Key, Rational> terms_;
};

/// n := alpha * r, mapping a polynomial in n to one in (r, alpha).
BiPoly substitute_n_as_alpha_r(const UniPoly& p_in_n);

/// Coefficients c_0(alpha) .. c_d(alpha) with p = sum r^i c_i(alpha).
std::vector<UniPoly> collect_by_degree(const BiPoly& p);

/// Inverse of collect_by_degree.
BiPoly assemble_by_degree(std::span<const UniPoly> groups);

}  // namespace crcert
