#include "crcert/poly.hpp"

#include <algorithm>
#include <sstream>

#include "crcert/errors.hpp"

namespace crcert {

std::string to_string(Var v) {
    switch (v) {
        case Var::n: return "n";
        case Var::alpha: return "alpha";
        case Var::r: return "r";
    }
    return "?";
}

namespace {

// Appends "c*x^d" to a sum being rendered; `first` tracks whether a sign prefix is needed.
void render_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& monomial) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    first = false;
    if (monomial.empty()) {
        os << mag;
    } else if (mag == Rational(1)) {
        os << monomial;
    } else {
        os << mag << "*" << monomial;
    }
}

std::string power(const std::string& name, unsigned d) {
    if (d == 0) return {};
    if (d == 1) return name;
    return name + "^" + std::to_string(d);
}

Rational binomial(unsigned n, unsigned k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace

UniPoly::UniPoly(Var v, std::vector<Rational> coeffs) : var_(v), coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(Var v, Rational c) { return UniPoly(v, {std::move(c)}); }

UniPoly UniPoly::monomial(Var v, Rational c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = std::move(c);
    return UniPoly(v, std::move(coeffs));
}

UniPoly UniPoly::linear(Var v, Rational a, Rational b) { return UniPoly(v, {std::move(b), std::move(a)}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void UniPoly::require_same_var(const UniPoly& o, const char* op) const {
    if (var_ != o.var_) {
        throw VariableMismatch(std::string("cannot ") + op + " polynomials in " + crcert::to_string(var_) +
                               " and " + crcert::to_string(o.var_));
    }
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int UniPoly::sign_at_pos_infinity() const { return leading().sign(); }

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly(var_);
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly out = *this;
    out *= Rational(1) / leading();
    return out;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    // content = gcd(numerators) / lcm(denominators); dividing by it keeps the sign pattern.
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        BigInt n = c.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        BigInt d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    UniPoly out = *this;
    out *= Rational(den_lcm, num_gcd);
    return out;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = constant(var_, Rational(1));
    UniPoly base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

UniPoly UniPoly::taylor_shift(const Rational& shift) const {
    // Horner in the shifted variable: ((a_d)(x+s) + a_{d-1})(x+s) + ...
    const UniPoly step = linear(var_, Rational(1), shift);
    UniPoly acc(var_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= step;
        acc += constant(var_, *it);
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    require_same_var(o, "add");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    require_same_var(o, "subtract");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    require_same_var(o, "multiply");
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const std::string name = crcert::to_string(var_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        render_term(os, first, coeffs_[i], power(name, static_cast<unsigned>(i)));
    }
    return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.var() != b.var() && !a.is_zero()) {
        throw VariableMismatch("cannot divide polynomials in " + to_string(a.var()) + " and " + to_string(b.var()));
    }
    const Var v = b.var();
    const int db = b.degree();
    std::vector<Rational> rem = a.coefficients();
    if (a.degree() < db) return {UniPoly(v), UniPoly(v, rem)};

    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead = b.leading();
    const auto& bc = b.coefficients();
    for (int i = a.degree(); i >= db; --i) {
        const Rational f = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - db)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(v, std::move(quot)), UniPoly(v, std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly rem = divmod(x, y).remainder;
        x = std::move(y);
        y = rem.primitive();
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p;
    const UniPoly g = gcd(p, p.derivative());
    return divmod(p, g).quotient;
}

// ---------------------------------------------------------------------------

BiPoly::BiPoly(Rational c) { add_term({0, 0}, c); }

BiPoly BiPoly::r() { return term(Rational(1), 1, 0); }

BiPoly BiPoly::alpha() { return term(Rational(1), 0, 1); }

BiPoly BiPoly::term(Rational c, unsigned r_degree, unsigned alpha_degree) {
    BiPoly p;
    p.add_term({r_degree, alpha_degree}, c);
    return p;
}

BiPoly BiPoly::from(const UniPoly& p) {
    if (p.var() == Var::n) throw VariableMismatch("a polynomial in n needs an explicit substitution into (r, alpha)");
    BiPoly out;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto d = static_cast<unsigned>(i);
        out.add_term(p.var() == Var::r ? Key{d, 0} : Key{0, d}, c[i]);
    }
    return out;
}

void BiPoly::add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational BiPoly::coeff(unsigned r_degree, unsigned alpha_degree) const {
    auto it = terms_.find({r_degree, alpha_degree});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_r() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.first));
    return d;
}

int BiPoly::degree_alpha() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.second));
    return d;
}

Rational BiPoly::eval(const Rational& r_value, const Rational& alpha_value) const {
    Rational acc;
    for (const auto& [k, c] : terms_) acc += c * r_value.pow(k.first) * alpha_value.pow(k.second);
    return acc;
}

UniPoly BiPoly::at_r(const Rational& r_value) const {
    UniPoly out(Var::alpha);
    for (const auto& [k, c] : terms_) out += UniPoly::monomial(Var::alpha, c * r_value.pow(k.first), k.second);
    return out;
}

UniPoly BiPoly::at_alpha(const Rational& alpha_value) const {
    UniPoly out(Var::r);
    for (const auto& [k, c] : terms_) out += UniPoly::monomial(Var::r, c * alpha_value.pow(k.second), k.first);
    return out;
}

BiPoly BiPoly::shift_r(const Rational& r0) const {
    BiPoly out;
    for (const auto& [k, c] : terms_) {
        // (s + r0)^i = sum_j C(i, j) s^j r0^(i-j)
        for (unsigned j = 0; j <= k.first; ++j) {
            out.add_term({j, k.second}, c * binomial(k.first, j) * r0.pow(k.first - j));
        }
    }
    return out;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly result(Rational(1));
    BiPoly base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    BiPoly out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
    terms_ = std::move(out.terms_);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono = power("r", it->first.first);
        const std::string a = power("alpha", it->first.second);
        if (!a.empty()) mono = mono.empty() ? a : mono + "*" + a;
        render_term(os, first, it->second, mono);
    }
    return os.str();
}

BiPoly substitute_n_as_alpha_r(const UniPoly& p_in_n) {
    if (p_in_n.var() != Var::n && !p_in_n.is_zero()) {
        throw VariableMismatch("n := alpha*r needs a polynomial in n, got one in " + to_string(p_in_n.var()));
    }
    BiPoly out;
    const auto& c = p_in_n.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto d = static_cast<unsigned>(i);
        out += BiPoly::term(c[i], d, d);
    }
    return out;
}

std::vector<UniPoly> collect_by_degree(const BiPoly& p) {
    const int d = p.degree_r();
    std::vector<UniPoly> groups(static_cast<std::size_t>(std::max(d, 0) + 1), UniPoly(Var::alpha));
    for (const auto& [k, c] : p.terms()) groups[k.first] += UniPoly::monomial(Var::alpha, c, k.second);
    return groups;
}

BiPoly assemble_by_degree(std::span<const UniPoly> groups) {
    BiPoly out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (groups[i].var() != Var::alpha && !groups[i].is_zero()) {
            throw VariableMismatch("collected groups must be polynomials in alpha");
        }
        for (std::size_t j = 0; j < groups[i].coefficients().size(); ++j) {
            out += BiPoly::term(groups[i].coefficients()[j], static_cast<unsigned>(i), static_cast<unsigned>(j));
        }
    }
    return out;
}

}  // namespace crcert
