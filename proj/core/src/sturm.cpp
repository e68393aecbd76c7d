#include "crcert/sturm.hpp"

#include <algorithm>
#include <optional>

#include "crcert/errors.hpp"

namespace crcert {

namespace {

int sign_variations(const std::vector<UniPoly>& chain, const std::optional<Rational>& x) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = x ? q.eval(*x).sign() : q.sign_at_pos_infinity();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

class Isolator {
public:
    explicit Isolator(const UniPoly& sqf) : p_(sqf), chain_(sturm_sequence(sqf)) {}

    int count(const Rational& a, const Rational& b) const {
        return sign_variations(chain_, a) - sign_variations(chain_, b);
    }

    // Roots in (a, b], appended in ascending order.
    void isolate(const Rational& a, const Rational& b, std::vector<RootBracket>& out) const {
        const int c = count(a, b);
        if (c == 0) return;
        if (c == 1) {
            if (p_.eval(b).is_zero()) {
                out.push_back({b, b});
            } else {
                out.push_back(tighten_left(a, b));
            }
            return;
        }
        const Rational m = (a + b) / Rational(2);
        isolate(a, m, out);
        isolate(m, b, out);
    }

    // One root in (a, b), b not a root; moves a off any root it may sit on.
    RootBracket tighten_left(Rational a, Rational b) const {
        while (p_.eval(a).is_zero()) {
            const Rational m = (a + b) / Rational(2);
            if (p_.eval(m).is_zero()) return {m, m};
            if (count(m, b) == 1) {
                a = m;
            } else {
                b = m;
            }
        }
        return {a, b};
    }

    const UniPoly& poly() const { return p_; }

private:
    UniPoly p_;
    std::vector<UniPoly> chain_;
};

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    UniPoly next = p.derivative();
    while (!next.is_zero()) {
        chain.push_back(next);
        // Positive rescaling keeps the sign pattern and the coefficients small.
        next = (-divmod(chain[chain.size() - 2], chain.back()).remainder).primitive();
    }
    return chain;
}

Rational cauchy_bound(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
    const Rational lead = p.leading().abs();
    Rational worst;
    for (int i = 0; i < p.degree(); ++i) {
        const Rational r = p.coeff(static_cast<std::size_t>(i)).abs() / lead;
        if (r > worst) worst = r;
    }
    return worst + Rational(1);
}

RootCount sturm_root_count(const UniPoly& p, const ClosedRatInterval& interval) {
    if (p.is_zero()) throw DomainError("root count of the zero polynomial is undefined");
    const UniPoly sqf = squarefree_part(p);
    const auto chain = sturm_sequence(sqf);
    RootCount rc;
    rc.lo_is_root = sqf.eval(interval.lo).is_zero();
    rc.hi_is_root = interval.hi && sqf.eval(*interval.hi).is_zero();
    rc.count = sign_variations(chain, interval.lo) - sign_variations(chain, interval.hi);
    return rc;
}

namespace {

// A rational root of a primitive integer polynomial has a denominator dividing
// the leading coefficient L. Below width 1/L an open bracket holds at most one
// multiple of 1/L, which is then the only candidate.
std::optional<Rational> rational_root_in(const UniPoly& sqf, const RootBracket& open) {
    BigInt lead = sqf.primitive().leading().numerator();
    if (lead < 0) lead = -lead;
    const Rational grid(BigInt(1), lead);
    const RootBracket b = refine_root(sqf, open, grid / Rational(2));
    if (b.exact()) return b.lo;
    const Rational candidate(Rational(b.hi * Rational(lead)).floor(), lead);
    if (candidate > b.lo && sqf.eval(candidate).is_zero()) return candidate;
    return std::nullopt;
}

}  // namespace

std::vector<RootBracket> isolate_roots(const UniPoly& p, const ClosedRatInterval& interval) {
    if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
    std::vector<RootBracket> out;
    if (p.degree() == 0) return out;
    const Isolator iso(squarefree_part(p));
    const Rational& lo = interval.lo;
    if (iso.poly().eval(lo).is_zero()) out.push_back({lo, lo});
    Rational hi = interval.hi ? *interval.hi : std::max(lo + Rational(1), cauchy_bound(p));
    iso.isolate(lo, hi, out);
    for (auto& b : out) {
        if (b.exact()) continue;
        if (auto x = rational_root_in(iso.poly(), b)) b = {*x, *x};
    }
    return out;
}

RootBracket refine_root(const UniPoly& p, RootBracket bracket, const Rational& width) {
    if (bracket.exact()) return bracket;
    const UniPoly sqf = squarefree_part(p);
    const int sign_lo = sqf.eval(bracket.lo).sign();
    while (bracket.hi - bracket.lo > width) {
        const Rational m = (bracket.lo + bracket.hi) / Rational(2);
        const int s = sqf.eval(m).sign();
        if (s == 0) return {m, m};
        // A simple root is a sign change of the squarefree part.
        if (s == sign_lo) {
            bracket.lo = m;
        } else {
            bracket.hi = m;
        }
    }
    return bracket;
}

}  // namespace crcert
