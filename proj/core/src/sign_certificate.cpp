#include "crcert/sign_certificate.hpp"

#include "crcert/errors.hpp"

namespace crcert {

std::string to_string(SignClaim c) {
    switch (c) {
        case SignClaim::strictly_positive: return "strictly-positive";
        case SignClaim::nonnegative: return "nonnegative";
        case SignClaim::strictly_negative: return "strictly-negative";
        case SignClaim::nonpositive: return "nonpositive";
    }
    return "?";
}

bool satisfies(SignClaim c, int s) {
    switch (c) {
        case SignClaim::strictly_positive: return s > 0;
        case SignClaim::nonnegative: return s >= 0;
        case SignClaim::strictly_negative: return s < 0;
        case SignClaim::nonpositive: return s <= 0;
    }
    return false;
}

namespace {

bool is_strict(SignClaim c) { return c == SignClaim::strictly_positive || c == SignClaim::strictly_negative; }

using Gap = std::pair<Rational, std::optional<Rational>>;

// Maximal root-free stretches of the interval, as closed ranges whose ends may
// be roots. A root sitting exactly on an end of the interval leaves no stretch
// on that side.
std::vector<Gap> root_free_gaps(const ClosedRatInterval& interval, const std::vector<RootBracket>& roots) {
    std::vector<Gap> gaps;
    Rational left = interval.lo;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const RootBracket& b = roots[i];
        if (!(i == 0 && b.exact() && b.lo == interval.lo)) gaps.emplace_back(left, b.lo);
        left = b.hi;
    }
    const bool root_at_hi = interval.hi && !roots.empty() && roots.back().exact() && roots.back().lo == *interval.hi;
    if (!root_at_hi) gaps.emplace_back(left, interval.hi);
    return gaps;
}

Rational sample_in(const UniPoly& p, const Gap& g) {
    if (!g.second) return g.first + Rational(1);
    if (!p.eval(g.first).is_zero()) return g.first;
    if (!p.eval(*g.second).is_zero()) return *g.second;
    return (g.first + *g.second) / Rational(2);
}

}  // namespace

SignCertificate certify_sign(const UniPoly& p, const ClosedRatInterval& interval, SignClaim claim) {
    if (p.is_zero()) throw DomainError("sign certificate for the zero polynomial");
    if (interval.degenerate()) throw DomainError("sign certificate needs lo < hi, got " + interval.to_string());

    SignCertificate cert;
    cert.poly = p;
    cert.interval = interval;
    cert.claim = claim;
    cert.squarefree = squarefree_part(p).monic();
    cert.root_brackets = isolate_roots(cert.squarefree, interval);
    for (const auto& b : cert.root_brackets) {
        const bool at_lo = b.exact() && b.lo == interval.lo;
        const bool at_hi = b.exact() && interval.hi && b.lo == *interval.hi;
        if (!at_lo && !at_hi) ++cert.interior_root_count;
    }
    cert.lo_value = p.eval(interval.lo);
    cert.hi_value = interval.hi ? p.eval(*interval.hi) : p.leading();
    for (const auto& g : root_free_gaps(interval, cert.root_brackets)) cert.gap_samples.push_back(sample_in(p, g));

    auto refute = [&](Refutation r) {
        if (!cert.refutation) cert.refutation = std::move(r);
    };
    if (!satisfies(claim, cert.lo_value.sign())) {
        refute({interval.lo, std::nullopt, "claim fails at the lower endpoint"});
    }
    if (interval.hi && !satisfies(claim, cert.hi_value.sign())) {
        refute({*interval.hi, std::nullopt, "claim fails at the upper endpoint"});
    }
    for (const auto& s : cert.gap_samples) {
        if (!satisfies(claim, p.eval(s).sign())) refute({s, std::nullopt, "claim fails between roots"});
    }
    if (is_strict(claim) && !cert.root_brackets.empty()) {
        const RootBracket& b = cert.root_brackets.front();
        if (b.exact()) {
            refute({b.lo, std::nullopt, "polynomial vanishes inside the interval"});
        } else {
            refute({std::nullopt, b, "polynomial vanishes at an irrational point inside the interval"});
        }
    }
    return cert;
}

bool verify(const SignCertificate& cert) {
    const UniPoly& p = cert.poly;
    const ClosedRatInterval& I = cert.interval;
    if (p.is_zero() || I.degenerate()) return false;

    // Squarefree witness: divides p and has no repeated roots itself.
    const UniPoly& s = cert.squarefree;
    if (s.degree() < 0 || !divmod(p, s).remainder.is_zero()) return false;
    if (s.degree() > 0 && gcd(s, s.derivative()).degree() != 0) return false;
    if (s.degree() != squarefree_part(p).degree()) return false;

    if (p.eval(I.lo) != cert.lo_value) return false;
    if ((I.hi ? p.eval(*I.hi) : p.leading()) != cert.hi_value) return false;
    if (!satisfies(cert.claim, cert.lo_value.sign())) return false;
    if (!satisfies(cert.claim, cert.hi_value.sign())) return false;
    if (!I.hi && cert.hi_value.is_zero()) return false;

    // Brackets: sorted, disjoint, inside I, one root each, and all roots accounted for.
    const auto& roots = cert.root_brackets;
    if (is_strict(cert.claim) && !roots.empty()) return false;
    const auto total = sturm_root_count(s, I);
    if (static_cast<int>(roots.size()) != total.count + (total.lo_is_root ? 1 : 0)) return false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const RootBracket& b = roots[i];
        if (b.lo < I.lo || (I.hi && b.hi > *I.hi) || b.hi < b.lo) return false;
        if (i > 0 && !(roots[i - 1].hi <= b.lo && (roots[i - 1].hi < b.lo || !b.exact()))) return false;
        if (b.exact()) {
            if (!s.eval(b.lo).is_zero()) return false;
        } else {
            if (s.eval(b.lo).is_zero() || s.eval(b.hi).is_zero()) return false;
            if (sturm_root_count(s, ClosedRatInterval(b.lo, b.hi)).count != 1) return false;
        }
    }

    // Every root-free stretch needs a sample of the claimed sign, and that
    // sample must be nonzero, so it sits strictly between the bounding roots.
    const auto gaps = root_free_gaps(I, roots);
    if (cert.gap_samples.size() != gaps.size()) return false;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const Rational& x = cert.gap_samples[i];
        if (x < gaps[i].first) return false;
        if (gaps[i].second && x > *gaps[i].second) return false;
        const int sg = p.eval(x).sign();
        if (sg == 0) return false;
        if (!satisfies(cert.claim, sg)) return false;
    }
    return true;
}

}  // namespace crcert
