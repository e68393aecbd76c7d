#pragma once

#include <vector>

#include "crcert/intervals.hpp"
#include "crcert/poly.hpp"

namespace crcert {

/// p, p', then negated remainders until the chain ends.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

struct RootCount {
    int count = 0;  // distinct real roots in (lo, hi]
    bool lo_is_root = false;
    bool hi_is_root = false;
};

/// Counts distinct real roots of p in (lo, hi] (hi may be +oo) using the
/// Sturm chain of p's squarefree part. Throws DomainError for p == 0.
RootCount sturm_root_count(const UniPoly& p, const ClosedRatInterval& interval);

/// Every real root has |x| < cauchy_bound(p).
Rational cauchy_bound(const UniPoly& p);

/// An isolating interval: either an exact rational root (lo == hi) or an
/// open interval (lo, hi) holding exactly one root, with p(lo), p(hi) != 0.
struct RootBracket {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    friend bool operator==(const RootBracket&, const RootBracket&) = default;
};

/// Isolates the distinct real roots of p inside the closed interval, sorted
/// ascending. Brackets are disjoint and lie within the interval; rational
/// roots always come back exact.
std::vector<RootBracket> isolate_roots(const UniPoly& p, const ClosedRatInterval& interval);

/// Shrinks an open bracket by bisection until hi - lo <= width.
RootBracket refine_root(const UniPoly& p, RootBracket bracket, const Rational& width);

}  // namespace crcert
