#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crcert/intervals.hpp"
#include "crcert/poly.hpp"
#include "crcert/sturm.hpp"

namespace crcert {

enum class SignClaim { strictly_positive, nonnegative, strictly_negative, nonpositive };

std::string to_string(SignClaim c);
/// Whether a value of sign `s` (-1, 0, 1) is allowed by the claim.
bool satisfies(SignClaim c, int s);

/// Where a claim breaks: a rational point, or for a strict claim an irrational
/// root pinned by its bracket.
struct Refutation {
    std::optional<Rational> point;
    std::optional<RootBracket> root;
    std::string reason;
};

/// Checkable evidence that `poly` keeps the sign `claim` on `interval`.
///
/// Between consecutive isolated roots of the squarefree part the sign is
/// constant, so one nonzero sample per gap plus the endpoint values settle the
/// claim. Strict claims additionally need the root list to be empty.
struct SignCertificate {
    UniPoly poly;
    ClosedRatInterval interval;
    SignClaim claim = SignClaim::strictly_positive;
    int interior_root_count = 0;
    Rational lo_value;
    Rational hi_value;  // the leading coefficient when the interval is unbounded
    UniPoly squarefree;
    std::vector<RootBracket> root_brackets;
    std::vector<Rational> gap_samples;
    std::optional<Refutation> refutation;

    bool valid() const { return !refutation.has_value(); }
};

/// Never throws on a false claim; the result then carries a refutation.
/// Throws DomainError for a degenerate interval or a zero polynomial.
SignCertificate certify_sign(const UniPoly& p, const ClosedRatInterval& interval, SignClaim claim);

/// Re-derives everything the certificate asserts from scratch. True iff the
/// certificate is well formed and proves its claim.
bool verify(const SignCertificate& cert);

}  // namespace crcert
