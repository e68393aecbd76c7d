#pragma once

#include <cstdint>
#include <vector>

#include "crcert/intervals.hpp"
#include "crcert/poly.hpp"

namespace crcert {

/// p evaluated exactly at an integer.
struct SignWitness {
    std::int64_t n;
    Rational value;
    friend bool operator==(const SignWitness&, const SignWitness&) = default;
};

struct FeasibleSet {
    IntInterval interval;
    /// Values at lo-1, lo, hi, hi+1, omitting neighbours outside the bracket.
    std::vector<SignWitness> witnesses;
};

/// The integers n in `bracket` with p(n) >= 0, which must form one run.
///
/// The bracket needs a finite lower end. A run that reaches the upper end of a
/// finite bracket is reported unbounded when `allow_unbounded` is set, p has a
/// positive leading coefficient and no real root lies beyond the bracket.
/// Throws ContiguityError listing the infeasible stretches between runs, and
/// VariableMismatch unless p is a polynomial in n.
FeasibleSet integer_feasible_set(const UniPoly& p, const IntInterval& bracket, bool allow_unbounded = true);

}  // namespace crcert
