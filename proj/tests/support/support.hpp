#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crcert/poly.hpp"
#include "crcert/rational.hpp"

namespace crcert::testing {

inline Rational Q(const char* text) { return Rational::parse(text); }

/// p in x from coefficients listed by ascending degree.
inline UniPoly P(Var v, std::initializer_list<Rational> coeffs) { return UniPoly(v, std::vector<Rational>(coeffs)); }

/// Seeded source for the property suites; identical seeds give identical cases.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    /// num/den with num in [lo*den, hi*den] and den in [1, max_den].
    Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
        const std::int64_t den = integer(1, max_den);
        return Rational(BigInt(integer(lo * den, hi * den)), BigInt(den));
    }

    /// Integer coefficients in [-bound, bound], nonzero leading coefficient.
    std::vector<std::int64_t> int_coeffs(int degree, std::int64_t bound) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1);
        for (auto& x : c) x = integer(-bound, bound);
        while (c.back() == 0) c.back() = integer(-bound, bound);
        return c;
    }

    UniPoly int_poly(Var v, int degree, std::int64_t bound) {
        std::vector<Rational> c;
        for (auto x : int_coeffs(degree, bound)) c.emplace_back(x);
        return UniPoly(v, c);
    }

    BiPoly bipoly(int max_r, int max_alpha, int terms) {
        BiPoly out;
        for (int i = 0; i < terms; ++i) {
            out += BiPoly::term(rational(-50, 50, 12), static_cast<unsigned>(integer(0, max_r)),
                                static_cast<unsigned>(integer(0, max_alpha)));
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace crcert::testing
