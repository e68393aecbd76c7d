#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "crcert/rational.hpp"

namespace crcert {

/// Closed rational interval [lo, hi]; an absent `hi` means [lo, +oo).
struct ClosedRatInterval {
    Rational lo;
    std::optional<Rational> hi;

    ClosedRatInterval() = default;
    ClosedRatInterval(Rational lo_, Rational hi_);
    static ClosedRatInterval at_least(Rational lo_);

    bool unbounded() const { return !hi.has_value(); }
    bool contains(const Rational& x) const { return x >= lo && (!hi || x <= *hi); }
    bool degenerate() const { return hi && *hi == lo; }

    std::string to_string() const;

    friend bool operator==(const ClosedRatInterval&, const ClosedRatInterval&) = default;
};

/// Contiguous set of integers, possibly unbounded above, possibly empty.
class IntInterval {
public:
    IntInterval() = default;  // empty

    static IntInterval empty_set() { return {}; }
    static IntInterval closed(std::int64_t lo, std::int64_t hi);
    static IntInterval at_least(std::int64_t lo);

    bool empty() const { return empty_; }
    bool unbounded() const { return !empty_ && !hi_.has_value(); }
    std::int64_t lo() const;
    std::optional<std::int64_t> hi() const;
    bool contains(std::int64_t n) const;

    /// "[a,b]", "[a,oo)" or "empty".
    std::string to_string() const;

    /// Inverse of to_string; throws ParseError.
    static IntInterval parse(std::string_view text);

    friend bool operator==(const IntInterval&, const IntInterval&) = default;

private:
    IntInterval(std::int64_t lo, std::optional<std::int64_t> hi) : empty_(false), lo_(lo), hi_(hi) {}

    bool empty_ = true;
    std::int64_t lo_ = 0;
    std::optional<std::int64_t> hi_;
};

}  // namespace crcert
