#include "crcert/intervals.hpp"

#include <charconv>

#include "crcert/errors.hpp"

namespace crcert {

ClosedRatInterval::ClosedRatInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (*hi < lo) throw DomainError("interval [" + lo.to_string() + ", " + hi->to_string() + "] has lo > hi");
}

ClosedRatInterval ClosedRatInterval::at_least(Rational lo_) {
    ClosedRatInterval i;
    i.lo = std::move(lo_);
    return i;
}

std::string ClosedRatInterval::to_string() const {
    return "[" + lo.to_string() + ", " + (hi ? hi->to_string() + "]" : std::string("oo)"));
}

IntInterval IntInterval::closed(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) return {};
    return {lo, hi};
}

IntInterval IntInterval::at_least(std::int64_t lo) { return {lo, std::nullopt}; }

std::int64_t IntInterval::lo() const {
    if (empty_) throw DomainError("lower end of an empty interval");
    return lo_;
}

std::optional<std::int64_t> IntInterval::hi() const {
    if (empty_) throw DomainError("upper end of an empty interval");
    return hi_;
}

bool IntInterval::contains(std::int64_t n) const { return !empty_ && n >= lo_ && (!hi_ || n <= *hi_); }

std::string IntInterval::to_string() const {
    if (empty_) return "empty";
    return "[" + std::to_string(lo_) + "," + (hi_ ? std::to_string(*hi_) + "]" : std::string("oo)"));
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("malformed integer interval '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

IntInterval IntInterval::parse(std::string_view text) {
    if (text == "empty") return {};
    const auto comma = text.find(',');
    if (text.size() < 5 || text.front() != '[' || comma == std::string_view::npos) {
        throw ParseError("malformed integer interval '" + std::string(text) + "'");
    }
    const std::int64_t lo = parse_int(text.substr(1, comma - 1), text);
    const std::string_view rest = text.substr(comma + 1);
    if (rest == "oo)") return at_least(lo);
    if (rest.back() != ']') throw ParseError("malformed integer interval '" + std::string(text) + "'");
    const std::int64_t hi = parse_int(rest.substr(0, rest.size() - 1), text);
    if (hi < lo) throw ParseError("integer interval '" + std::string(text) + "' has lo > hi");
    return closed(lo, hi);
}

}  // namespace crcert
