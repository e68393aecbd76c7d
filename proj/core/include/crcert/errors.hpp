#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crcert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (decimal literals, bound specs, JSON documents).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition on a formula's arguments was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two polynomial operands carry different variable tags.
class VariableMismatch : public Error {
public:
    using Error::Error;
};

/// The integer feasible set of a polynomial inequality is not one interval.
class ContiguityError : public Error {
public:
    struct Gap {
        std::int64_t first;
        std::int64_t last;
    };

    ContiguityError(const std::string& what, std::vector<Gap> gaps)
        : Error(what), gaps_(std::move(gaps)) {}

    const std::vector<Gap>& gaps() const noexcept { return gaps_; }

private:
    std::vector<Gap> gaps_;
};

}  // namespace crcert
