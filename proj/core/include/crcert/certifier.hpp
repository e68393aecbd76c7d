#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crcert/bounds.hpp"
#include "crcert/feasible.hpp"
#include "crcert/intervals.hpp"

namespace crcert {

/// Orders n excluded by one bound for one r, with the evidence behind it.
struct Exclusion {
    BoundSpec spec;
    IntInterval interval;
    Assumption assumption = Assumption::unconditional;
    /// Search range actually used: [r, 10r] clipped to where the bound is valid.
    IntInterval bracket;
    /// Exact bound-minus-target values around the interval ends (empty for windows).
    std::vector<SignWitness> witnesses;
};

/// [ceil(1.228r), floor(1.768r)]
IntInterval middle_order_window(std::int64_t r);

Exclusion exclude(std::int64_t r, const BoundSpec& spec);

IntInterval excluded_orders(std::int64_t r, const BoundSpec& spec);

struct TableRow {
    std::int64_t r = 0;
    std::int64_t cr_upper = 0;
    IntInterval lemC;
    IntInterval ineq2;
    IntInterval thm4;
    IntInterval ineq3;
    IntInterval ineq4;
    IntInterval lem6;
    Rational p;
    std::vector<std::int64_t> possible_n;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// The bounds behind the six interval columns, in column order.
std::vector<BoundSpec> table_columns(const Rational& p);

TableRow build_table_row(std::int64_t r, const Rational& p);

/// Rows rmin..rmax in order, built concurrently. Without an override each row
/// uses default_probability(r).
std::vector<TableRow> build_table(std::int64_t rmin, std::int64_t rmax,
                                  const std::optional<Rational>& p_override = std::nullopt);

struct CoverageResult {
    std::int64_t r = 0;
    std::vector<IntInterval> covered;
    std::vector<Assumption> assumptions;  // parallel to `covered`
    std::vector<std::int64_t> gaps;       // orders >= r in no interval
};

/// Throws DomainError unless some interval is unbounded above, since otherwise
/// the uncovered set is infinite.
CoverageResult coverage_check(std::int64_t r, const std::vector<IntInterval>& intervals,
                              const std::vector<Assumption>& assumptions = {});

}  // namespace crcert
