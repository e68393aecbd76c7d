#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crcert/certifier.hpp"
#include "crcert/intervals.hpp"
#include "crcert/theorems.hpp"

namespace crcert {

enum class OutputFormat { csv, json, text };

OutputFormat parse_output_format(std::string_view text);

/// Table rows as csv (header plus one line per row), canonical json
/// (schema table-v1) or a fixed-width text table. Throws DomainError for no rows.
std::string emit_table(const std::vector<TableRow>& rows, OutputFormat fmt);

/// Inverse of emit_table(..., json). Throws ParseError naming the bad field.
std::vector<TableRow> parse_table_json(std::string_view text);

/// Canonical json uses schema report-v1.
std::string emit_report(const Report& report, OutputFormat fmt);
Report parse_report_json(std::string_view text);

/// "0.75" when two decimals are exact, otherwise "n/d".
std::string display_probability(const Rational& p);

/// Exact samples of a target over an alpha grid, one series per row.
struct PlotGrid {
    std::string target;  // f-of-alpha-k | p19-parts | p15-parts | p12-parts
    ClosedRatInterval alpha_range;
    Rational step;
    /// Second axis; for f-of-alpha-k the k range, for the parts targets the
    /// part index range [0, 4].
    ClosedRatInterval series_range;
    std::vector<std::string> series;
    std::vector<Rational> alphas;
    std::vector<std::vector<Rational>> samples;  // samples[series][alpha index]

    friend bool operator==(const PlotGrid&, const PlotGrid&) = default;
};

const std::vector<std::string>& plot_targets();

/// Samples `target` on alpha_range with the given step; defaults follow the
/// target (alpha in [1.1, 2.0] for f-of-alpha-k with k = 10..24, and the
/// plotting window of each middle-order polynomial for the parts). Throws
/// DomainError for step <= 0 or an unknown target.
PlotGrid make_plot_grid(const std::string& target, const std::optional<ClosedRatInterval>& alpha_range = std::nullopt,
                        const std::optional<Rational>& step = std::nullopt);

/// Canonical json uses schema grid-v1; csv has one column per series.
std::string emit_plot_grid(const PlotGrid& grid, OutputFormat fmt);
PlotGrid parse_plot_grid_json(std::string_view text);

}  // namespace crcert
