#include "crcert/certifier.hpp"

#include <algorithm>
#include <future>

#include "crcert/errors.hpp"
#include "crcert/theorems.hpp"

namespace crcert {

namespace {

const Rational kWindowLo(1228, 1000);
const Rational kWindowHi(1768, 1000);

// The window is only sound once the middle-order quartics are certified. The
// check is pure, so one run per process suffices.
void require_middle_orders_certified() {
    static const bool certified = verify_theorem4().overall;
    if (!certified) throw Error("middle-order window used but its certification failed");
}

IntInterval intersect(const IntInterval& a, const IntInterval& b) {
    if (a.empty() || b.empty()) return {};
    const std::int64_t lo = std::max(a.lo(), b.lo());
    const auto ah = a.hi();
    const auto bh = b.hi();
    if (!ah && !bh) return IntInterval::at_least(lo);
    const std::int64_t hi = !ah ? *bh : (!bh ? *ah : std::min(*ah, *bh));
    return IntInterval::closed(lo, hi);
}

}  // namespace

IntInterval middle_order_window(std::int64_t r) {
    const Rational rr(r);
    return IntInterval::closed(Rational(kWindowLo * rr).ceil().get_si(), Rational(kWindowHi * rr).floor().get_si());
}

Exclusion exclude(std::int64_t r, const BoundSpec& spec) {
    Exclusion ex;
    ex.spec = spec;
    ex.assumption = assumption_of(spec);
    if (std::holds_alternative<SubdivisionWindow>(spec)) {
        if (r < 5) throw DomainError("subdivision window needs r >= 5, got r = " + std::to_string(r));
        ex.interval = IntInterval::closed(r, r + 4);
        ex.bracket = ex.interval;
        return ex;
    }
    if (std::holds_alternative<MiddleOrderWindow>(spec)) {
        if (r < 13) throw DomainError("middle-order window needs r >= 13, got r = " + std::to_string(r));
        require_middle_orders_certified();
        ex.interval = middle_order_window(r);
        ex.bracket = ex.interval;
        return ex;
    }

    if (r < 15) throw DomainError("sampling and probabilistic bounds are applied for r >= 15, got r = " + std::to_string(r));
    const EdgeBound edge = std::holds_alternative<SamplingBound>(spec) ? std::get<SamplingBound>(spec).edge
                                                                       : std::get<ProbBound>(spec).edge;
    IntInterval bracket = intersect(IntInterval::closed(r, 10 * r), edge_bound_domain(r, edge));
    if (const auto* s = std::get_if<SamplingBound>(&spec)) bracket = intersect(bracket, IntInterval::at_least(s->k));
    ex.bracket = bracket;
    // Unbounded answers only make sense when the bound itself holds for every larger n.
    const bool open_domain = !edge_bound_domain(r, edge).hi().has_value();
    const FeasibleSet fs = integer_feasible_set(bound_poly_in_n(r, spec), bracket, open_domain);
    ex.interval = fs.interval;
    ex.witnesses = fs.witnesses;
    return ex;
}

IntInterval excluded_orders(std::int64_t r, const BoundSpec& spec) { return exclude(r, spec).interval; }

std::vector<BoundSpec> table_columns(const Rational& p) {
    return {
        SubdivisionWindow{},
        SamplingBound{12, EdgeBound::gallai},
        MiddleOrderWindow{},
        SamplingBound{22, EdgeBound::gallai},
        SamplingBound{24, EdgeBound::kostochka_stiebitz},
        ProbBound{p, EdgeBound::kostochka_stiebitz},
    };
}

TableRow build_table_row(std::int64_t r, const Rational& p) {
    if (r < 15) throw DomainError("table rows start at r = 15, got r = " + std::to_string(r));
    const auto columns = table_columns(p);
    std::vector<IntInterval> cells;
    std::vector<Assumption> tags;
    for (const auto& spec : columns) {
        const Exclusion ex = exclude(r, spec);
        cells.push_back(ex.interval);
        tags.push_back(ex.assumption);
    }
    TableRow row;
    row.r = r;
    row.cr_upper = zarankiewicz_upper(r).to_int64();
    row.lemC = cells[0];
    row.ineq2 = cells[1];
    row.thm4 = cells[2];
    row.ineq3 = cells[3];
    row.ineq4 = cells[4];
    row.lem6 = cells[5];
    row.p = p;
    row.possible_n = coverage_check(r, cells, tags).gaps;
    return row;
}

std::vector<TableRow> build_table(std::int64_t rmin, std::int64_t rmax, const std::optional<Rational>& p_override) {
    if (rmax < rmin) throw DomainError("empty row range " + std::to_string(rmin) + ".." + std::to_string(rmax));
    std::vector<std::future<TableRow>> pending;
    for (std::int64_t r = rmin; r <= rmax; ++r) {
        const Rational p = p_override ? *p_override : default_probability(r);
        pending.push_back(std::async(std::launch::async, [r, p] { return build_table_row(r, p); }));
    }
    std::vector<TableRow> rows;
    rows.reserve(pending.size());
    for (auto& f : pending) rows.push_back(f.get());
    return rows;
}

CoverageResult coverage_check(std::int64_t r, const std::vector<IntInterval>& intervals,
                              const std::vector<Assumption>& assumptions) {
    if (!assumptions.empty() && assumptions.size() != intervals.size()) {
        throw DomainError("coverage check needs one assumption tag per interval");
    }
    CoverageResult out;
    out.r = r;
    out.covered = intervals;
    out.assumptions = assumptions.empty() ? std::vector<Assumption>(intervals.size(), Assumption::unconditional)
                                          : assumptions;
    std::optional<std::int64_t> tail;
    for (const auto& iv : intervals) {
        if (iv.unbounded()) tail = tail ? std::min(*tail, iv.lo()) : iv.lo();
    }
    if (!tail) throw DomainError("coverage check at r = " + std::to_string(r) + " needs an interval unbounded above");
    for (std::int64_t n = r; n < *tail; ++n) {
        const bool hit = std::any_of(intervals.begin(), intervals.end(), [n](const IntInterval& iv) { return iv.contains(n); });
        if (!hit) out.gaps.push_back(n);
    }
    return out;
}

}  // namespace crcert
