#include "crcert/feasible.hpp"

#include <algorithm>
#include <set>

#include "crcert/errors.hpp"
#include "crcert/sturm.hpp"

namespace crcert {

namespace {

std::int64_t to_i64(const BigInt& v) { return Rational(v).to_int64(); }

// Narrows an isolating bracket until it contains no integer, unless it hits
// an integer root. Afterwards floor(lo) and floor(lo) + 1 enclose the root.
RootBracket unit_bracket(const UniPoly& p, RootBracket b) {
    b = refine_root(p, b, Rational(1));
    while (!b.exact()) {
        const Rational k(b.lo.floor() + 1);
        if (!(k < b.hi)) break;
        const int s = p.eval(k).sign();
        if (s == 0) return {k, k};
        if (s == p.eval(b.lo).sign()) {
            b.lo = k;
        } else {
            b.hi = k;
        }
    }
    return b;
}

}  // namespace

FeasibleSet integer_feasible_set(const UniPoly& p, const IntInterval& bracket, bool allow_unbounded) {
    if (p.var() != Var::n && !p.is_zero()) {
        throw VariableMismatch("integer feasibility needs a polynomial in n, got one in " + to_string(p.var()));
    }
    FeasibleSet out;
    if (bracket.empty()) return out;
    const std::int64_t lo = bracket.lo();

    auto feasible_at = [&](std::int64_t n) { return p.eval(Rational(n)).sign() >= 0; };

    if (p.is_zero()) {
        out.interval = bracket;
        return out;
    }

    std::int64_t hi;
    bool open_top = false;
    if (auto h = bracket.hi()) {
        hi = *h;
    } else {
        hi = std::max(lo, to_i64(cauchy_bound(p).ceil())) + 1;
        open_top = true;
    }

    // Sign can only change next to a root, so the integers that matter are the
    // bracket ends and floor/ceil of every root. Between two such integers
    // that are not adjacent the sign is that of any interior point.
    std::set<std::int64_t> critical{lo, hi};
    const auto roots = isolate_roots(p, ClosedRatInterval(Rational(lo), Rational(hi)));
    const UniPoly sqf = squarefree_part(p);
    for (const auto& r : roots) {
        const RootBracket b = unit_bracket(sqf, r);
        const std::int64_t f = to_i64(b.lo.floor());
        for (std::int64_t c : {f, b.exact() ? f : f + 1}) {
            if (c >= lo && c <= hi) critical.insert(c);
        }
    }

    // Runs of feasible integers as [first, last] pairs.
    std::vector<std::pair<std::int64_t, std::int64_t>> runs;
    auto mark = [&](std::int64_t a, std::int64_t b, bool ok) {
        if (!ok) return;
        if (!runs.empty() && runs.back().second + 1 == a) {
            runs.back().second = b;
        } else {
            runs.emplace_back(a, b);
        }
    };
    std::int64_t prev = 0;
    bool first = true;
    for (std::int64_t c : critical) {
        if (!first && c > prev + 1) mark(prev + 1, c - 1, feasible_at(prev + 1));
        mark(c, c, feasible_at(c));
        prev = c;
        first = false;
    }

    if (runs.empty()) return out;
    if (runs.size() > 1) {
        std::vector<ContiguityError::Gap> gaps;
        std::string msg = "feasible set of " + p.to_string() + " on " + bracket.to_string() + " is not contiguous; gaps:";
        for (std::size_t i = 1; i < runs.size(); ++i) {
            gaps.push_back({runs[i - 1].second + 1, runs[i].first - 1});
            msg += " [" + std::to_string(gaps.back().first) + "," + std::to_string(gaps.back().last) + "]";
        }
        throw ContiguityError(msg, std::move(gaps));
    }

    const auto [a, b] = runs.front();
    bool unbounded = false;
    if (b == hi && p.leading().sign() > 0) {
        if (open_top) {
            unbounded = true;  // no roots beyond the Cauchy bound
        } else if (allow_unbounded) {
            unbounded = sturm_root_count(p, ClosedRatInterval::at_least(Rational(hi))).count == 0;
        }
    }
    out.interval = unbounded ? IntInterval::at_least(a) : IntInterval::closed(a, b);

    auto witness = [&](std::int64_t n) { out.witnesses.push_back({n, p.eval(Rational(n))}); };
    if (a > lo) witness(a - 1);
    witness(a);
    if (!unbounded) {
        if (b != a) witness(b);
        if (b < hi) witness(b + 1);
    }
    return out;
}

}  // namespace crcert
