#include "crcert/theorems.hpp"

#include "crcert/bounds.hpp"
#include "crcert/certifier.hpp"
#include "crcert/errors.hpp"

namespace crcert {

namespace {

Rational q(std::int64_t v) { return Rational(v); }
Rational dec(std::string_view text) { return rational_from_decimal(text); }

UniPoly A() { return UniPoly::variable(Var::alpha); }
UniPoly R() { return UniPoly::variable(Var::r); }
UniPoly ac(const Rational& c) { return UniPoly::constant(Var::alpha, c); }
UniPoly rc(const Rational& c) { return UniPoly::constant(Var::r, c); }

/// Coefficients in ascending degree, for the published data below.
UniPoly alpha_poly(std::initializer_list<Rational> coeffs) { return UniPoly(Var::alpha, coeffs); }

Comparison cmp(std::string lhs_text, Rational lhs, Relation rel, std::string rhs_text, Rational rhs) {
    return {std::move(lhs_text), std::move(lhs), rel, std::move(rhs_text), std::move(rhs)};
}

Identity ident(std::string lhs_text, std::string rhs_text, const BiPoly& lhs, const BiPoly& rhs) {
    return {std::move(lhs_text), std::move(rhs_text), lhs - rhs};
}

std::string interval_text(const Rational& lo, const Rational& hi) {
    return "[" + lo.to_decimal(6) + ", " + hi.to_decimal(6) + "]";
}

// Pairs of (Rational, relation) evaluation shared by Comparison::holds.
bool relation_holds(const Rational& a, Relation rel, const Rational& b) {
    switch (rel) {
        case Relation::lt: return a < b;
        case Relation::le: return a <= b;
        case Relation::eq: return a == b;
        case Relation::ge: return a >= b;
        case Relation::gt: return a > b;
    }
    return false;
}

}  // namespace

std::string to_string(Relation rel) {
    switch (rel) {
        case Relation::lt: return "<";
        case Relation::le: return "<=";
        case Relation::eq: return "==";
        case Relation::ge: return ">=";
        case Relation::gt: return ">";
    }
    return "?";
}

Relation parse_relation(std::string_view text) {
    if (text == "<") return Relation::lt;
    if (text == "<=") return Relation::le;
    if (text == "==") return Relation::eq;
    if (text == ">=") return Relation::ge;
    if (text == ">") return Relation::gt;
    throw ParseError("unknown relation '" + std::string(text) + "'");
}

bool Comparison::holds() const { return relation_holds(lhs, relation, rhs); }

Step make_step(std::string description, Evidence evidence) {
    Step step;
    step.description = std::move(description);
    struct Judge {
        Step& s;
        void operator()(const SignCertificate& c) const {
            s.pass = c.valid() && verify(c);
            if (!s.pass && c.refutation) {
                s.witness = c.refutation->point ? *c.refutation->point : c.refutation->root->lo;
            }
        }
        void operator()(const Comparison& c) const {
            s.pass = c.holds();
            if (!s.pass) s.witness = c.lhs - c.rhs;
        }
        void operator()(const Identity& i) const {
            s.pass = i.holds();
            if (!s.pass) s.witness = i.difference.terms().begin()->second;
        }
        void operator()(const CoverageEvidence& c) const {
            s.pass = c.holds();
            if (!s.pass) {
                // first order on which observed and expected disagree
                for (std::size_t j = 0;; ++j) {
                    const bool in_gaps = j < c.gaps.size();
                    const bool in_exp = j < c.expected.size();
                    if (!in_gaps || !in_exp || c.gaps[j] != c.expected[j]) {
                        s.witness = Rational(in_gaps ? c.gaps[j] : (in_exp ? c.expected[j] : c.r));
                        break;
                    }
                }
            }
        }
    };
    std::visit(Judge{step}, evidence);
    step.evidence = std::move(evidence);
    return step;
}

void finalize(Report& report) {
    report.overall = !report.steps.empty();
    for (const auto& s : report.steps) report.overall = report.overall && s.pass;
}

bool operator==(const SignCertificate& a, const SignCertificate& b) {
    auto same_refutation = [](const std::optional<Refutation>& x, const std::optional<Refutation>& y) {
        if (x.has_value() != y.has_value()) return false;
        if (!x) return true;
        return x->point == y->point && x->root == y->root && x->reason == y->reason;
    };
    return a.poly == b.poly && a.poly.var() == b.poly.var() && a.interval == b.interval && a.claim == b.claim &&
           a.interior_root_count == b.interior_root_count && a.lo_value == b.lo_value && a.hi_value == b.hi_value &&
           a.squarefree == b.squarefree && a.root_brackets == b.root_brackets && a.gap_samples == b.gap_samples &&
           same_refutation(a.refutation, b.refutation);
}

bool operator==(const Step& a, const Step& b) {
    return a.description == b.description && a.evidence == b.evidence && a.pass == b.pass && a.witness == b.witness;
}

bool operator==(const Discrepancy& a, const Discrepancy& b) {
    return a.finding == b.finding && a.published == b.published && a.recomputed == b.recomputed && a.witness == b.witness;
}

bool operator==(const Report& a, const Report& b) {
    return a.theorem == b.theorem && a.steps == b.steps && a.overall == b.overall &&
           a.discrepancies == b.discrepancies && a.notes == b.notes;
}

// ---------------------------------------------------------------------------
// Middle orders

BiPoly middle_order_poly(std::int64_t k) {
    const BiPoly r = BiPoly::r();
    const BiPoly n = BiPoly::r() * BiPoly::alpha();
    const BiPoly one(Rational(1));
    auto c = [](const Rational& v) { return BiPoly(v); };
    const BiPoly edges = ((r - one) * n + (n - r) * (c(2) * r - n) - c(2)) * Rational(1, 2);
    const BiPoly sampled = c(5) * edges * (n - c(2)) * (n - c(3)) * (Rational(1) / (q(k - 2) * q(k - 3)));
    const BiPoly drawings =
        c(203) * n * (n - one) * (n - c(2)) * (n - c(3)) * (Rational(1) / (q(9) * q(k) * q(k - 1) * q(k - 3)));
    const BiPoly target = r * (r - one) * (r - c(2)) * (r - c(3)) * Rational(1, 64);
    return (sampled - drawings - target) * Rational(100);
}

const std::vector<PublishedGrouping>& published_groupings() {
    static const std::vector<PublishedGrouping> data = [] {
        std::vector<PublishedGrouping> out;
        // k = 19: expansion and part definitions agree with each other.
        {
            PublishedGrouping g;
            g.k = 19;
            g.expansion = {
                alpha_poly({Rational(-25, 16), 0, Rational(-125, 68), Rational(125, 34), Rational(-139325, 104652)}),
                alpha_poly({Rational(15, 2), Rational(625, 68), Rational(-625, 34), Rational(214525, 34884)}),
                alpha_poly({Rational(-7675, 272), Rational(-375, 17), Rational(-142675, 26163)}),
                alpha_poly({Rational(75, 8), Rational(-26525, 8721)}),
            };
            g.r_linear = Rational(15, 8);
            g.definitions = {
                g.expansion[0],
                g.expansion[1],
                alpha_poly({Rational(-7675, 272) + Rational(15, 8) * q(13), Rational(-375, 17), Rational(-142675, 26163)}),
                g.expansion[3],
            };
            g.window_lo = dec("1.525");
            g.window_hi = dec("1.7689");
            out.push_back(g);
        }
        // k = 15: the r^2 group prints +500/13 alpha, its part definition -500/13 alpha.
        {
            PublishedGrouping g;
            g.k = 15;
            g.expansion = {
                alpha_poly({Rational(-25, 16), 0, Rational(-125, 39), Rational(250, 39), Rational(-2630, 1053)}),
                alpha_poly({Rational(70, 8), Rational(625, 39), Rational(-1250, 39), Rational(4135, 351)}),
                alpha_poly({Rational(-7575, 208), Rational(500, 13), Rational(-12055, 1053)}),
                alpha_poly({Rational(75, 8), Rational(-1490, 351)}),
            };
            g.r_linear = Rational(5, 8);
            g.definitions = {
                g.expansion[0],
                g.expansion[1],
                alpha_poly({Rational(-7575, 208) + Rational(5, 8) * q(13), Rational(-500, 13), Rational(-12055, 1053)}),
                g.expansion[3],
            };
            g.window_lo = dec("1.314");
            g.window_hi = dec("1.648");
            out.push_back(g);
        }
        // k = 12: the r^2 group prints -200/3 alpha, its part definition +200/3 alpha.
        {
            PublishedGrouping g;
            g.k = 12;
            g.expansion = {
                alpha_poly({Rational(-25, 16), 0, Rational(-500, 9), Rational(1000, 9), Rational(-12500, 2673)}),
                alpha_poly({Rational(69, 8), Rational(250, 9), Rational(-500, 9), Rational(20050, 891)}),
                alpha_poly({Rational(-2425, 48), Rational(-200, 3), Rational(-5750, 243)}),
                alpha_poly({Rational(75, 8), Rational(-4700, 891)}),
            };
            g.r_linear = Rational(3, 4);
            g.definitions = {
                g.expansion[0],
                g.expansion[1],
                alpha_poly({Rational(-2425, 48) + Rational(3, 4) * q(13), Rational(200, 3), Rational(-5750, 243)}),
                g.expansion[3],
            };
            g.window_lo = dec("1.2274");
            g.window_hi = dec("1.435");
            out.push_back(g);
        }
        return out;
    }();
    return data;
}

Rational slack_constant(std::int64_t k) {
    for (const auto& g : published_groupings()) {
        if (g.k == k) return g.r_linear;
    }
    throw DomainError("no middle-order grouping for k = " + std::to_string(k));
}

std::vector<UniPoly> grouped_parts(std::int64_t k, const Rational& c_k) {
    auto c = collect_by_degree(middle_order_poly(k));
    c.resize(5, UniPoly(Var::alpha));
    return {c[4], c[3] - ac(c_k), c[2] + ac(q(13) * c_k), c[1], c[0]};
}

namespace {

void compare_group(Report& rep, std::int64_t k, const std::string& label, const UniPoly& published,
                   const UniPoly& truth, const std::string& against) {
    if (published == truth) return;
    const UniPoly diff = published - truth;
    std::string degrees;
    std::optional<Rational> first;
    for (std::size_t i = 0; i < diff.coefficients().size(); ++i) {
        if (diff.coeff(i).is_zero()) continue;
        degrees += (degrees.empty() ? "alpha^" : ", alpha^") + std::to_string(i);
        if (!first) first = diff.coeff(i);
    }
    rep.discrepancies.push_back({"k=" + std::to_string(k) + ": " + label + " differs from " + against + " in the " +
                                     degrees + " coefficient(s)",
                                 published.to_string(), truth.to_string(), first});
}

}  // namespace

Report verify_theorem4() {
    Report rep;
    rep.theorem = "thm4";

    for (const auto& g : published_groupings()) {
        const std::int64_t k = g.k;
        const std::string tag = "k=" + std::to_string(k) + ": ";
        const BiPoly p = middle_order_poly(k);
        auto c = collect_by_degree(p);
        c.resize(5, UniPoly(Var::alpha));

        rep.steps.push_back(make_step(tag + "regrouping by powers of r reproduces p_k",
                                      ident("p_k", "sum r^i c_i(alpha)", p, assemble_by_degree(c))));

        // The moved r^3 constant must be what the published r^3 group leaves behind.
        const Rational c_k = g.r_linear;
        rep.steps.push_back(make_step(
            tag + "slack constant equals the r^3 constant minus the grouped r^3 constant",
            Evidence{cmp("c_3(0) - grouped c_3(0)", c[3].coeff(0) - g.expansion[1].coeff(0), Relation::eq, "c_k", c_k)}));

        const auto parts = grouped_parts(k, c_k);
        BiPoly grouped;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            grouped += BiPoly::term(Rational(1), static_cast<unsigned>(4 - i), 0) * BiPoly::from(parts[i]);
        }
        const BiPoly slack = BiPoly::term(c_k, 3, 0) - BiPoly::term(c_k * q(13), 2, 0);
        rep.steps.push_back(make_step(tag + "p_k - sum r^i q_i = c_k r^2 (r - 13)",
                                      ident("p_k - sum_{i=0..4} r^i q_i", "c_k r^2 (r-13)", p - grouped, slack)));

        // Substituting r = 13 + s turns "p_k >= 0 for all r >= 13" into a
        // polynomial in s >= 0; nonnegative coefficients settle it.
        const auto shifted = collect_by_degree(p.shift_r(q(13)));
        const ClosedRatInterval window(g.window_lo, g.window_hi);
        for (std::size_t j = 0; j < shifted.size(); ++j) {
            rep.steps.push_back(make_step(tag + "coefficient of s^" + std::to_string(j) + " in p_k(13+s, alpha) >= 0 on " +
                                              interval_text(g.window_lo, g.window_hi),
                                          certify_sign(shifted[j], window, SignClaim::nonnegative)));
        }

        // Side conditions for n = alpha r with r >= 13: Gallai's bound applies and k <= n.
        rep.steps.push_back(make_step(tag + "r+2 <= alpha r at the window's left end for r >= 13",
                                      certify_sign(R() * (g.window_lo - q(1)) - rc(q(2)),
                                                   ClosedRatInterval::at_least(q(13)), SignClaim::nonnegative)));
        rep.steps.push_back(make_step(tag + "alpha r <= 2r-1 at the window's right end for r >= 13",
                                      certify_sign(R() * (q(2) - g.window_hi) - rc(q(1)),
                                                   ClosedRatInterval::at_least(q(13)), SignClaim::nonnegative)));
        rep.steps.push_back(make_step(tag + "k <= alpha r at the window's left end for r >= 13",
                                      certify_sign(R() * g.window_lo - rc(q(k)), ClosedRatInterval::at_least(q(13)),
                                                   SignClaim::nonnegative)));

        // Published algebra against the recomputation.
        const std::vector<UniPoly> truth_groups{c[4], c[3] - ac(c_k), c[2], c[1]};
        const char* names[] = {"r^4 group", "r^3 group", "r^2 group", "r^1 group"};
        for (std::size_t i = 0; i < 4; ++i) {
            compare_group(rep, k, std::string("displayed ") + names[i], g.expansion[i], truth_groups[i], "the recomputed expansion");
        }
        if (!c[0].is_zero()) {
            rep.discrepancies.push_back({tag + "the expansion omits a nonzero r^0 term", "0", c[0].to_string(), c[0].coeff(0)});
        }
        const std::vector<UniPoly> expansion_parts{g.expansion[0], g.expansion[1], g.expansion[2] + ac(q(13) * c_k),
                                                   g.expansion[3]};
        const char* part_names[] = {"part p^(4)", "part p^(3)", "part p^(2)", "part p^(1)"};
        for (std::size_t i = 0; i < 4; ++i) {
            compare_group(rep, k, std::string(part_names[i]) + " definition", g.definitions[i], expansion_parts[i],
                          "the displayed expansion");
        }
        // The grouped parts themselves need not keep a sign on the window.
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto cert = certify_sign(parts[i], window, SignClaim::nonnegative);
            if (!cert.valid()) {
                const Rational at = cert.refutation->point ? *cert.refutation->point : cert.refutation->root->lo;
                rep.discrepancies.push_back({tag + "grouped part q_" + std::to_string(4 - i) + " is negative on " +
                                                 interval_text(g.window_lo, g.window_hi) + " at alpha = " + at.to_string(),
                                             "q_" + std::to_string(4 - i) + " >= 0", parts[i].to_string(),
                                             parts[i].eval(at)});
            }
        }
    }

    // The three windows chain together across [1.228, 1.768].
    const auto& gs = published_groupings();
    const auto& g19 = gs[0];
    const auto& g15 = gs[1];
    const auto& g12 = gs[2];
    rep.steps.push_back(make_step("k=12 window starts at or below 1.228",
                                  Evidence{cmp("1.2274", g12.window_lo, Relation::le, "1.228", dec("1.228"))}));
    rep.steps.push_back(make_step("k=12 and k=15 windows overlap",
                                  Evidence{cmp("1.314", g15.window_lo, Relation::le, "1.435", g12.window_hi)}));
    rep.steps.push_back(make_step("k=15 and k=19 windows overlap",
                                  Evidence{cmp("1.525", g19.window_lo, Relation::le, "1.648", g15.window_hi)}));
    rep.steps.push_back(make_step("k=19 window ends at or above 1.768",
                                  Evidence{cmp("1.7689", g19.window_hi, Relation::ge, "1.768", dec("1.768"))}));

    rep.discrepancies.push_back({"headline lower constant differs from the middle-order theorem", "1.212", "1.228",
                                 dec("1.228") - dec("1.212")});
    rep.notes.push_back("the small-order theorem covers n <= 1.23r while this window starts at 1.228r; orders in "
                        "[1.228r, 1.23r] are covered twice");
    rep.notes.push_back("the grouped parts are not each nonnegative; the window claim is certified through the "
                        "r = 13 + s expansion instead");
    finalize(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Large orders

UniPoly h_hat_minorant(std::int64_t k, std::int64_t slope) {
    const Rational scale = q(406) / (q(9) * q(k) * q(k - 1) * q(14));
    return ac(q(15) / q(k - 2)) - UniPoly::linear(Var::alpha, q(slope), q(-17)) * scale;
}

Report verify_theorem2() {
    Report rep;
    rep.theorem = "thm2";
    const Rational threshold = dec("3.435");
    const Rational w0 = dec("2.8118");
    const Rational w1 = dec("3.21");
    const Rational w2 = dec("3.5");
    const Rational cubic_den = dec("27.48");
    const Rational cubic_min = dec("6.95");
    const auto at_least = [](const Rational& x) { return ClosedRatInterval::at_least(x); };

    // Case alpha >= 3.435: cubic crossing bound with minimum-degree edges.
    rep.steps.push_back(make_step("threshold 3.435 equals 27.48/8",
                                  Evidence{cmp("3.435", threshold, Relation::eq, "27.48/8", cubic_den / q(8))}));
    rep.steps.push_back(make_step("at the threshold alpha/(8*27.48) equals 1/64",
                                  Evidence{cmp("3.435/(8*27.48)", threshold / (q(8) * cubic_den), Relation::eq, "1/64",
                                               Rational(1, 64))}));
    rep.steps.push_back(make_step("alpha/(8*27.48) - 1/64 >= 0 for alpha >= 3.435",
                                  certify_sign(A() * (Rational(1) / (q(8) * cubic_den)) - ac(Rational(1, 64)),
                                               at_least(threshold), SignClaim::nonnegative)));
    rep.steps.push_back(make_step("(r-1)/2 >= 6.95 for r >= 15, so m >= 6.95n",
                                  certify_sign(R() * Rational(1, 2) - rc(Rational(1, 2) + cubic_min), at_least(q(15)),
                                               SignClaim::nonnegative)));
    rep.steps.push_back(make_step("(r-1)/2 at r = 15 is at least 6.95",
                                  Evidence{cmp("(15-1)/2", q(7), Relation::ge, "6.95", cubic_min)}));
    rep.steps.push_back(make_step("(r-1)^2 - (r-2)(r-3) = 3r - 5 > 0 for r >= 15",
                                  certify_sign((R() - rc(1)).pow(2) - (R() - rc(2)) * (R() - rc(3)), at_least(q(15)),
                                               SignClaim::strictly_positive)));

    // Case 2.8118 <= alpha <= 3.5: the quartic margins.
    rep.steps.push_back(make_step("k=36 quartic margin > 0 on " + interval_text(w0, w1),
                                  certify_sign(large_order_margin(36), ClosedRatInterval(w0, w1),
                                               SignClaim::strictly_positive)));
    rep.steps.push_back(make_step("k=40 quartic margin > 0 on " + interval_text(w1, w2),
                                  certify_sign(large_order_margin(40), ClosedRatInterval(w1, w2),
                                               SignClaim::strictly_positive)));

    // The chain that splits the sampling bound into the quartic margin plus h.
    for (std::int64_t k : {36, 40}) {
        const BiPoly r = BiPoly::r();
        const BiPoly a = BiPoly::alpha();
        const BiPoly one(Rational(1));
        const BiPoly a3r = a.pow(3) * r * Rational(1) * (Rational(1) / (q(2) * q(k - 3)));
        const Rational e = q(5) / q(k - 2);
        const Rational d = q(406) / (q(9) * q(k) * q(k - 1));
        // alpha^3 r^2 (r-2)/(2(k-3)) * (5(r-1)/(k-2) - 406(alpha r - 1)/(9k(k-1)))
        const BiPoly lhs = a3r * r * (r - BiPoly(q(2))) * ((r - one) * e - (a * r - one) * d);
        const BiPoly main = a3r * (r - one) * (r - BiPoly(q(2))) * (r - BiPoly(q(3))) * (BiPoly(e) - a * d);
        // h with its 1/(r-1) cleared against the (r-1) factor
        const BiPoly h = a3r * (r - BiPoly(q(2))) *
                         ((r - one) * (q(15) / q(k - 2)) - (a * r * q(4) - r - a * q(3)) * d);
        rep.steps.push_back(make_step("k=" + std::to_string(k) + ": lower-bound chain splits as quartic part + h",
                                      ident("alpha^3 r^2 (r-2) (...) / (2(k-3))", "main + h", lhs, main + h)));
    }
    rep.steps.push_back(make_step("(alpha r-2)(alpha r-3) >= alpha^2 r (r-2) needs 2 alpha - 5 > 0 on [2.8118, oo)",
                                  certify_sign(A() * q(2) - ac(q(5)), at_least(w0), SignClaim::strictly_positive)));

    // h-hat minorants.
    rep.steps.push_back(make_step("displayed k=40 minorant 15/38 - 406/(9*40*39) (19 alpha - 17)/14 >= 0 on " +
                                      interval_text(w0, w2),
                                  certify_sign(h_hat_minorant(40, 19), ClosedRatInterval(w0, w2), SignClaim::nonnegative)));
    rep.steps.push_back(make_step("k=36 minorant 15/34 - 406/(9*36*35) (59 alpha - 17)/14 >= 0 on " + interval_text(w0, w1),
                                  certify_sign(h_hat_minorant(36, 59), ClosedRatInterval(w0, w1), SignClaim::nonnegative)));
    rep.steps.push_back(make_step("k=40 minorant with (59 alpha - 17)/14 >= 0 on " + interval_text(w1, w2),
                                  certify_sign(h_hat_minorant(40, 59), ClosedRatInterval(w1, w2), SignClaim::nonnegative)));
    rep.steps.push_back(make_step("r/(r-1) <= 15/14 for r >= 15",
                                  certify_sign(R() - rc(q(15)), at_least(q(15)), SignClaim::nonnegative)));
    rep.steps.push_back(make_step("(59 alpha - 17)/14 majorizes 3 alpha + (15/14)(alpha - 1) on [2.8118, 3.5]",
                                  certify_sign(UniPoly::linear(Var::alpha, q(59), q(-17)) * Rational(1, 14) -
                                                   (A() * q(3) + (A() - ac(1)) * Rational(15, 14)),
                                               ClosedRatInterval(w0, w2), SignClaim::nonnegative)));

    // Coverage of [2.8118, oo).
    rep.steps.push_back(make_step("k=36 and k=40 windows meet at 3.21", Evidence{cmp("3.21", w1, Relation::le, "3.21", w1)}));
    rep.steps.push_back(make_step("k=40 window reaches the cubic case",
                                  Evidence{cmp("3.435", threshold, Relation::le, "3.5", w2)}));

    // Findings about the displayed algebra.
    {
        const UniPoly gap = UniPoly::linear(Var::alpha, q(19), q(-17)) * Rational(1, 14) -
                            (A() * q(3) + (A() - ac(1)) * Rational(15, 14));
        rep.discrepancies.push_back({"k=40 minorant (19 alpha - 17)/14 does not majorize 3 alpha + r(alpha-1)/(r-1); "
                                     "(59 alpha - 17)/14 does and is certified instead",
                                     "(19 alpha - 17)/14", "(59 alpha - 17)/14", gap.eval(w1)});
        rep.discrepancies.push_back({"3(alpha-1)/(r-1) <= (alpha-1)/6 needs r >= 19, not r >= 15; the chain above "
                                     "uses r/(r-1) <= 15/14 instead",
                                     "(alpha-1)/6", "3(alpha-1)/14 at r = 15", Rational(3, 14) - Rational(1, 6)});
        rep.discrepancies.push_back({"headline large-order constant differs from the theorem", "2.812", "2.8118",
                                     dec("2.812") - w0});
    }
    rep.notes.push_back("the k=36 margin stays positive up to about 3.32 but its minorant only to about 3.212; "
                        "(3.21, 3.32] is left to k=40");
    finalize(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Table coverage

Report verify_theorem6() {
    Report rep;
    rep.theorem = "thm6";
    const Report mid = verify_theorem4();
    rep.steps.push_back(make_step("middle-order window certified",
                                  Evidence{cmp("failed steps", q(mid.overall ? 0 : 1), Relation::eq, "0", q(0))}));
    if (!mid.overall) {
        finalize(rep);
        return rep;
    }
    const auto rows = build_table(15, 26);
    for (const auto& row : rows) {
        std::vector<std::int64_t> expected;
        if (row.r == 25) expected = {48};
        if (row.r == 26) expected = {50, 51};
        rep.steps.push_back(make_step("r=" + std::to_string(row.r) + ": orders left uncovered",
                                      CoverageEvidence{row.r, row.possible_n, expected}));
    }
    rep.notes.push_back("intervals from Kostochka-Stiebitz edges assume no subdivision of K_r");
    finalize(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Small orders

Rational finalish_ratio(std::int64_t r, std::int64_t n) {
    if (n <= r) throw DomainError("finalish check needs r < n");
    return q(r - 1).pow(3) * q(n - r - 1).pow(3) / (q(n - 1).pow(3) * q(n) * q(n + 2 * r));
}

std::pair<bool, bool> finalish_check(std::int64_t r, std::int64_t n) {
    const Rational ratio = finalish_ratio(r, n);
    const Rational applies = q(r - 1) * q(n - r - 1) / (q(2) * q(n - 1));
    return {dec("27.48") <= ratio, applies >= dec("6.95")};
}

Report verify_theorem9() {
    Report rep;
    rep.theorem = "thm9";
    const Rational lo = dec("1.05");
    const Rational hi = dec("1.23");

    // g(alpha) = (alpha-1)^3 / (alpha^4 (alpha+2)), decreasing-from-the-left check.
    const UniPoly num = (A() - ac(1)).pow(3);
    const UniPoly den = A().pow(4) * (A() + ac(2));
    const UniPoly factor = A().pow(2) * q(-2) + A() * q(3) + ac(8);
    const UniPoly wronskian = num.derivative() * den - num * den.derivative();
    rep.steps.push_back(make_step("N'D - ND' = (alpha-1)^2 alpha^3 (-2 alpha^2 + 3 alpha + 8)",
                                  ident("N'D - ND'", "(alpha-1)^2 alpha^3 (-2alpha^2+3alpha+8)", BiPoly::from(wronskian),
                                        BiPoly::from((A() - ac(1)).pow(2) * A().pow(3) * factor))));
    rep.steps.push_back(make_step("-2 alpha^2 + 3 alpha + 8 > 0 on " + interval_text(lo, hi),
                                  certify_sign(factor, ClosedRatInterval(lo, hi), SignClaim::strictly_positive)));
    rep.steps.push_back(make_step("(alpha-1)^2 alpha^3 >= 0 on " + interval_text(lo, hi),
                                  certify_sign((A() - ac(1)).pow(2) * A().pow(3), ClosedRatInterval(lo, hi),
                                               SignClaim::nonnegative)));

    auto g = [&](const Rational& a) { return num.eval(a) / den.eval(a); };
    const Rational half55(55, 2);
    rep.steps.push_back(make_step("125000 g(1.1) > 27.5",
                                  Evidence{cmp("125000 g(11/10)", q(125000) * g(dec("1.1")), Relation::gt, "27.5", half55)}));
    rep.steps.push_back(make_step("25000000 > 55 * 453871",
                                  Evidence{cmp("25000000", q(25000000), Relation::gt, "55*453871", q(55) * q(453871))}));
    rep.steps.push_back(make_step("825000 g(1.05) > 27.5",
                                  Evidence{cmp("825000 g(21/20)", q(825000) * g(lo), Relation::gt, "27.5", half55)}));
    rep.steps.push_back(make_step("330000000 > (55/2) * 11863341",
                                  Evidence{cmp("330000000", q(330000000), Relation::gt, "(55/2)*11863341",
                                               half55 * q(11863341))}));

    // Dropping the -1 terms costs at most (1 - 1/12500)^6.
    const Rational shrink(12499, 12500);
    rep.steps.push_back(make_step("(12499/12500)^6 >= 1374/1375",
                                  Evidence{cmp("(12499/12500)^6", shrink.pow(6), Relation::ge, "1374/1375",
                                               Rational(1374, 1375))}));
    rep.steps.push_back(make_step("27.48 (1 - 1/12500)^-6 <= 27.5",
                                  Evidence{cmp("27.48 (12500/12499)^6", dec("27.48") / shrink.pow(6), Relation::le,
                                               "27.5", half55)}));
    rep.steps.push_back(make_step("min(r, n-r) >= 12500 at r = 125000, alpha = 1.1",
                                  Evidence{cmp("0.1 * 125000", q(12500), Relation::ge, "12500", q(12500))}));
    rep.steps.push_back(make_step("min(r, n-r) >= 12500 at r = 825000, alpha = 1.05",
                                  Evidence{cmp("0.05 * 825000", q(41250), Relation::ge, "12500", q(12500))}));

    // The applicability inequality follows from n-r-1 >= 21 and (n-1)/(r-1) <= 3/2.
    rep.steps.push_back(make_step("27.48 <= ratio forces n-r-1 >= 27.48 >= 21",
                                  Evidence{cmp("27.48", dec("27.48"), Relation::ge, "21", q(21))}));
    rep.steps.push_back(make_step("n <= 1.23r gives (n-1)/(r-1) <= 3/2 for r >= 2",
                                  certify_sign((R() - rc(1)) * Rational(3, 2) - (R() * hi - rc(1)),
                                               ClosedRatInterval::at_least(q(2)), SignClaim::nonnegative)));
    rep.steps.push_back(make_step("21 / (2 * 3/2) >= 6.95",
                                  Evidence{cmp("21/3", Rational(21, 3), Relation::ge, "6.95", dec("6.95"))}));

    // The leftover-set averaging step is the same inequality in another form.
    for (auto [r, n] : {std::pair<std::int64_t, std::int64_t>{125000, 137500}, {825000, 866250}}) {
        const std::string at = " at (r, n) = (" + std::to_string(r) + ", " + std::to_string(n) + ")";
        rep.steps.push_back(make_step("ratio >= 27.48" + at,
                                      Evidence{cmp("ratio", finalish_ratio(r, n), Relation::ge, "27.48", dec("27.48"))}));
        rep.steps.push_back(make_step("leftover average >= 6.95 (n - r)" + at,
                                      Evidence{cmp("w", w_edge_average(n, r), Relation::ge, "6.95 (n-r)",
                                                   dec("6.95") * q(n - r))}));
        const Rational cubic = crossing_lb(n - r, w_edge_average(n, r), CrossingVariant::cubic);
        rep.steps.push_back(make_step("cubic bound on the leftover set / deficit = ratio / 27.48" + at,
                                      Evidence{cmp("cr(W) / deficit", cubic / immersion_deficit(n, r), Relation::eq,
                                                   "ratio / 27.48", finalish_ratio(r, n) / dec("27.48"))}));
    }
    rep.notes.push_back("the theorem bounds n <= 1.23r while the middle-order window starts at 1.228r");
    finalize(rep);
    return rep;
}

}  // namespace crcert
