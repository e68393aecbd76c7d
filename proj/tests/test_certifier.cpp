#include <doctest.h>

#include <algorithm>

#include "crcert/certifier.hpp"
#include "crcert/errors.hpp"
#include "support/properties.hpp"

using namespace crcert;
using crcert::testing::Q;

namespace {

// ceil(1228 r / 1000), floor(1768 r / 1000) in plain integers
IntInterval middle_window_by_hand(std::int64_t r) {
    return IntInterval::closed((1228 * r + 999) / 1000, 1768 * r / 1000);
}

}  // namespace

TEST_CASE("exclusions for single bounds") {
    CHECK(excluded_orders(20, SamplingBound{22, EdgeBound::gallai}) == IntInterval::closed(30, 38));
    CHECK(excluded_orders(25, MiddleOrderWindow{}) == IntInterval::closed(31, 44));
    CHECK(excluded_orders(15, SubdivisionWindow{}) == IntInterval::closed(15, 19));
    CHECK(excluded_orders(24, SamplingBound{24, EdgeBound::kostochka_stiebitz}) == IntInterval::closed(46, 54));
    CHECK(excluded_orders(26, ProbBound{Q("1/2"), EdgeBound::kostochka_stiebitz}) == IntInterval::at_least(58));
    CHECK(excluded_orders(22, SamplingBound{22, EdgeBound::gallai}) == IntInterval::closed(34, 42));
}

TEST_CASE("exclusions record assumptions, search range and witnesses") {
    const Exclusion ex = exclude(22, SamplingBound{22, EdgeBound::gallai});
    CHECK(ex.assumption == Assumption::unconditional);
    CHECK(ex.bracket == IntInterval::closed(24, 43));
    REQUIRE(ex.witnesses.size() == 4);
    CHECK(ex.witnesses[0] == SignWitness{33, Q("-1730/57")});
    CHECK(ex.witnesses[3] == SignWitness{43, Q("-259045/1881")});

    const Exclusion ks = exclude(26, ProbBound{Q("1/2"), EdgeBound::kostochka_stiebitz});
    CHECK(ks.assumption == Assumption::no_kr_subdivision);
    CHECK(ks.witnesses.size() == 2);  // nothing above an unbounded interval
    CHECK(ks.witnesses[0].n == 57);
    CHECK(ks.witnesses[0].value < 0);
    CHECK(ks.witnesses[1].n == 58);
    CHECK(ks.witnesses[1].value >= 0);

    CHECK(exclude(20, SubdivisionWindow{}).witnesses.empty());
}

TEST_CASE("exclusion preconditions") {
    CHECK_THROWS_AS(exclude(14, SamplingBound{12, EdgeBound::gallai}), DomainError);
    CHECK_THROWS_AS(exclude(14, ProbBound{Q("1/2"), EdgeBound::kostochka_stiebitz}), DomainError);
    CHECK_THROWS_AS(exclude(4, SubdivisionWindow{}), DomainError);
    CHECK_THROWS_AS(exclude(12, MiddleOrderWindow{}), DomainError);
    CHECK(excluded_orders(5, SubdivisionWindow{}) == IntInterval::closed(5, 9));
    CHECK(excluded_orders(13, MiddleOrderWindow{}) == IntInterval::closed(16, 22));
}

TEST_CASE("window columns follow their closed forms") {
    for (std::int64_t r = 13; r <= 400; ++r) {
        CAPTURE(r);
        REQUIRE(middle_order_window(r) == middle_window_by_hand(r));
        REQUIRE(excluded_orders(r, SubdivisionWindow{}) == IntInterval::closed(r, r + 4));
    }
}

TEST_CASE("rows with open orders") {
    CHECK(build_table_row(25, default_probability(25)).possible_n == std::vector<std::int64_t>{48});
    CHECK(build_table_row(26, default_probability(26)).possible_n == std::vector<std::int64_t>{50, 51});
    CHECK(build_table_row(19, default_probability(19)).possible_n.empty());
    for (std::int64_t r = 15; r <= 24; ++r) CHECK(build_table_row(r, default_probability(r)).possible_n.empty());
    CHECK_THROWS_AS(build_table_row(14, Q("1/2")), DomainError);
}

TEST_CASE("row invariants over the whole range") {
    for (const TableRow& row : build_table(15, 26)) {
        CAPTURE(row.r);
        CHECK(row.lemC == IntInterval::closed(row.r, row.r + 4));
        CHECK(row.thm4 == middle_window_by_hand(row.r));
        CHECK(row.cr_upper == zarankiewicz_upper(row.r));
        CHECK(row.p == default_probability(row.r));
        CHECK(row.lem6.unbounded());
        for (std::int64_t n = row.r; n <= 10 * row.r; ++n) {
            const bool covered = row.lemC.contains(n) || row.ineq2.contains(n) || row.thm4.contains(n) ||
                                 row.ineq3.contains(n) || row.ineq4.contains(n) || row.lem6.contains(n);
            const bool listed = std::find(row.possible_n.begin(), row.possible_n.end(), n) != row.possible_n.end();
            REQUIRE(covered != listed);
        }
    }
}

TEST_CASE("printed sampling and probabilistic columns") {
    struct Cells {
        std::int64_t r;
        const char* ineq2;
        const char* ineq3;
        const char* ineq4;
        const char* lem6;
    };
    const std::vector<Cells> printed{
        {15, "[17,22]", "[22,29]", "[26,36]", "[22,oo)"}, {16, "[19,23]", "[24,31]", "[28,38]", "[25,oo)"},
        {17, "[20,25]", "[25,33]", "[30,40]", "[29,oo)"}, {18, "[21,26]", "[27,35]", "[32,42]", "[32,oo)"},
        {19, "[22,28]", "[29,36]", "[35,44]", "[35,oo)"}, {20, "[23,29]", "[30,38]", "[37,46]", "[38,oo)"},
        {21, "[25,31]", "[32,40]", "[39,48]", "[42,oo)"}, {22, "[26,32]", "[34,42]", "[41,50]", "[44,oo)"},
        {23, "[27,34]", "[36,44]", "[44,52]", "[48,oo)"}, {24, "[28,35]", "[37,45]", "[46,54]", "[51,oo)"},
        {25, "[30,36]", "[39,47]", "[49,55]", "[54,oo)"}, {26, "[31,38]", "[40,49]", "[52,57]", "[58,oo)"},
    };
    const auto rows = build_table(15, 26);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(rows[i].r);
        CHECK(rows[i].r == printed[i].r);
        CHECK(rows[i].ineq2.to_string() == printed[i].ineq2);
        CHECK(rows[i].ineq3.to_string() == printed[i].ineq3);
        CHECK(rows[i].ineq4.to_string() == printed[i].ineq4);
        CHECK(rows[i].lem6.to_string() == printed[i].lem6);
    }
}

TEST_CASE("rows do not depend on evaluation order or threads") {
    const auto parallel = build_table(15, 26);
    std::vector<TableRow> backwards;
    for (std::int64_t r = 26; r >= 15; --r) backwards.push_back(build_table_row(r, default_probability(r)));
    std::reverse(backwards.begin(), backwards.end());
    CHECK(parallel == backwards);
    CHECK(build_table(15, 26) == parallel);
    const auto overridden = build_table(20, 22, Q("3/5"));
    REQUIRE(overridden.size() == 3);
    for (const auto& row : overridden) CHECK(row.p == Q("3/5"));
    CHECK_THROWS_AS(build_table(20, 19), DomainError);
}

TEST_CASE("larger edge bounds never shrink an exclusion") {
    for (std::int64_t r = 15; r <= 26; ++r) {
        const IntInterval shared = edge_bound_domain(r, EdgeBound::gallai);
        for (int k : {12, 16, 22}) {
            const IntInterval weak = excluded_orders(r, SamplingBound{k, EdgeBound::min_degree});
            const IntInterval strong = excluded_orders(r, SamplingBound{k, EdgeBound::gallai});
            for (std::int64_t n = std::max<std::int64_t>(shared.lo(), k); n <= *shared.hi(); ++n) {
                CAPTURE(r);
                CAPTURE(n);
                if (weak.contains(n)) REQUIRE(strong.contains(n));
            }
        }
    }
}

TEST_CASE("coverage") {
    CHECK(coverage_check(20, {IntInterval::at_least(20)}).gaps.empty());
    CHECK_THROWS_AS(coverage_check(20, {IntInterval::closed(20, 30)}), DomainError);
    const CoverageResult c =
        coverage_check(10, {IntInterval::closed(10, 12), IntInterval::closed(15, 15), IntInterval::at_least(18)},
                       {Assumption::unconditional, Assumption::unconditional, Assumption::no_kr_subdivision});
    CHECK(c.gaps == std::vector<std::int64_t>{13, 14, 16, 17});
    CHECK(c.assumptions[2] == Assumption::no_kr_subdivision);
    CHECK_THROWS_AS(coverage_check(10, {IntInterval::at_least(10)}, {Assumption::unconditional, Assumption::unconditional}),
                    DomainError);

    const auto row24 = build_table_row(24, default_probability(24));
    CHECK(coverage_check(24, {row24.lemC, row24.ineq2, row24.thm4, row24.ineq3, row24.ineq4, row24.lem6}).gaps.empty());
    const auto row26 = build_table_row(26, default_probability(26));
    CHECK(coverage_check(26, {row26.lemC, row26.ineq2, row26.thm4, row26.ineq3, row26.ineq4, row26.lem6}).gaps ==
          std::vector<std::int64_t>{50, 51});
}
