#include <doctest.h>

#include "crcert/errors.hpp"
#include "crcert/sturm.hpp"
#include "crcert/theorems.hpp"
#include "support/properties.hpp"

using namespace crcert;
using crcert::testing::P;
using crcert::testing::Q;

TEST_CASE("root counts on closed intervals") {
    CHECK(sturm_root_count(P(Var::alpha, {-2, 0, 1}), {Q("0"), Q("2")}).count == 1);
    CHECK(sturm_root_count(P(Var::alpha, {1, 0, 1}), {Q("-10"), Q("10")}).count == 0);
    const UniPoly c4 = collect_by_degree(middle_order_poly(19))[4];
    CHECK(sturm_root_count(c4, {Q("61/40"), Q("17689/10000")}).count == 0);
}

TEST_CASE("no sign change of the p19 leading group on its window at step 1e-5") {
    const UniPoly c4 = collect_by_degree(middle_order_poly(19))[4];
    const Rational lo = Q("61/40");
    const Rational step = Q("1/100000");
    const int s0 = c4.eval(lo).sign();
    REQUIRE(s0 != 0);
    int changes = 0;
    for (Rational x = lo; x <= Q("17689/10000"); x += step) {
        if (c4.eval(x).sign() != s0) ++changes;
    }
    CHECK(changes == 0);
}

TEST_CASE("endpoint roots are flagged, not counted twice") {
    const UniPoly p = P(Var::alpha, {-4, 0, 1});
    const RootCount rc = sturm_root_count(p, {Q("-2"), Q("2")});
    CHECK(rc.count == 1);  // (-2, 2] holds only 2
    CHECK(rc.lo_is_root);
    CHECK(rc.hi_is_root);
    // repeated roots count once
    CHECK(sturm_root_count(p.pow(3), {Q("-3"), Q("3")}).count == 2);
}

TEST_CASE("unbounded intervals use the signs at infinity") {
    const UniPoly p = P(Var::alpha, {0, -1, 0, 1});  // x^3 - x
    const RootCount rc = sturm_root_count(p, ClosedRatInterval::at_least(Q("0")));
    CHECK(rc.count == 1);
    CHECK(rc.lo_is_root);
    CHECK(sturm_root_count(p, ClosedRatInterval::at_least(Q("-5"))).count == 3);
}

TEST_CASE("the zero polynomial has no root count") {
    CHECK_THROWS_AS(sturm_root_count(UniPoly(Var::alpha), {Q("0"), Q("1")}), DomainError);
}

TEST_CASE("isolation brackets are disjoint and each holds one root") {
    const UniPoly x = UniPoly::variable(Var::alpha);
    const UniPoly p = (x - UniPoly::constant(Var::alpha, 1)) * (x - UniPoly::constant(Var::alpha, 2)) *
                      (x * x - UniPoly::constant(Var::alpha, 3));
    const auto br = isolate_roots(p, {Q("-4"), Q("4")});
    REQUIRE(br.size() == 4);
    for (std::size_t i = 0; i < br.size(); ++i) {
        if (i > 0) CHECK(br[i - 1].hi < br[i].lo);
        if (br[i].exact()) {
            CHECK(p.eval(br[i].lo).is_zero());
        } else {
            CHECK(p.eval(br[i].lo).sign() != 0);
            CHECK(sturm_root_count(p, {br[i].lo, br[i].hi}).count == 1);
        }
    }
    CHECK(isolate_roots(p, ClosedRatInterval::at_least(Q("0"))).size() == 3);
    CHECK(isolate_roots(P(Var::alpha, {-1, 1}), {Q("1"), Q("2")}) == std::vector<RootBracket>{{Q("1"), Q("1")}});
}

TEST_CASE("refining pins sqrt 2") {
    const UniPoly p = P(Var::alpha, {-2, 0, 1});
    const auto br = isolate_roots(p, {Q("0"), Q("2")});
    REQUIRE(br.size() == 1);
    const RootBracket tight = refine_root(p, br[0], Q("1/1000000"));
    CHECK(tight.hi - tight.lo <= Q("1/1000000"));
    CHECK(tight.lo * tight.lo < Rational(2));
    CHECK(tight.hi * tight.hi > Rational(2));
}

TEST_CASE("every real root lies inside the Cauchy bound") {
    crcert::testing::Gen gen(31);
    for (int t = 0; t < 100; ++t) {
        const UniPoly p = gen.int_poly(Var::alpha, static_cast<int>(gen.integer(1, 6)), 100);
        const Rational b = cauchy_bound(p);
        const auto all = sturm_root_count(p, ClosedRatInterval::at_least(-b));
        const auto outside = sturm_root_count(p, ClosedRatInterval::at_least(b));
        CHECK_FALSE(all.lo_is_root);
        CHECK(outside.count == 0);
        CHECK_FALSE(outside.lo_is_root);
    }
}

TEST_CASE("Sturm counts agree with a dense scan on 1000 random polynomials") {
    const auto res = crcert::testing::sturm_matches_dense_scan();
    INFO(res.first_failure);
    INFO(res.detail);
    CHECK(res.cases == 1000);
    CHECK(res.ok());
}
