#include <doctest.h>

#include "crcert/bounds.hpp"
#include "crcert/errors.hpp"
#include "crcert/feasible.hpp"
#include "support/properties.hpp"

using namespace crcert;
using crcert::testing::P;
using crcert::testing::Q;

TEST_CASE("single touching root") {
    const UniPoly p = -P(Var::n, {-5, 1}).pow(2);
    const FeasibleSet fs = integer_feasible_set(p, IntInterval::closed(0, 10));
    CHECK(fs.interval == IntInterval::closed(5, 5));
    // lo and hi coincide, so one witness covers both
    REQUIRE(fs.witnesses.size() == 3);
    CHECK(fs.witnesses[0] == SignWitness{4, Rational(-1)});
    CHECK(fs.witnesses[1] == SignWitness{5, Rational(0)});
    CHECK(fs.witnesses[2] == SignWitness{6, Rational(-1)});
}

TEST_CASE("sampling bound with Gallai edges at r = 15, k = 12") {
    const UniPoly p = bound_poly_in_n(15, SamplingBound{12, EdgeBound::gallai});
    CHECK(integer_feasible_set(p, IntInterval::closed(17, 29)).interval == IntInterval::closed(17, 22));
}

TEST_CASE("sampling bound with Gallai edges at r = 19, k = 22") {
    const UniPoly p = bound_poly_in_n(19, SamplingBound{22, EdgeBound::gallai});
    CHECK(integer_feasible_set(p, IntInterval::closed(22, 37)).interval == IntInterval::closed(29, 36));
}

TEST_CASE("split feasible sets raise a structured error") {
    // -(n-2)(n-4)(n-6)(n-8) >= 0 on [2,4] and [6,8]
    UniPoly p = UniPoly::constant(Var::n, -1);
    for (int a : {2, 4, 6, 8}) p *= P(Var::n, {-a, 1});
    try {
        integer_feasible_set(p, IntInterval::closed(0, 10));
        FAIL("no throw");
    } catch (const ContiguityError& e) {
        REQUIRE(e.gaps().size() == 1);
        CHECK(e.gaps()[0].first == 5);
        CHECK(e.gaps()[0].last == 5);
    }
}

TEST_CASE("empty and unbounded answers") {
    CHECK(integer_feasible_set(P(Var::n, {-1, 0, -1}), IntInterval::closed(0, 10)).interval.empty());
    const UniPoly up = P(Var::n, {-7, 1});
    CHECK(integer_feasible_set(up, IntInterval::closed(0, 20)).interval == IntInterval::at_least(7));
    CHECK(integer_feasible_set(up, IntInterval::closed(0, 20), false).interval == IntInterval::closed(7, 20));
    CHECK(integer_feasible_set(up, IntInterval::at_least(0)).interval == IntInterval::at_least(7));
    // roots past the bracket keep the answer finite: (n-7)(n-30)(n-40) dips on (30, 40)
    const UniPoly dip = up * P(Var::n, {-30, 1}) * P(Var::n, {-40, 1});
    CHECK(integer_feasible_set(dip, IntInterval::closed(7, 25)).interval == IntInterval::closed(7, 25));
    CHECK(integer_feasible_set(dip, IntInterval::closed(0, 35)).interval == IntInterval::closed(7, 30));
    CHECK_THROWS_AS(integer_feasible_set(dip, IntInterval::closed(0, 45)), ContiguityError);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(integer_feasible_set(P(Var::alpha, {1, 1}), IntInterval::closed(0, 3)), VariableMismatch);
    CHECK(integer_feasible_set(P(Var::n, {1}), IntInterval()).interval.empty());
}

TEST_CASE("every emitted interval has verified neighbour sign flips") {
    const auto res = crcert::testing::emitted_intervals_flip_sign();
    INFO(res.first_failure);
    CHECK(res.ok());
}
