#include <doctest.h>

#include <algorithm>

#include "crcert/bounds.hpp"
#include "crcert/errors.hpp"
#include "crcert/theorems.hpp"
#include "support/support.hpp"

using namespace crcert;
using crcert::testing::P;
using crcert::testing::Q;

namespace {

bool has_finding(const Report& rep, const std::string& needle) {
    return std::any_of(rep.discrepancies.begin(), rep.discrepancies.end(),
                       [&](const Discrepancy& d) { return d.finding.find(needle) != std::string::npos; });
}

bool has_published(const Report& rep, const std::string& value) {
    return std::any_of(rep.discrepancies.begin(), rep.discrepancies.end(),
                       [&](const Discrepancy& d) { return d.published == value; });
}

const Step* find_step(const Report& rep, const std::string& needle) {
    for (const auto& s : rep.steps) {
        if (s.description.find(needle) != std::string::npos) return &s;
    }
    return nullptr;
}

void check_consistent(const Report& rep) {
    REQUIRE_FALSE(rep.steps.empty());
    bool all = true;
    for (const auto& s : rep.steps) {
        CAPTURE(s.description);
        all = all && s.pass;
        if (!s.pass) CHECK(s.witness.has_value());
        if (const auto* cert = std::get_if<SignCertificate>(&s.evidence)) CHECK(verify(*cert) == s.pass);
    }
    CHECK(rep.overall == all);
}

}  // namespace

TEST_CASE("large-order verifier") {
    const Report rep = verify_theorem2();
    check_consistent(rep);
    CHECK(rep.overall);
    CHECK(rep.theorem == "thm2");
    REQUIRE(find_step(rep, "k=36") != nullptr);
    REQUIRE(find_step(rep, "k=40") != nullptr);
    CHECK(has_finding(rep, "k=40 minorant (19 alpha - 17)/14"));
    CHECK(has_finding(rep, "r >= 19"));
    CHECK(has_published(rep, "2.812"));
}

TEST_CASE("large-order pieces") {
    // the k = 40 quartic turns negative past its window
    CHECK(large_order_margin(40).eval(Q("3.9")) < 0);
    // displayed k = 40 minorant at the end of its window
    CHECK(h_hat_minorant(40, 19).eval(Q("3.5")) >= 0);
    CHECK(h_hat_minorant(36, 59).eval(Q("3.21")) >= 0);
    CHECK(h_hat_minorant(36, 59).eval(Q("3.22")) < 0);
    // case-1 threshold: alpha = 687/200 balances the cubic lemma's constant exactly
    CHECK(Q("687/200") / (Rational(8) * Q("687/25")) == Q("1/64"));
    CHECK(Rational(15 - 1) / Rational(2) >= Q("6.95"));
}

TEST_CASE("middle-order verifier") {
    const Report rep = verify_theorem4();
    check_consistent(rep);
    CHECK(rep.overall);
    for (const char* k : {"k=19: ", "k=15: ", "k=12: "}) {
        const Step* slack = find_step(rep, std::string(k) + "p_k - sum r^i q_i = c_k r^2 (r - 13)");
        REQUIRE(slack != nullptr);
        CHECK(slack->pass);
        CHECK(std::holds_alternative<Identity>(slack->evidence));
    }
    for (const char* s : {"k=12 window starts", "k=12 and k=15", "k=15 and k=19", "k=19 window ends"}) {
        const Step* step = find_step(rep, s);
        REQUIRE(step != nullptr);
        CHECK(step->pass);
    }
    // the sign flip of 500/13 between the displayed expansion and the p^(2) definition
    for (const char* k : {"k=15: part p^(2) definition", "k=12: part p^(2) definition"}) {
        CAPTURE(k);
        auto it = std::find_if(rep.discrepancies.begin(), rep.discrepancies.end(),
                               [&](const Discrepancy& d) { return d.finding.rfind(k, 0) == 0; });
        REQUIRE(it != rep.discrepancies.end());
    }
    const auto d15 = std::find_if(rep.discrepancies.begin(), rep.discrepancies.end(), [](const Discrepancy& d) {
        return d.finding.rfind("k=15: part p^(2) definition", 0) == 0;
    });
    CHECK(d15->published.find("500/13") != std::string::npos);
    CHECK(has_finding(rep, "omits a nonzero r^0 term"));
    CHECK(has_published(rep, "1.212"));
}

TEST_CASE("slack constants and grouped parts") {
    CHECK(slack_constant(19) == Q("15/8"));
    CHECK(slack_constant(15) == Q("5/8"));
    CHECK(slack_constant(12) == Q("3/4"));
    CHECK_THROWS_AS(slack_constant(13), DomainError);

    for (std::int64_t k : {19, 15, 12}) {
        const BiPoly p = middle_order_poly(k);
        const auto q = grouped_parts(k, slack_constant(k));
        BiPoly sum;
        for (std::size_t i = 0; i < q.size(); ++i) sum += BiPoly::term(1, static_cast<unsigned>(4 - i), 0) * BiPoly::from(q[i]);
        const BiPoly slack = BiPoly::term(slack_constant(k), 3, 0) - BiPoly::term(slack_constant(k) * 13, 2, 0);
        CHECK(p - sum == slack);
    }
    // recomputed q_2 for k = 15 is already negative at the window's left end
    CHECK(grouped_parts(15, slack_constant(15))[2].eval(Q("1.314")) == Q("-152763/50000"));
}

TEST_CASE("middle-order polynomial matches its definition pointwise") {
    crcert::testing::Gen gen(23);
    for (std::int64_t k : {12, 15, 19}) {
        const BiPoly p = middle_order_poly(k);
        for (int t = 0; t < 20; ++t) {
            const std::int64_t r = gen.integer(13, 200);
            const Rational a = gen.rational(1, 2, 50);
            const Rational n = a * Rational(r);
            const Rational m = (Rational(r - 1) * n + (n - Rational(r)) * (Rational(2 * r) - n) - Rational(2)) / Rational(2);
            const Rational kk(k);
            const Rational bound = Rational(5) * m * (n - 2) * (n - 3) / ((kk - 2) * (kk - 3)) -
                                   Rational(203) * n * (n - 1) * (n - 2) * (n - 3) / (Rational(9) * kk * (kk - 1) * (kk - 3));
            const Rational target = Rational(r) * Rational(r - 1) * Rational(r - 2) * Rational(r - 3) / Rational(64);
            REQUIRE(p.eval(Rational(r), a) == Rational(100) * (bound - target));
        }
    }
}

TEST_CASE("small-order-gap verifier") {
    const Report rep = verify_theorem6();
    check_consistent(rep);
    CHECK(rep.overall);
    const Step* r25 = find_step(rep, "r=25");
    REQUIRE(r25 != nullptr);
    const auto& cov = std::get<CoverageEvidence>(r25->evidence);
    CHECK(cov.gaps == std::vector<std::int64_t>{48});
    const Step* r26 = find_step(rep, "r=26");
    REQUIRE(r26 != nullptr);
    CHECK(std::get<CoverageEvidence>(r26->evidence).gaps == std::vector<std::int64_t>{50, 51});
    CHECK(std::get<CoverageEvidence>(find_step(rep, "r=21")->evidence).gaps.empty());
}

TEST_CASE("near-order verifier") {
    const Report rep = verify_theorem9();
    check_consistent(rep);
    CHECK(rep.overall);
    CHECK(BigInt(25000000) > BigInt(55) * 453871);
    CHECK(Rational(330000000) > Q("55/2") * Rational(11863341));
    CHECK(Q("12499/12500").pow(6) >= Q("1374/1375"));
    const UniPoly quad = P(Var::alpha, {8, 3, -2});
    CHECK(certify_sign(quad, {Q("21/20"), Q("123/100")}, SignClaim::strictly_positive).valid());
    // the endpoint products restate 0.1^3 * 125000 / (1.1^4 * 3.1) > 27.5
    CHECK(Q("0.1").pow(3) * Rational(125000) / (Q("1.1").pow(4) * Q("3.1")) > Q("27.5"));
    CHECK(Q("0.05").pow(3) * Rational(825000) / (Q("1.05").pow(4) * Q("3.05")) > Q("27.5"));
}

TEST_CASE("near-order inequality pair") {
    CHECK(finalish_check(125000, 137500) == std::pair{true, true});
    CHECK(finalish_check(20, 22).first == false);
    CHECK(finalish_check(825000, 866250) == std::pair{true, true});
    CHECK_THROWS_AS(finalish_check(20, 20), DomainError);
    CHECK(finalish_ratio(20, 22) < Q("27.48"));
    CHECK(finalish_ratio(125000, 137500) * Rational(137500) * Rational(137500 + 250000) ==
          Rational(124999).pow(3) * Rational(12499).pow(3) / Rational(137499).pow(3));
}

TEST_CASE("failed steps carry witnesses") {
    const Step bad = make_step("2 > 3", Evidence{Comparison{"2", Rational(2), Relation::gt, "3", Rational(3)}});
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness);
    CHECK(*bad.witness == -1);

    const Step neg = make_step("x - 2 >= 0 on [0, 1]",
                               certify_sign(P(Var::alpha, {-2, 1}), {Q("0"), Q("1")}, SignClaim::nonnegative));
    CHECK_FALSE(neg.pass);
    REQUIRE(neg.witness);
    CHECK(P(Var::alpha, {-2, 1}).eval(*neg.witness) < 0);

    Report rep;
    rep.steps = {bad};
    finalize(rep);
    CHECK_FALSE(rep.overall);
}
