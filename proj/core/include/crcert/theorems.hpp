#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "crcert/poly.hpp"
#include "crcert/sign_certificate.hpp"

namespace crcert {

enum class Relation { lt, le, eq, ge, gt };

std::string to_string(Relation rel);
Relation parse_relation(std::string_view text);

/// An exact claim `lhs rel rhs` between two rationals.
struct Comparison {
    std::string lhs_text;
    Rational lhs;
    Relation relation = Relation::eq;
    std::string rhs_text;
    Rational rhs;

    bool holds() const;
    friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// A polynomial identity, stored as the difference of its sides.
struct Identity {
    std::string lhs_text;
    std::string rhs_text;
    BiPoly difference;

    bool holds() const { return difference.is_zero(); }
    friend bool operator==(const Identity&, const Identity&) = default;
};

/// The orders at one r that no interval covers, against the expected set.
struct CoverageEvidence {
    std::int64_t r = 0;
    std::vector<std::int64_t> gaps;
    std::vector<std::int64_t> expected;

    bool holds() const { return gaps == expected; }
    friend bool operator==(const CoverageEvidence&, const CoverageEvidence&) = default;
};

using Evidence = std::variant<SignCertificate, Comparison, Identity, CoverageEvidence>;

struct Step {
    std::string description;
    Evidence evidence;
    bool pass = false;
    /// For failed steps: where the claim breaks (a point, a gap between sides,
    /// or a nonzero coefficient of an identity's difference).
    std::optional<Rational> witness;
};

struct Discrepancy {
    std::string finding;
    std::string published;
    std::string recomputed;
    std::optional<Rational> witness;
};

struct Report {
    std::string theorem;
    std::vector<Step> steps;
    bool overall = false;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> notes;
};

Step make_step(std::string description, Evidence evidence);
/// Sets `overall` from the steps.
void finalize(Report& report);

bool operator==(const SignCertificate& a, const SignCertificate& b);
bool operator==(const Step& a, const Step& b);
bool operator==(const Discrepancy& a, const Discrepancy& b);
bool operator==(const Report& a, const Report& b);

/// Middle-order quantity p_k(r, alpha): 100 times the sampling bound with
/// Gallai edges at n = alpha r, minus r(r-1)(r-2)(r-3)/64.
BiPoly middle_order_poly(std::int64_t k);

/// Published regrouping of p_k into alpha-polynomials, as printed.
struct PublishedGrouping {
    std::int64_t k;
    /// r^4, r^3, r^2 (alpha part), r^1 groups of the displayed expansion.
    std::vector<UniPoly> expansion;
    /// Coefficient of the r^3 term kept in the r^2 group.
    Rational r_linear;
    /// The separately displayed part definitions p^(4) .. p^(1).
    std::vector<UniPoly> definitions;
    Rational window_lo;
    Rational window_hi;
};

const std::vector<PublishedGrouping>& published_groupings();

/// Grouped parts q_4..q_0 of p_k with the slack c_k r^2 (r - 13) split off:
/// q_4 = c_4, q_3 = c_3 - c_k, q_2 = c_2 + 13 c_k, q_1 = c_1, q_0 = c_0.
std::vector<UniPoly> grouped_parts(std::int64_t k, const Rational& c_k);

/// c_k for k in {19, 15, 12}: the r^3 constant moved into the r^2 group.
Rational slack_constant(std::int64_t k);

/// The shortcut h-hat minorant: 15/(k-2) - 406/(9k(k-1)) * (slope*alpha - 17)/14.
UniPoly h_hat_minorant(std::int64_t k, std::int64_t slope);

/// (first, second): whether 27.48 <= (r-1)^3(n-r-1)^3/((n-1)^3 n (n+2r)) and
/// whether (r-1)(n-r-1)/(2(n-1)) >= 6.95. Needs r < n.
std::pair<bool, bool> finalish_check(std::int64_t r, std::int64_t n);

/// The exact right side of the first inequality in finalish_check.
Rational finalish_ratio(std::int64_t r, std::int64_t n);

Report verify_theorem2();
Report verify_theorem4();
Report verify_theorem6();
Report verify_theorem9();

}  // namespace crcert
