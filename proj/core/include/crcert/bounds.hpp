#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "crcert/intervals.hpp"
#include "crcert/poly.hpp"
#include "crcert/rational.hpp"

namespace crcert {

/// Lower bounds on the edge count of an n-vertex r-critical graph.
enum class EdgeBound {
    min_degree,          // n(r-1)/2, from minimum degree r-1
    gallai,              // ((r-1)n + (n-r)(2r-n) - 2)/2 for r+2 <= n <= 2r-1
    kostochka_stiebitz,  // n(r-1)/2 + (r-3)
};

/// What an exclusion relies on beyond r-criticality.
enum class Assumption {
    unconditional,
    no_kr_subdivision,  // G contains no subdivision of K_r
};

enum class CrossingVariant { linear, cubic };

/// Average over k-vertex induced subdrawings, crossing bound applied to each.
struct SamplingBound {
    int k = 12;
    EdgeBound edge = EdgeBound::gallai;
    friend bool operator==(const SamplingBound&, const SamplingBound&) = default;
};

/// Keep each vertex independently with probability p.
struct ProbBound {
    Rational p{1, 2};
    EdgeBound edge = EdgeBound::kostochka_stiebitz;
    friend bool operator==(const ProbBound&, const ProbBound&) = default;
};

/// Orders r..r+4, where every r-critical graph contains a subdivision of K_r.
struct SubdivisionWindow {
    friend bool operator==(const SubdivisionWindow&, const SubdivisionWindow&) = default;
};

/// Orders between 1.228r and 1.768r, handled by the middle-order quartics.
struct MiddleOrderWindow {
    friend bool operator==(const MiddleOrderWindow&, const MiddleOrderWindow&) = default;
};

using BoundSpec = std::variant<SamplingBound, ProbBound, SubdivisionWindow, MiddleOrderWindow>;

std::string to_string(EdgeBound e);
std::string to_string(Assumption a);
std::string to_string(CrossingVariant v);
/// Canonical text in the bound grammar, e.g. "sampling:k=12:edge=gallai".
std::string to_string(const BoundSpec& spec);

EdgeBound parse_edge_bound(std::string_view text);
/// Inverse of to_string(BoundSpec); also accepts decimal p such as "p=0.5".
BoundSpec parse_bound_spec(std::string_view text);

Assumption assumption_of(EdgeBound e);
Assumption assumption_of(const BoundSpec& spec);

/// floor(r/2) floor((r-1)/2) floor((r-2)/2) floor((r-3)/2) / 4, an upper bound on Cr(K_r).
Rational zarankiewicz_upper(std::int64_t r);

/// linear: 5m - (203/9)(n-2), needs n >= 3.
/// cubic: m^3 / ((687/25) n^2), needs m >= (139/20) n.
Rational crossing_lb(std::int64_t n, const Rational& m, CrossingVariant variant);

/// Kostochka-Stiebitz is valid for every n >= r+1 under `no_kr_subdivision`;
/// unconditionally it excludes n = 2r-1.
Rational edge_lower_bound(std::int64_t n, std::int64_t r, EdgeBound kind,
                          Assumption assumption = Assumption::no_kr_subdivision);

/// The same formula as a polynomial in n.
UniPoly edge_bound_poly(std::int64_t r, EdgeBound kind);

/// Orders n for which the edge bound is valid (under no_kr_subdivision).
IntInterval edge_bound_domain(std::int64_t r, EdgeBound kind);

/// 5m(n-2)(n-3)/((k-2)(k-3)) - 203 n(n-1)(n-2)(n-3)/(9k(k-1)(k-3)), for 4 <= k <= n.
Rational sampling_lb(std::int64_t n, const Rational& m, std::int64_t k);

/// sampling_lb with m replaced by a polynomial in n.
UniPoly sampling_lb_poly(const UniPoly& m_of_n, std::int64_t k);

/// 5m/p^2 - 203n/(9p^3) + 406/(9p^4) - 1/2, for 1/2 <= p <= 1.
Rational prob_lb(std::int64_t n, const Rational& m, const Rational& p);

/// prob_lb with m replaced by a polynomial in n.
UniPoly prob_lb_poly(const UniPoly& m_of_n, const Rational& p);

/// Crossings a weak immersion of K_r on n vertices may lose: n(n-r)(n+2r)/8.
Rational immersion_deficit(std::int64_t n, std::int64_t r);

/// Average edge count of the (n-r)-vertex leftover set: (r-1)(n-r)(n-r-1)/(2(n-1)).
Rational w_edge_average(std::int64_t n, std::int64_t r);

/// Crossing lower bound with the chosen edge bound substituted for m, minus
/// zarankiewicz_upper(r). Nonnegative exactly on the excluded orders.
UniPoly bound_poly_in_n(std::int64_t r, const BoundSpec& spec);

/// Least integer u with (u-1)^4 >= 256c; the chromatic number allowed by Cr(G) = c.
std::int64_t chromatic_bound_from_cr(const Rational& c);

/// alpha^3/(2(k-3)) (5/(k-2) - 406 alpha/(9k(k-1))) - 1/64: leading r^4 part of
/// the large-order sampling bound with minimum-degree edges.
UniPoly large_order_margin(std::int64_t k);

/// (5/2)(alpha + (alpha-1)(2-alpha)) alpha^2/((k-2)(k-3)) - (203/9) alpha^4/(k(k-1)(k-3)) - 1/64:
/// leading r^4 part of the middle-order sampling bound with Gallai edges.
UniPoly asymptotic_margin(std::int64_t k);

/// The per-r inclusion probability used for the table, r = 15..26.
Rational default_probability(std::int64_t r);

}  // namespace crcert
