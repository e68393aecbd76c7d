#include "crcert/bounds.hpp"

#include <array>
#include <charconv>
#include <vector>

#include "crcert/errors.hpp"

namespace crcert {

namespace {

const Rational kLinearSlope(203, 9);        // (203/9)(n-2)
const Rational kCubicDenominator(687, 25);  // 27.48
const Rational kCubicThreshold(139, 20);    // 6.95

Rational q(std::int64_t v) { return Rational(v); }

UniPoly n_var() { return UniPoly::variable(Var::n); }

UniPoly n_minus(std::int64_t c) { return UniPoly::linear(Var::n, Rational(1), Rational(-c)); }

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view value_of(std::string_view field, std::string_view key, std::string_view whole) {
    if (field.size() <= key.size() || field.substr(0, key.size()) != key || field[key.size()] != '=') {
        throw ParseError("bound spec '" + std::string(whole) + "': expected " + std::string(key) + "=...");
    }
    return field.substr(key.size() + 1);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

}  // namespace

std::string to_string(EdgeBound e) {
    switch (e) {
        case EdgeBound::min_degree: return "mindeg";
        case EdgeBound::gallai: return "gallai";
        case EdgeBound::kostochka_stiebitz: return "ks";
    }
    return "?";
}

std::string to_string(Assumption a) {
    return a == Assumption::unconditional ? "unconditional" : "no-Kr-subdivision";
}

std::string to_string(CrossingVariant v) { return v == CrossingVariant::linear ? "linear" : "cubic"; }

std::string to_string(const BoundSpec& spec) {
    struct Visitor {
        std::string operator()(const SamplingBound& s) const {
            return "sampling:k=" + std::to_string(s.k) + ":edge=" + to_string(s.edge);
        }
        std::string operator()(const ProbBound& p) const {
            return "prob:p=" + p.p.to_string() + ":edge=" + to_string(p.edge);
        }
        std::string operator()(const SubdivisionWindow&) const { return "window:lemC"; }
        std::string operator()(const MiddleOrderWindow&) const { return "window:thm4"; }
    };
    return std::visit(Visitor{}, spec);
}

EdgeBound parse_edge_bound(std::string_view text) {
    if (text == "gallai") return EdgeBound::gallai;
    if (text == "ks") return EdgeBound::kostochka_stiebitz;
    if (text == "mindeg") return EdgeBound::min_degree;
    throw ParseError("unknown edge bound '" + std::string(text) + "' (expected gallai, ks or mindeg)");
}

BoundSpec parse_bound_spec(std::string_view text) {
    const auto parts = split(text, ':');
    const std::string_view head = parts.front();
    if (head == "window") {
        if (parts.size() == 2 && parts[1] == "lemC") return SubdivisionWindow{};
        if (parts.size() == 2 && parts[1] == "thm4") return MiddleOrderWindow{};
        throw ParseError("bound spec '" + std::string(text) + "': expected window:lemC or window:thm4");
    }
    if (head == "sampling") {
        if (parts.size() != 3) throw ParseError("bound spec '" + std::string(text) + "': expected sampling:k=K:edge=E");
        const std::string_view kt = value_of(parts[1], "k", text);
        int k = 0;
        auto [ptr, ec] = std::from_chars(kt.data(), kt.data() + kt.size(), k);
        if (ec != std::errc() || ptr != kt.data() + kt.size()) {
            throw ParseError("bound spec '" + std::string(text) + "': k must be an integer");
        }
        if (k < 4) throw ParseError("bound spec '" + std::string(text) + "': k must be at least 4");
        return SamplingBound{k, parse_edge_bound(value_of(parts[2], "edge", text))};
    }
    if (head == "prob") {
        if (parts.size() != 3) throw ParseError("bound spec '" + std::string(text) + "': expected prob:p=P:edge=E");
        const Rational p = Rational::parse(value_of(parts[1], "p", text));
        if (p < Rational(1, 2) || p > Rational(1)) {
            throw ParseError("bound spec '" + std::string(text) + "': p must lie in [1/2, 1]");
        }
        return ProbBound{p, parse_edge_bound(value_of(parts[2], "edge", text))};
    }
    throw ParseError("unknown bound spec '" + std::string(text) + "'");
}

Assumption assumption_of(EdgeBound e) {
    return e == EdgeBound::kostochka_stiebitz ? Assumption::no_kr_subdivision : Assumption::unconditional;
}

Assumption assumption_of(const BoundSpec& spec) {
    if (const auto* s = std::get_if<SamplingBound>(&spec)) return assumption_of(s->edge);
    if (const auto* p = std::get_if<ProbBound>(&spec)) return assumption_of(p->edge);
    return Assumption::unconditional;
}

Rational zarankiewicz_upper(std::int64_t r) {
    require(r >= 3, "zarankiewicz_upper needs r >= 3, got r = " + std::to_string(r));
    return q(r / 2) * q((r - 1) / 2) * q((r - 2) / 2) * q((r - 3) / 2) / q(4);
}

Rational crossing_lb(std::int64_t n, const Rational& m, CrossingVariant variant) {
    if (variant == CrossingVariant::linear) {
        require(n >= 3, "linear crossing bound needs n >= 3, got n = " + std::to_string(n));
        return q(5) * m - kLinearSlope * q(n - 2);
    }
    require(n >= 1, "cubic crossing bound needs n >= 1");
    require(m >= kCubicThreshold * q(n),
            "cubic crossing bound needs m >= 6.95n, got m = " + m.to_string() + ", n = " + std::to_string(n));
    return m.pow(3) / (kCubicDenominator * q(n).pow(2));
}

Rational edge_lower_bound(std::int64_t n, std::int64_t r, EdgeBound kind, Assumption assumption) {
    const std::string at = " (n = " + std::to_string(n) + ", r = " + std::to_string(r) + ")";
    switch (kind) {
        case EdgeBound::min_degree:
            require(r >= 1 && n >= r, "minimum-degree edge bound needs n >= r >= 1" + at);
            return q(n) * q(r - 1) / q(2);
        case EdgeBound::gallai:
            require(r >= 4 && n >= r + 2 && n <= 2 * r - 1, "Gallai edge bound needs r >= 4 and r+2 <= n <= 2r-1" + at);
            return (q(r - 1) * q(n) + q(n - r) * q(2 * r - n) - q(2)) / q(2);
        case EdgeBound::kostochka_stiebitz:
            require(r >= 4 && n >= r + 1, "Kostochka-Stiebitz edge bound needs r >= 4 and n >= r+1" + at);
            require(assumption == Assumption::no_kr_subdivision || n != 2 * r - 1,
                    "Kostochka-Stiebitz edge bound at n = 2r-1 needs the no-K_r-subdivision assumption" + at);
            return q(n) * q(r - 1) / q(2) + q(r - 3);
    }
    return {};
}

UniPoly edge_bound_poly(std::int64_t r, EdgeBound kind) {
    const Rational half(1, 2);
    switch (kind) {
        case EdgeBound::min_degree: return n_var() * (q(r - 1) * half);
        case EdgeBound::gallai: {
            // (n-r)(2r-n) = -(n-r)(n-2r)
            const UniPoly body = n_var() * q(r - 1) - n_minus(r) * n_minus(2 * r) - UniPoly::constant(Var::n, q(2));
            return body * half;
        }
        case EdgeBound::kostochka_stiebitz: return UniPoly::linear(Var::n, q(r - 1) * half, q(r - 3));
    }
    return UniPoly(Var::n);
}

IntInterval edge_bound_domain(std::int64_t r, EdgeBound kind) {
    switch (kind) {
        case EdgeBound::min_degree: return IntInterval::at_least(r);
        case EdgeBound::gallai: return r >= 4 ? IntInterval::closed(r + 2, 2 * r - 1) : IntInterval::empty_set();
        case EdgeBound::kostochka_stiebitz: return r >= 4 ? IntInterval::at_least(r + 1) : IntInterval::empty_set();
    }
    return {};
}

Rational sampling_lb(std::int64_t n, const Rational& m, std::int64_t k) {
    require(k >= 4 && k <= n, "sampling bound needs 4 <= k <= n, got k = " + std::to_string(k) +
                                  ", n = " + std::to_string(n));
    const Rational edges = q(5) * m * q(n - 2) * q(n - 3) / (q(k - 2) * q(k - 3));
    const Rational drawings = q(203) * q(n) * q(n - 1) * q(n - 2) * q(n - 3) / (q(9) * q(k) * q(k - 1) * q(k - 3));
    return edges - drawings;
}

UniPoly sampling_lb_poly(const UniPoly& m_of_n, std::int64_t k) {
    require(k >= 4, "sampling bound needs k >= 4, got k = " + std::to_string(k));
    const UniPoly falling = n_minus(2) * n_minus(3);
    const UniPoly edges = m_of_n * falling * (q(5) / (q(k - 2) * q(k - 3)));
    const UniPoly drawings = n_var() * n_minus(1) * falling * (q(203) / (q(9) * q(k) * q(k - 1) * q(k - 3)));
    return edges - drawings;
}

Rational prob_lb(std::int64_t n, const Rational& m, const Rational& p) {
    require(p >= Rational(1, 2) && p <= Rational(1), "probabilistic bound needs 1/2 <= p <= 1, got p = " + p.to_string());
    return q(5) * m / p.pow(2) - q(203) * q(n) / (q(9) * p.pow(3)) + q(406) / (q(9) * p.pow(4)) - Rational(1, 2);
}

UniPoly prob_lb_poly(const UniPoly& m_of_n, const Rational& p) {
    require(p >= Rational(1, 2) && p <= Rational(1), "probabilistic bound needs 1/2 <= p <= 1, got p = " + p.to_string());
    return m_of_n * (q(5) / p.pow(2)) - n_var() * (q(203) / (q(9) * p.pow(3))) +
           UniPoly::constant(Var::n, q(406) / (q(9) * p.pow(4)) - Rational(1, 2));
}

Rational immersion_deficit(std::int64_t n, std::int64_t r) {
    require(r >= 1 && n >= r, "immersion deficit needs n >= r >= 1");
    return q(n) * q(n - r) * q(n + 2 * r) / q(8);
}

Rational w_edge_average(std::int64_t n, std::int64_t r) {
    require(r >= 2 && n > r, "leftover edge average needs n > r >= 2");
    return q(r - 1) * q(n - r) * q(n - r - 1) / (q(2) * q(n - 1));
}

UniPoly bound_poly_in_n(std::int64_t r, const BoundSpec& spec) {
    const UniPoly target = UniPoly::constant(Var::n, zarankiewicz_upper(r));
    if (const auto* s = std::get_if<SamplingBound>(&spec)) {
        return sampling_lb_poly(edge_bound_poly(r, s->edge), s->k) - target;
    }
    if (const auto* p = std::get_if<ProbBound>(&spec)) {
        return prob_lb_poly(edge_bound_poly(r, p->edge), p->p) - target;
    }
    throw DomainError("bound " + to_string(spec) + " is a fixed window, not a polynomial bound");
}

std::int64_t chromatic_bound_from_cr(const Rational& c) {
    require(c.sign() >= 0, "crossing number must be nonnegative");
    const Rational need = q(256) * c;
    std::int64_t lo = 1;
    std::int64_t hi = 2;
    while (q(hi - 1).pow(4) < need) hi *= 2;
    // least u in (lo, hi] with (u-1)^4 >= need; u = 1 works when need == 0
    if (q(lo - 1).pow(4) >= need) return lo;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (q(mid - 1).pow(4) >= need) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

UniPoly large_order_margin(std::int64_t k) {
    require(k >= 4, "large-order margin needs k >= 4");
    const UniPoly inner = UniPoly::linear(Var::alpha, -q(406) / (q(9) * q(k) * q(k - 1)), q(5) / q(k - 2));
    return UniPoly::monomial(Var::alpha, Rational(1) / (q(2) * q(k - 3)), 3) * inner -
           UniPoly::constant(Var::alpha, Rational(1, 64));
}

UniPoly asymptotic_margin(std::int64_t k) {
    require(k >= 4, "asymptotic margin needs k >= 4");
    const UniPoly a = UniPoly::variable(Var::alpha);
    const UniPoly one = UniPoly::constant(Var::alpha, q(1));
    const UniPoly two = UniPoly::constant(Var::alpha, q(2));
    const UniPoly edges = (a + (a - one) * (two - a)) * a.pow(2) * (Rational(5, 2) / (q(k - 2) * q(k - 3)));
    const UniPoly drawings = a.pow(4) * (Rational(203, 9) / (q(k) * q(k - 1) * q(k - 3)));
    return edges - drawings - UniPoly::constant(Var::alpha, Rational(1, 64));
}

Rational default_probability(std::int64_t r) {
    static const std::array<int, 12> hundredths{75, 72, 68, 65, 62, 60, 58, 56, 54, 52, 50, 50};
    require(r >= 15 && r <= 26, "default probability is tabulated for 15 <= r <= 26, got r = " + std::to_string(r));
    return Rational(hundredths[static_cast<std::size_t>(r - 15)], 100);
}

}  // namespace crcert
