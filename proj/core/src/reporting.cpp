#include "crcert/reporting.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "crcert/bounds.hpp"
#include "crcert/errors.hpp"

namespace crcert {

using json = nlohmann::json;

namespace {

// ----- field access with errors that name the field -------------------------

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::string str_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

std::int64_t int_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return v.get<std::int64_t>();
}

bool bool_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_boolean()) throw ParseError(std::string("field '") + name + "' must be a boolean");
    return v.get<bool>();
}

const json& array_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
    return v;
}

json parse_document(std::string_view text, const char* schema) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    if (str_field(doc, "schema") != schema) {
        throw ParseError(std::string("field 'schema' must be '") + schema + "'");
    }
    return doc;
}

// ----- value encodings ------------------------------------------------------

json rat_json(const Rational& q) { return {{"den", q.denominator().get_str()}, {"num", q.numerator().get_str()}}; }

Rational rat_from(const json& j, const char* what) {
    try {
        const BigInt num(str_field(j, "num"));
        const BigInt den(str_field(j, "den"));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError(std::string("field '") + what + "' holds a malformed integer string");
    } catch (const DomainError&) {
        throw ParseError(std::string("field '") + what + "' has a zero denominator");
    }
}

Rational rat_field(const json& j, const char* name) { return rat_from(field(j, name), name); }

json opt_rat_json(const std::optional<Rational>& q) { return q ? rat_json(*q) : json(nullptr); }

std::optional<Rational> opt_rat_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (v.is_null()) return std::nullopt;
    return rat_from(v, name);
}

Var parse_var(const std::string& s) {
    if (s == "n") return Var::n;
    if (s == "alpha") return Var::alpha;
    if (s == "r") return Var::r;
    throw ParseError("field 'var' must be n, alpha or r");
}

json poly_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(rat_json(c));
    return {{"coeffs", coeffs}, {"var", to_string(p.var())}};
}

UniPoly poly_from(const json& j, const char* name) {
    std::vector<Rational> coeffs;
    for (const auto& c : array_field(j, "coeffs")) coeffs.push_back(rat_from(c, name));
    return UniPoly(parse_var(str_field(j, "var")), std::move(coeffs));
}

json rat_interval_json(const ClosedRatInterval& i) { return {{"hi", opt_rat_json(i.hi)}, {"lo", rat_json(i.lo)}}; }

ClosedRatInterval rat_interval_from(const json& j) {
    const Rational lo = rat_field(j, "lo");
    const auto hi = opt_rat_field(j, "hi");
    return hi ? ClosedRatInterval(lo, *hi) : ClosedRatInterval::at_least(lo);
}

json bracket_json(const RootBracket& b) { return {{"hi", rat_json(b.hi)}, {"lo", rat_json(b.lo)}}; }

RootBracket bracket_from(const json& j) { return {rat_field(j, "lo"), rat_field(j, "hi")}; }

SignClaim parse_claim(const std::string& s) {
    for (SignClaim c : {SignClaim::strictly_positive, SignClaim::nonnegative, SignClaim::strictly_negative,
                        SignClaim::nonpositive}) {
        if (to_string(c) == s) return c;
    }
    throw ParseError("field 'claim' has unknown value '" + s + "'");
}

IntInterval interval_field(const json& j, const char* name) {
    try {
        return IntInterval::parse(str_field(j, name));
    } catch (const ParseError& e) {
        throw ParseError(std::string("field '") + name + "': " + e.what());
    }
}

// ----- evidence -------------------------------------------------------------

json certificate_json(const SignCertificate& c) {
    json brackets = json::array();
    for (const auto& b : c.root_brackets) brackets.push_back(bracket_json(b));
    json samples = json::array();
    for (const auto& s : c.gap_samples) samples.push_back(rat_json(s));
    json refutation = nullptr;
    if (c.refutation) {
        refutation = {{"point", opt_rat_json(c.refutation->point)},
                      {"reason", c.refutation->reason},
                      {"root", c.refutation->root ? bracket_json(*c.refutation->root) : json(nullptr)}};
    }
    return {{"claim", to_string(c.claim)},
            {"gap_samples", samples},
            {"hi_value", rat_json(c.hi_value)},
            {"interior_root_count", c.interior_root_count},
            {"interval", rat_interval_json(c.interval)},
            {"kind", "sign-certificate"},
            {"lo_value", rat_json(c.lo_value)},
            {"poly", poly_json(c.poly)},
            {"refutation", refutation},
            {"root_brackets", brackets},
            {"squarefree", poly_json(c.squarefree)}};
}

SignCertificate certificate_from(const json& j) {
    SignCertificate c;
    c.claim = parse_claim(str_field(j, "claim"));
    for (const auto& s : array_field(j, "gap_samples")) c.gap_samples.push_back(rat_from(s, "gap_samples"));
    c.hi_value = rat_field(j, "hi_value");
    c.interior_root_count = static_cast<int>(int_field(j, "interior_root_count"));
    c.interval = rat_interval_from(field(j, "interval"));
    c.lo_value = rat_field(j, "lo_value");
    c.poly = poly_from(field(j, "poly"), "poly");
    const json& ref = field(j, "refutation");
    if (!ref.is_null()) {
        Refutation r;
        r.point = opt_rat_field(ref, "point");
        r.reason = str_field(ref, "reason");
        if (!field(ref, "root").is_null()) r.root = bracket_from(ref.at("root"));
        c.refutation = r;
    }
    for (const auto& b : array_field(j, "root_brackets")) c.root_brackets.push_back(bracket_from(b));
    c.squarefree = poly_from(field(j, "squarefree"), "squarefree");
    return c;
}

json evidence_json(const Evidence& e) {
    struct V {
        json operator()(const SignCertificate& c) const { return certificate_json(c); }
        json operator()(const Comparison& c) const {
            return {{"kind", "comparison"}, {"lhs", rat_json(c.lhs)},   {"lhs_text", c.lhs_text},
                    {"relation", to_string(c.relation)}, {"rhs", rat_json(c.rhs)}, {"rhs_text", c.rhs_text}};
        }
        json operator()(const Identity& i) const {
            json terms = json::array();
            for (const auto& [key, coeff] : i.difference.terms()) {
                terms.push_back({{"alpha", key.second}, {"coeff", rat_json(coeff)}, {"r", key.first}});
            }
            return {{"difference", terms}, {"kind", "identity"}, {"lhs_text", i.lhs_text}, {"rhs_text", i.rhs_text}};
        }
        json operator()(const CoverageEvidence& c) const {
            return {{"expected", c.expected}, {"gaps", c.gaps}, {"kind", "coverage"}, {"r", c.r}};
        }
    };
    return std::visit(V{}, e);
}

std::vector<std::int64_t> int_list(const json& j, const char* name) {
    std::vector<std::int64_t> out;
    for (const auto& v : array_field(j, name)) {
        if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must hold integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

Evidence evidence_from(const json& j) {
    const std::string kind = str_field(j, "kind");
    if (kind == "sign-certificate") return certificate_from(j);
    if (kind == "comparison") {
        return Comparison{str_field(j, "lhs_text"), rat_field(j, "lhs"), parse_relation(str_field(j, "relation")),
                          str_field(j, "rhs_text"), rat_field(j, "rhs")};
    }
    if (kind == "identity") {
        BiPoly diff;
        for (const auto& t : array_field(j, "difference")) {
            diff += BiPoly::term(rat_field(t, "coeff"), static_cast<unsigned>(int_field(t, "r")),
                                 static_cast<unsigned>(int_field(t, "alpha")));
        }
        return Identity{str_field(j, "lhs_text"), str_field(j, "rhs_text"), diff};
    }
    if (kind == "coverage") return CoverageEvidence{int_field(j, "r"), int_list(j, "gaps"), int_list(j, "expected")};
    throw ParseError("field 'kind' has unknown value '" + kind + "'");
}

std::string evidence_summary(const Evidence& e) {
    struct V {
        std::string operator()(const SignCertificate& c) const {
            std::string s = to_string(c.claim) + " on " + c.interval.to_string() + ", " +
                            std::to_string(c.root_brackets.size()) + " root(s) isolated";
            if (c.refutation) s += "; refuted: " + c.refutation->reason;
            return s;
        }
        std::string operator()(const Comparison& c) const {
            return c.lhs.to_string() + " " + to_string(c.relation) + " " + c.rhs.to_string();
        }
        std::string operator()(const Identity& i) const {
            return i.holds() ? "difference is 0" : "difference " + i.difference.to_string();
        }
        std::string operator()(const CoverageEvidence& c) const {
            auto list = [](const std::vector<std::int64_t>& v) {
                std::string s = "{";
                for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
                return s + "}";
            };
            return "uncovered " + list(c.gaps) + ", expected " + list(c.expected);
        }
    };
    return std::visit(V{}, e);
}

// ----- csv / text helpers ---------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
    return out + "\n";
}

// Columns padded to their widest cell; `right` marks right-aligned columns.
std::string text_table(const std::vector<std::vector<std::string>>& lines, const std::vector<bool>& right) {
    std::vector<std::size_t> width(right.size(), 0);
    for (const auto& l : lines) {
        for (std::size_t i = 0; i < l.size(); ++i) width[i] = std::max(width[i], l[i].size());
    }
    std::string out;
    for (const auto& l : lines) {
        std::string line;
        for (std::size_t i = 0; i < l.size(); ++i) {
            const std::string pad(width[i] - l[i].size(), ' ');
            if (i) line += "  ";
            line += right[i] ? pad + l[i] : l[i] + pad;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string join_orders(const std::vector<std::int64_t>& v, const char* sep) {
    if (v.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    if (text == "text") return OutputFormat::text;
    throw ParseError("unknown output format '" + std::string(text) + "' (expected csv, json or text)");
}

std::string display_probability(const Rational& p) {
    const std::string fixed = p.to_fixed(2);
    return rational_from_decimal(fixed) == p ? fixed : p.to_string();
}

// ----- table ----------------------------------------------------------------

std::string emit_table(const std::vector<TableRow>& rows, OutputFormat fmt) {
    if (rows.empty()) throw DomainError("no table rows to emit");
    if (fmt == OutputFormat::json) {
        json arr = json::array();
        for (const auto& row : rows) {
            arr.push_back({{"cr_upper", row.cr_upper},
                           {"ineq2", row.ineq2.to_string()},
                           {"ineq3", row.ineq3.to_string()},
                           {"ineq4", row.ineq4.to_string()},
                           {"lem6", row.lem6.to_string()},
                           {"lemC", row.lemC.to_string()},
                           {"p", rat_json(row.p)},
                           {"possible_n", row.possible_n},
                           {"r", row.r},
                           {"thm4", row.thm4.to_string()}});
        }
        return json{{"rows", arr}, {"schema", "table-v1"}}.dump() + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::string out = csv_line({"r", "cr_upper", "lemC", "ineq2", "thm4", "ineq3", "ineq4", "lem6", "p", "possible_n"});
        for (const auto& row : rows) {
            out += csv_line({std::to_string(row.r), std::to_string(row.cr_upper), row.lemC.to_string(),
                             row.ineq2.to_string(), row.thm4.to_string(), row.ineq3.to_string(), row.ineq4.to_string(),
                             row.lem6.to_string(), display_probability(row.p), join_orders(row.possible_n, ",")});
        }
        return out;
    }
    std::vector<std::vector<std::string>> lines{
        {"r", "Cr(K_r)<=", "Lem C", "Ineq 2", "Thm 4", "Ineq 3", "Ineq 4", "Lem 6", "p", "possible n"}};
    for (const auto& row : rows) {
        lines.push_back({std::to_string(row.r), std::to_string(row.cr_upper), row.lemC.to_string(),
                         row.ineq2.to_string(), row.thm4.to_string(), row.ineq3.to_string(), row.ineq4.to_string(),
                         row.lem6.to_string(), display_probability(row.p), join_orders(row.possible_n, ", ")});
    }
    return text_table(lines, {true, true, false, false, false, false, false, false, false, false});
}

std::vector<TableRow> parse_table_json(std::string_view text) {
    const json doc = parse_document(text, "table-v1");
    std::vector<TableRow> rows;
    for (const auto& j : array_field(doc, "rows")) {
        TableRow row;
        row.r = int_field(j, "r");
        row.cr_upper = int_field(j, "cr_upper");
        row.lemC = interval_field(j, "lemC");
        row.ineq2 = interval_field(j, "ineq2");
        row.thm4 = interval_field(j, "thm4");
        row.ineq3 = interval_field(j, "ineq3");
        row.ineq4 = interval_field(j, "ineq4");
        row.lem6 = interval_field(j, "lem6");
        row.p = rat_field(j, "p");
        row.possible_n = int_list(j, "possible_n");
        rows.push_back(std::move(row));
    }
    return rows;
}

// ----- reports --------------------------------------------------------------

std::string emit_report(const Report& report, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json steps = json::array();
        for (const auto& s : report.steps) {
            steps.push_back({{"description", s.description},
                             {"evidence", evidence_json(s.evidence)},
                             {"pass", s.pass},
                             {"witness", opt_rat_json(s.witness)}});
        }
        json disc = json::array();
        for (const auto& d : report.discrepancies) {
            disc.push_back({{"finding", d.finding},
                            {"published", d.published},
                            {"recomputed", d.recomputed},
                            {"witness", opt_rat_json(d.witness)}});
        }
        return json{{"discrepancies", disc},     {"notes", report.notes}, {"overall", report.overall},
                    {"schema", "report-v1"},     {"steps", steps},        {"theorem", report.theorem}}
                   .dump() +
               "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::string out = csv_line({"step", "pass", "description", "evidence", "witness"});
        for (std::size_t i = 0; i < report.steps.size(); ++i) {
            const Step& s = report.steps[i];
            out += csv_line({std::to_string(i + 1), s.pass ? "pass" : "FAIL", s.description,
                             evidence_summary(s.evidence), s.witness ? s.witness->to_string() : ""});
        }
        return out;
    }
    std::ostringstream os;
    os << report.theorem << ": " << (report.overall ? "PASS" : "FAIL") << "\n";
    for (const auto& s : report.steps) {
        os << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.description << "\n";
        os << "        " << evidence_summary(s.evidence);
        if (s.witness) os << "; witness " << s.witness->to_string();
        os << "\n";
    }
    if (!report.discrepancies.empty()) {
        os << "discrepancies:\n";
        for (const auto& d : report.discrepancies) {
            os << "  - " << d.finding << "\n";
            os << "      published:  " << d.published << "\n";
            os << "      recomputed: " << d.recomputed << "\n";
            if (d.witness) os << "      witness:    " << d.witness->to_string() << "\n";
        }
    }
    if (!report.notes.empty()) {
        os << "notes:\n";
        for (const auto& n : report.notes) os << "  - " << n << "\n";
    }
    return os.str();
}

Report parse_report_json(std::string_view text) {
    const json doc = parse_document(text, "report-v1");
    Report rep;
    rep.theorem = str_field(doc, "theorem");
    rep.overall = bool_field(doc, "overall");
    for (const auto& s : array_field(doc, "steps")) {
        rep.steps.push_back(
            {str_field(s, "description"), evidence_from(field(s, "evidence")), bool_field(s, "pass"), opt_rat_field(s, "witness")});
    }
    for (const auto& d : array_field(doc, "discrepancies")) {
        rep.discrepancies.push_back(
            {str_field(d, "finding"), str_field(d, "published"), str_field(d, "recomputed"), opt_rat_field(d, "witness")});
    }
    for (const auto& n : array_field(doc, "notes")) {
        if (!n.is_string()) throw ParseError("field 'notes' must hold strings");
        rep.notes.push_back(n.get<std::string>());
    }
    return rep;
}

// ----- plot grids -----------------------------------------------------------

const std::vector<std::string>& plot_targets() {
    static const std::vector<std::string> targets{"f-of-alpha-k", "p19-parts", "p15-parts", "p12-parts"};
    return targets;
}

PlotGrid make_plot_grid(const std::string& target, const std::optional<ClosedRatInterval>& alpha_range,
                        const std::optional<Rational>& step) {
    PlotGrid g;
    g.target = target;
    std::vector<UniPoly> curves;
    if (target == "f-of-alpha-k") {
        g.alpha_range = alpha_range.value_or(ClosedRatInterval(rational_from_decimal("1.1"), rational_from_decimal("2.0")));
        g.step = step.value_or(Rational(1, 100));
        g.series_range = ClosedRatInterval(Rational(10), Rational(24));
        for (std::int64_t k = 10; k <= 24; ++k) {
            g.series.push_back("k=" + std::to_string(k));
            curves.push_back(asymptotic_margin(k));
        }
    } else if (target == "p19-parts" || target == "p15-parts" || target == "p12-parts") {
        const std::int64_t k = target == "p19-parts" ? 19 : (target == "p15-parts" ? 15 : 12);
        const char* lo = k == 19 ? "1.600" : (k == 15 ? "1.30" : "1.20");
        const char* hi = k == 19 ? "1.775" : (k == 15 ? "1.65" : "1.45");
        g.alpha_range = alpha_range.value_or(ClosedRatInterval(rational_from_decimal(lo), rational_from_decimal(hi)));
        g.step = step.value_or(Rational(1, 1000));
        g.series_range = ClosedRatInterval(Rational(0), Rational(4));
        curves = grouped_parts(k, slack_constant(k));
        for (int i = 4; i >= 0; --i) g.series.push_back("q" + std::to_string(i));
    } else {
        throw DomainError("unknown plot target '" + target + "'");
    }
    if (g.step.sign() <= 0) throw DomainError("plot step must be positive, got " + g.step.to_string());
    if (!g.alpha_range.hi) throw DomainError("plot range must be bounded");

    for (Rational a = g.alpha_range.lo; a <= *g.alpha_range.hi; a += g.step) g.alphas.push_back(a);
    for (const auto& c : curves) {
        std::vector<Rational> row;
        row.reserve(g.alphas.size());
        for (const auto& a : g.alphas) row.push_back(c.eval(a));
        g.samples.push_back(std::move(row));
    }
    return g;
}

std::string emit_plot_grid(const PlotGrid& g, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json alphas = json::array();
        for (const auto& a : g.alphas) alphas.push_back(rat_json(a));
        json samples = json::array();
        for (const auto& row : g.samples) {
            json r = json::array();
            for (const auto& v : row) r.push_back(rat_json(v));
            samples.push_back(r);
        }
        return json{{"alpha_range", rat_interval_json(g.alpha_range)},
                    {"alphas", alphas},
                    {"samples", samples},
                    {"schema", "grid-v1"},
                    {"series", g.series},
                    {"series_range", rat_interval_json(g.series_range)},
                    {"step", rat_json(g.step)},
                    {"target", g.target}}
                   .dump() +
               "\n";
    }
    std::vector<std::vector<std::string>> lines;
    std::vector<std::string> header{"alpha"};
    header.insert(header.end(), g.series.begin(), g.series.end());
    lines.push_back(header);
    for (std::size_t i = 0; i < g.alphas.size(); ++i) {
        const bool exact = fmt == OutputFormat::csv;
        std::vector<std::string> line{exact ? g.alphas[i].to_string() : g.alphas[i].to_decimal(6)};
        for (const auto& row : g.samples) line.push_back(exact ? row[i].to_string() : row[i].to_decimal(6));
        lines.push_back(std::move(line));
    }
    if (fmt == OutputFormat::csv) {
        std::string out;
        for (const auto& l : lines) out += csv_line(l);
        return out;
    }
    return text_table(lines, std::vector<bool>(header.size(), true));
}

PlotGrid parse_plot_grid_json(std::string_view text) {
    const json doc = parse_document(text, "grid-v1");
    PlotGrid g;
    g.target = str_field(doc, "target");
    g.alpha_range = rat_interval_from(field(doc, "alpha_range"));
    g.series_range = rat_interval_from(field(doc, "series_range"));
    g.step = rat_field(doc, "step");
    for (const auto& s : array_field(doc, "series")) {
        if (!s.is_string()) throw ParseError("field 'series' must hold strings");
        g.series.push_back(s.get<std::string>());
    }
    for (const auto& a : array_field(doc, "alphas")) g.alphas.push_back(rat_from(a, "alphas"));
    for (const auto& row : array_field(doc, "samples")) {
        if (!row.is_array()) throw ParseError("field 'samples' must hold arrays");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rat_from(v, "samples"));
        if (r.size() != g.alphas.size()) throw ParseError("field 'samples' row length differs from 'alphas'");
        g.samples.push_back(std::move(r));
    }
    if (g.samples.size() != g.series.size()) throw ParseError("field 'samples' needs one row per series");
    return g;
}

}  // namespace crcert
