#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "crcert/errors.hpp"
#include "crcert/reporting.hpp"
#include "support/properties.hpp"

using namespace crcert;
using crcert::testing::Q;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Splits one csv line, honouring double-quoted fields.
std::vector<std::string> csv_cells(const std::string& line) {
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"') {
            if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
                cells.back() += '"';
                ++i;
            } else {
                quoted = !quoted;
            }
        } else if (c == ',' && !quoted) {
            cells.emplace_back();
        } else {
            cells.back() += c;
        }
    }
    return cells;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("text table matches the committed golden file byte for byte") {
    CHECK(emit_table(build_table(15, 26), OutputFormat::text) == read_file(CRCERT_GOLDEN_DIR "/table1.txt"));
}

TEST_CASE("csv table has a header and ten columns per row") {
    const auto ls = lines(emit_table(build_table(15, 26), OutputFormat::csv));
    REQUIRE(ls.size() == 13);
    CHECK(ls[0] == "r,cr_upper,lemC,ineq2,thm4,ineq3,ineq4,lem6,p,possible_n");
    for (const auto& l : ls) CHECK(csv_cells(l).size() == 10);
    CHECK(csv_cells(ls[12])[9] == "50,51");
    CHECK(csv_cells(ls[1])[9] == "-");
    CHECK(csv_cells(ls[11])[7] == "[54,oo)");
}

TEST_CASE("json table is canonical and round trips") {
    const auto rows = build_table(15, 26);
    const std::string text = emit_table(rows, OutputFormat::json);
    REQUIRE(text.back() == '\n');
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump() + "\n" == text);  // sorted keys, no spacing
    CHECK(parsed["schema"] == "table-v1");
    CHECK(parsed["rows"][0]["p"]["num"] == "3");
    CHECK(parsed["rows"][0]["p"]["den"] == "4");
    CHECK(parse_table_json(text) == rows);

    const auto one = parse_table_json(emit_table({rows[10]}, OutputFormat::json));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == rows[10]);
}

TEST_CASE("emitted table follows the committed table-v1 schema") {
    const auto schema = nlohmann::json::parse(read_file(CRCERT_DOCS_DIR "/table-v1.schema.json"));
    const auto doc = nlohmann::json::parse(emit_table(build_table(15, 26), OutputFormat::json));
    const auto& row_schema = schema["properties"]["rows"]["items"];
    const std::regex interval(schema["$defs"]["interval"]["pattern"].get<std::string>());
    const std::regex integer(schema["$defs"]["rational"]["properties"]["num"]["pattern"].get<std::string>());
    std::set<std::string> required;
    for (const auto& k : row_schema["required"]) required.insert(k.get<std::string>());
    CHECK(doc["schema"] == schema["properties"]["schema"]["const"]);
    for (const auto& row : doc["rows"]) {
        std::set<std::string> keys;
        for (const auto& [k, v] : row.items()) keys.insert(k);
        CHECK(keys == required);
        for (const char* col : {"lemC", "ineq2", "thm4", "ineq3", "ineq4", "lem6"}) {
            CHECK(std::regex_match(row[col].get<std::string>(), interval));
        }
        CHECK(std::regex_match(row["p"]["num"].get<std::string>(), integer));
    }
}

// What an independent producer might write: spacing, other key order, a
// non-reduced rational. Reading normalizes all three.
TEST_CASE("a hand-written table-v1 document reads back as engine rows") {
    const std::string doc = R"json({
  "schema": "table-v1",
  "rows": [
    {"r": 25, "p": {"num": "50", "den": "100"}, "cr_upper": 4356,
     "lemC": "[25,29]", "ineq2": "[30,36]", "thm4": "[31,44]",
     "ineq3": "[39,47]", "ineq4": "[49,55]", "lem6": "[54,oo)",
     "possible_n": [48]}
  ]
})json";
    const auto rows = parse_table_json(doc);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == build_table(25, 25)[0]);
}

TEST_CASE("distinct rows serialize differently") {
    auto rows = build_table(15, 26);
    TableRow tweaked = rows[0];
    tweaked.p = Q("3/5");
    rows.push_back(tweaked);
    tweaked.possible_n = {30};
    rows.push_back(tweaked);
    tweaked.thm4 = IntInterval();
    rows.push_back(tweaked);
    std::set<std::string> seen;
    for (const auto& row : rows) seen.insert(emit_table({row}, OutputFormat::json));
    CHECK(seen.size() == rows.size());
}

TEST_CASE("emitting is deterministic and refuses nothing to emit") {
    const auto rows = build_table(20, 22);
    for (auto fmt : {OutputFormat::csv, OutputFormat::json, OutputFormat::text}) {
        CHECK(emit_table(rows, fmt) == emit_table(build_table(20, 22), fmt));
    }
    CHECK_THROWS_AS(emit_table({}, OutputFormat::text), DomainError);
}

TEST_CASE("malformed table json names the field") {
    CHECK_THROWS_AS(parse_table_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_table_json(R"({"rows":[],"schema":"other"})"), ParseError);
    const std::string good = emit_table(build_table(15, 15), OutputFormat::json);
    auto j = nlohmann::json::parse(good);
    j["rows"][0]["ineq2"] = "[17,";
    try {
        parse_table_json(j.dump());
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("ineq2") != std::string::npos);
    }
    j = nlohmann::json::parse(good);
    j["rows"][0]["p"]["den"] = "0";
    CHECK_THROWS_AS(parse_table_json(j.dump()), ParseError);
    j = nlohmann::json::parse(good);
    j["rows"][0].erase("r");
    CHECK_THROWS_AS(parse_table_json(j.dump()), ParseError);
}

TEST_CASE("reports in every format") {
    const Report rep = verify_theorem6();
    const std::string text = emit_report(rep, OutputFormat::text);
    CHECK(text.rfind("thm6: PASS\n", 0) == 0);
    CHECK(text.find("uncovered {48}") != std::string::npos);
    const auto csv = lines(emit_report(rep, OutputFormat::csv));
    CHECK(csv.size() == rep.steps.size() + 1);
    for (const auto& l : csv) CHECK(csv_cells(l).size() == 5);
    const std::string js = emit_report(rep, OutputFormat::json);
    CHECK(nlohmann::json::parse(js).dump() + "\n" == js);
    CHECK(parse_report_json(js) == rep);
}

TEST_CASE("every emitted structure round trips through json") {
    const auto res = crcert::testing::json_round_trips();
    INFO(res.first_failure);
    CHECK(res.ok());
}

TEST_CASE("probability display") {
    CHECK(display_probability(Q("3/4")) == "0.75");
    CHECK(display_probability(Q("3/5")) == "0.60");
    CHECK(display_probability(Q("1")) == "1.00");
    CHECK(display_probability(Q("2/3")) == "2/3");
}

TEST_CASE("sample grid of the middle-order margin") {
    const PlotGrid g = make_plot_grid("f-of-alpha-k");
    CHECK(g.alphas.size() == 91);
    REQUIRE(g.series.size() == 15);
    CHECK(g.series.front() == "k=10");
    for (const auto& row : g.samples) CHECK(row.size() == g.alphas.size());
    auto at = [&](const char* alpha, std::int64_t k) {
        const auto i = std::find(g.alphas.begin(), g.alphas.end(), Q(alpha)) - g.alphas.begin();
        REQUIRE(i < static_cast<std::ptrdiff_t>(g.alphas.size()));
        return g.samples[static_cast<std::size_t>(k - 10)][static_cast<std::size_t>(i)];
    };
    CHECK(at("1.23", 12) >= 0);
    CHECK(at("1.77", 12) < 0);
    // The largest feasible alpha sits just below 1.77: k = 19 is still
    // nonnegative at 1.7689 but already negative at 1.77.
    CHECK(at("1.77", 19) == Q("-8175853/516800000000"));
    CHECK(asymptotic_margin(19).eval(Q("1.7689")) >= 0);
}

TEST_CASE("parts grids straddle the window edge") {
    const PlotGrid g = make_plot_grid("p19-parts", ClosedRatInterval(Q("1.7688"), Q("1.7690")), Q("0.0001"));
    REQUIRE(g.alphas.size() == 3);
    CHECK(g.series.front() == "q4");
    CHECK(g.samples[0][0] > 0);
    CHECK(g.samples[0][1] > 0);
    CHECK(g.samples[0][2] < 0);
    CHECK(make_plot_grid("p12-parts").series.size() == 5);
}

TEST_CASE("grid preconditions and formats") {
    CHECK_THROWS_AS(make_plot_grid("f-of-alpha-k", std::nullopt, Q("0")), DomainError);
    CHECK_THROWS_AS(make_plot_grid("f-of-alpha-k", std::nullopt, Q("-1/10")), DomainError);
    CHECK_THROWS_AS(make_plot_grid("nope"), DomainError);
    const PlotGrid g = make_plot_grid("p15-parts", ClosedRatInterval(Q("1.3"), Q("1.4")), Q("1/20"));
    const auto csv = lines(emit_plot_grid(g, OutputFormat::csv));
    REQUIRE(csv.size() == 4);
    CHECK(csv_cells(csv[0]).size() == 6);
    const std::string js = emit_plot_grid(g, OutputFormat::json);
    CHECK(nlohmann::json::parse(js)["schema"] == "grid-v1");
    CHECK(parse_plot_grid_json(js) == g);
    CHECK_FALSE(emit_plot_grid(g, OutputFormat::text).empty());
}

TEST_CASE("format names") {
    CHECK(parse_output_format("csv") == OutputFormat::csv);
    CHECK(parse_output_format("json") == OutputFormat::json);
    CHECK(parse_output_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_output_format("xml"), ParseError);
}
