#include "crcert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <variant>

#include "crcert/bounds.hpp"
#include "crcert/certifier.hpp"
#include "crcert/errors.hpp"
#include "crcert/reporting.hpp"
#include "crcert/theorems.hpp"

namespace crcert::cli {

namespace {

struct TableArgs {
    std::int64_t rmin = 15;
    std::int64_t rmax = 26;
    std::string format = "text";
    std::string p;
};

struct VerifyArgs {
    std::string target;
    std::string format = "text";
};

struct ExcludeArgs {
    std::int64_t r = 0;
    std::string bound;
};

struct EvalArgs {
    std::string bound;
    std::optional<std::int64_t> r;
    std::int64_t n = 0;
    std::string m;
};

struct PlotArgs {
    std::string target;
    std::string out;
    std::string format = "json";
    std::string alpha_lo;
    std::string alpha_hi;
    std::string step;
};

const char* extension(OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
        case OutputFormat::text: return "txt";
    }
    return "txt";
}

std::string decimal(const Rational& x) { return x.to_decimal(6); }

int do_table(const TableArgs& a, std::ostream& out) {
    const OutputFormat fmt = parse_output_format(a.format);
    std::optional<Rational> p;
    if (!a.p.empty()) p = Rational::parse(a.p);
    out << emit_table(build_table(a.rmin, a.rmax, p), fmt);
    return ok;
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const OutputFormat fmt = parse_output_format(a.format);
    const std::vector<std::pair<std::string, std::function<Report()>>> all = {
        {"thm2", verify_theorem2},
        {"thm4", verify_theorem4},
        {"thm6", verify_theorem6},
        {"thm9", verify_theorem9},
    };
    bool pass = true;
    bool first = true;
    for (const auto& [name, fn] : all) {
        if (a.target != "all" && a.target != name) continue;
        const Report report = fn();
        if (!first && fmt == OutputFormat::text) out << "\n";
        first = false;
        out << emit_report(report, fmt);
        for (const auto& s : report.steps) {
            if (s.pass) continue;
            err << name << ": failed step: " << s.description;
            if (s.witness) err << " (witness " << s.witness->to_string() << ")";
            err << "\n";
        }
        pass = pass && report.overall;
    }
    return pass ? ok : verification_failed;
}

int do_exclude(const ExcludeArgs& a, std::ostream& out) {
    const Exclusion ex = exclude(a.r, parse_bound_spec(a.bound));
    out << ex.interval.to_string() << "\n";
    out << "bound: " << to_string(ex.spec) << "\n";
    out << "assumption: " << to_string(ex.assumption) << "\n";
    out << "searched: " << ex.bracket.to_string() << "\n";
    for (const auto& w : ex.witnesses) {
        out << "n=" << w.n << ": " << w.value.to_string() << " (" << decimal(w.value) << ") "
            << (w.value.sign() >= 0 ? "excluded" : "not excluded") << "\n";
    }
    return ok;
}

std::int64_t need_r(const EvalArgs& a, const std::string& what) {
    if (!a.r) throw ParseError(what + " needs --r");
    return *a.r;
}

int do_eval(const EvalArgs& a, std::ostream& out) {
    const std::optional<Rational> m = a.m.empty() ? std::nullopt : std::optional<Rational>(Rational::parse(a.m));
    auto print_value = [&](const Rational& v) {
        out << "value: " << v.to_string() << "\n";
        out << "decimal: " << decimal(v) << "\n";
    };
    out << "n: " << a.n << "\n";
    if (a.r) out << "r: " << *a.r << "\n";

    if (a.bound == "crossing:linear" || a.bound == "crossing:cubic") {
        if (!m) throw ParseError(a.bound + " needs --m");
        out << "bound: " << a.bound << "\n";
        out << "m: " << m->to_string() << "\n";
        print_value(crossing_lb(a.n, *m, a.bound == "crossing:linear" ? CrossingVariant::linear : CrossingVariant::cubic));
        return ok;
    }
    if (a.bound == "immersion") {
        out << "bound: immersion\n";
        print_value(immersion_deficit(a.n, need_r(a, a.bound)));
        return ok;
    }
    if (a.bound == "wedge") {
        out << "bound: wedge\n";
        print_value(w_edge_average(a.n, need_r(a, a.bound)));
        return ok;
    }

    const BoundSpec spec = parse_bound_spec(a.bound);
    const std::int64_t r = need_r(a, a.bound);
    out << "bound: " << to_string(spec) << "\n";
    if (std::holds_alternative<SubdivisionWindow>(spec) || std::holds_alternative<MiddleOrderWindow>(spec)) {
        const IntInterval window = excluded_orders(r, spec);
        out << "window: " << window.to_string() << "\n";
        out << (window.contains(a.n) ? "excluded" : "not excluded") << "\n";
        return ok;
    }

    Rational value;
    Rational edges;
    if (const auto* s = std::get_if<SamplingBound>(&spec)) {
        edges = m ? *m : edge_lower_bound(a.n, r, s->edge);
        value = sampling_lb(a.n, edges, s->k);
    } else {
        const auto& p = std::get<ProbBound>(spec);
        edges = m ? *m : edge_lower_bound(a.n, r, p.edge);
        value = prob_lb(a.n, edges, p.p);
    }
    const Rational target = zarankiewicz_upper(r);
    out << "m: " << edges.to_string() << "\n";
    print_value(value);
    out << "target: " << target.to_string() << "\n";
    out << (value >= target ? "excluded" : "not excluded") << "\n";
    return ok;
}

int do_plot(const PlotArgs& a, std::ostream& out) {
    const OutputFormat fmt = parse_output_format(a.format);
    std::optional<ClosedRatInterval> range;
    if (!a.alpha_lo.empty() || !a.alpha_hi.empty()) {
        if (a.alpha_lo.empty() || a.alpha_hi.empty()) throw ParseError("--alpha-lo and --alpha-hi go together");
        range = ClosedRatInterval{Rational::parse(a.alpha_lo), Rational::parse(a.alpha_hi)};
    }
    std::optional<Rational> step;
    if (!a.step.empty()) step = Rational::parse(a.step);
    const PlotGrid grid = make_plot_grid(a.target, range, step);

    std::filesystem::path path = a.out;
    if (path.empty()) {
        const char* dir = std::getenv("CRCERT_OUTPUT_DIR");
        path = std::filesystem::path(dir && *dir ? dir : ".") / (a.target + "." + extension(fmt));
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path.string() + " for writing");
    file << emit_plot_grid(grid, fmt);
    file.close();
    if (!file) throw Error("failed writing " + path.string());
    out << "wrote " << path.string() << " (" << grid.series.size() << " series x " << grid.alphas.size()
        << " samples)\n";
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certification of crossing-number exclusions for color-critical graphs", "crcert"};
    app.require_subcommand(1);
    app.fallthrough(false);

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Excluded orders per r and the orders left open");
    table_cmd->add_option("--rmin", table.rmin, "First r")->capture_default_str();
    table_cmd->add_option("--rmax", table.rmax, "Last r")->capture_default_str();
    table_cmd->add_option("--format", table.format, "csv | json | text")->capture_default_str();
    table_cmd->add_option("--p", table.p, "Inclusion probability for every row (default: per-r values)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verifier and print its report");
    verify_cmd->add_option("target", verify.target, "thm2 | thm4 | thm6 | thm9 | all")
        ->required()
        ->check(CLI::IsMember({"thm2", "thm4", "thm6", "thm9", "all"}));
    verify_cmd->add_option("--format", verify.format, "csv | json | text")->capture_default_str();

    ExcludeArgs excl;
    auto* exclude_cmd = app.add_subcommand("exclude", "Orders excluded by one bound at one r");
    exclude_cmd->add_option("--r", excl.r, "Chromatic number r")->required();
    exclude_cmd->add_option("--bound", excl.bound, "Bound spec, see docs/bound-grammar.md")->required();

    EvalArgs ev;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a bound exactly at one order");
    eval_cmd->add_option("--bound", ev.bound, "Bound spec, or crossing:linear | crossing:cubic | immersion | wedge")
        ->required();
    eval_cmd->add_option("--r", ev.r, "Chromatic number r");
    eval_cmd->add_option("--n", ev.n, "Order n")->required();
    eval_cmd->add_option("--m", ev.m, "Edge count to use instead of the bound's edge lower bound");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "Write an exact sample grid");
    plot_cmd->add_option("--target", plot.target, "f-of-alpha-k | p19-parts | p15-parts | p12-parts")->required();
    plot_cmd->add_option("--out", plot.out, "Output file (default: $CRCERT_OUTPUT_DIR/<target>.<ext>)");
    plot_cmd->add_option("--format", plot.format, "csv | json | text")->capture_default_str();
    plot_cmd->add_option("--alpha-lo", plot.alpha_lo, "Lower end of the alpha range");
    plot_cmd->add_option("--alpha-hi", plot.alpha_hi, "Upper end of the alpha range");
    plot_cmd->add_option("--step", plot.step, "Alpha step");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return usage_error;
    }

    try {
        if (table_cmd->parsed()) return do_table(table, out);
        if (verify_cmd->parsed()) return do_verify(verify, out, err);
        if (exclude_cmd->parsed()) return do_exclude(excl, out);
        if (eval_cmd->parsed()) return do_eval(ev, out);
        if (plot_cmd->parsed()) return do_plot(plot, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return domain_error;
    } catch (const VariableMismatch& e) {
        err << "domain error: " << e.what() << "\n";
        return domain_error;
    } catch (const ContiguityError& e) {
        err << "domain error: " << e.what() << "\n";
        return domain_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    }
    return usage_error;
}

}  // namespace crcert::cli
