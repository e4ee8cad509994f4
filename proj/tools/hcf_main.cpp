#include "hcf/format.hpp"
#include "hcf/parser.hpp"
#include "hcf/tables.hpp"
#include "hcf/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "hurwitz-cf/1";

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

hcf::Algorithm parse_algo(const std::string& a) {
    if (a == "h") return hcf::Algorithm::H;
    if (a == "t") return hcf::Algorithm::T;
    if (a == "d") return hcf::Algorithm::D;
    throw hcf::error("unknown algorithm: " + a);
}

json quotients_json(const std::vector<hcf::PartialQuotient>& qs) {
    json arr = json::array();
    for (const auto& q : qs) arr.push_back(hcf::format_gaussian_int(q.value));
    return arr;
}

int cmd_expand(const std::string& expr, const std::string& algo_name, size_t max_steps,
               bool as_json, bool paper_style, const std::string& out_path) {
    hcf::Algorithm algo = parse_algo(algo_name);
    hcf::FieldElement value = hcf::parse_expr(expr);

    hcf::Expansion e;
    if (algo == hcf::Algorithm::D) {
        if (!hcf::in_region(value, hcf::RegionId::UnitDiskComplement))
            throw hcf::error("dual algorithm requires |z| >= 1");
        e = hcf::expand(value, algo, max_steps);
    } else {
        auto [a0, z] = hcf::normalize_input(value, algo);
        e = hcf::expand(z, algo, max_steps);
        e.initial = a0;
    }

    std::string text;
    if (as_json) {
        json rec;
        rec["schema"] = kSchema;
        rec["input"] = expr;
        rec["algorithm"] = hcf::algorithm_name(algo);
        rec["initial"] = hcf::format_gaussian_int(e.initial);
        rec["preperiod"] = quotients_json(e.preperiod);
        rec["period"] = quotients_json(e.period);
        rec["status"] = hcf::status_string(e.status);
        text = rec.dump() + "\n";
    } else if (paper_style) {
        text = hcf::format_expansion_paper(e) + "\n";
    } else {
        text = hcf::format_expansion_human(e) + "\nstatus: " + hcf::status_string(e.status) + "\n";
    }
    int rc = emit(text, out_path);
    if (rc) return rc;
    return e.status == hcf::ExpansionStatus::Truncated ? 3 : 0;
}

int cmd_classify(const std::string& expr, const std::string& algo_name, bool as_json,
                 const std::string& out_path) {
    hcf::Algorithm algo = parse_algo(algo_name);
    if (algo == hcf::Algorithm::D) throw hcf::error("classify supports h and t");
    hcf::FieldElement value = hcf::parse_expr(expr);
    if (!value.is_quadratic()) throw hcf::error("input is not quadratic over Q(i)");
    auto [a0, alpha] = hcf::normalize_input(value, algo);
    (void)a0;
    hcf::PurePeriodicityReport rep = hcf::classify_pure_periodicity(alpha, algo);

    std::string text;
    if (as_json) {
        json rec;
        rec["schema"] = kSchema;
        rec["input"] = expr;
        rec["algorithm"] = hcf::algorithm_name(algo);
        rec["predicate"] = rep.predicate_result;
        rec["oracle"] = rep.oracle_result;
        if (rep.period_length)
            rec["period_length"] = *rep.period_length;
        else
            rec["period_length"] = nullptr;
        json wit = json::array();
        for (const auto& w : rep.witness)
            if (w.matched)
                wit.push_back(hcf::region_name(w.first) + " x " + hcf::region_name(w.second));
        rec["witness"] = wit;
        text = rec.dump() + "\n";
    } else {
        text = "input: " + expr + "\nalgorithm: " + hcf::algorithm_name(algo) + "\n";
        text += "purely periodic: " + std::string(rep.predicate_result ? "true" : "false") + "/" +
                (rep.oracle_result ? "true" : "false") + " (predicate/oracle)\n";
        if (rep.period_length)
            text += "period length: " + std::to_string(*rep.period_length) + "\n";
        for (const auto& w : rep.witness)
            if (w.matched)
                text += "witness: " + hcf::region_name(w.first) + " x " + hcf::region_name(w.second) + "\n";
    }
    int rc = emit(text, out_path);
    if (rc) return rc;
    return rep.consistent() ? 0 : 1;
}

int cmd_tables(const std::string& which, const std::string& out_path) {
    std::string text;
    size_t mismatches = 0;
    for (int t : {1, 2}) {
        if (which != "all" && which != std::to_string(t)) continue;
        auto diffs = hcf::check_table(t);
        size_t rows = hcf::table_rows(t).size();
        text += "table " + std::to_string(t) + ": " + std::to_string(rows - diffs.size()) + "/" +
                std::to_string(rows) + " rows match\n";
        for (const auto& d : diffs) {
            text += "  row " + std::to_string(d.row) + " (" + d.label + ")\n    expected " +
                    d.expected + "\n    actual   " + d.actual + "\n";
            ++mismatches;
        }
    }
    int rc = emit(text, out_path);
    if (rc) return rc;
    return mismatches == 0 ? 0 : 1;
}

int cmd_verify(const std::string& suite, uint64_t seed, size_t count, const std::string& out_path) {
    auto results = hcf::run_suites(suite, seed, count);
    std::string text;
    bool all_ok = true;
    for (const auto& r : results) {
        text += r.name + ": " + std::to_string(r.checks()) + " checks, " +
                std::to_string(r.failures()) + " failures\n";
        for (const auto& [part, c] : r.parts)
            text += "  " + part + ": " + std::to_string(c.checks - c.failures) + "/" +
                    std::to_string(c.checks) + "\n";
        for (const auto& n : r.notes) text += "  note: " + n + "\n";
        for (const auto& f : r.failure_notes) text += "  FAIL " + f + "\n";
        all_ok = all_ok && r.ok();
    }
    text += all_ok ? "all suites passed\n" : "FAILURES present\n";
    int rc = emit(text, out_path);
    if (rc) return rc;
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact continued-fraction expansions over Q(i) and its quadratic extensions"};
    app.require_subcommand(1);

    std::string expr, algo = "h", out_path, table = "all", suite = "all";
    bool as_json = false, paper_style = false;
    size_t max_steps = hcf::kDefaultMaxSteps, count = 0;
    uint64_t seed = hcf::kDefaultSeed;

    auto* expand = app.add_subcommand("expand", "expand a value");
    expand->add_option("expr", expr, "expression, e.g. \"sqrt(2+i)-2\"")->required();
    expand->add_option("--algo", algo, "h, t or d (default h)");
    expand->add_option("--max-steps", max_steps, "step guard (default 10000)");
    expand->add_flag("--json", as_json, "machine-readable output");
    expand->add_flag("--paper-style", paper_style, "bracket notation with \\overline");
    expand->add_option("--out", out_path, "write output to a file");

    auto* classify = app.add_subcommand("classify", "pure-periodicity predicate vs orbit oracle");
    classify->add_option("expr", expr)->required();
    classify->add_option("--algo", algo, "h or t (default h)");
    classify->add_flag("--json", as_json);
    classify->add_option("--out", out_path);

    auto* tables = app.add_subcommand("tables", "recompute the golden expansion tables");
    tables->add_option("--table", table, "1, 2 or all");
    tables->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "tilings, lemmas, periodicity, dual, natext, sqrt-sweep, all");
    verify->add_option("--seed", seed, "RNG seed (default 1)");
    verify->add_option("--count", count, "sample count (0 = suite default)");
    verify->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(expr, algo, max_steps, as_json, paper_style, out_path);
        if (classify->parsed()) return cmd_classify(expr, algo, as_json, out_path);
        if (tables->parsed()) return cmd_tables(table, out_path);
        if (verify->parsed()) return cmd_verify(suite, seed, count, out_path);
    } catch (const hcf::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
