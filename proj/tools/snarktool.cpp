// snarktool: generate, check and transform the snark families of this
// library from the command line. Inputs and outputs are graph6 records;
// reports are JSON (one document, or JSON lines with --jsonl).
//
// Exit codes: 0 all verdicts pass, 1 some verdict false, 2 input error.

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "snarks/reports.hpp"

using namespace snarks;

namespace {

struct Options {
    int jobs = 1;
    bool jsonl = false;
    bool timing = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_reports(const std::vector<Json>& reports, const Options& opt) {
    if (opt.jsonl) {
        for (const Json& r : reports) std::cout << r.dump() << "\n";
    } else if (reports.size() == 1) {
        std::cout << reports[0].dump(2) << "\n";
    } else {
        std::cout << Json(reports).dump(2) << "\n";
    }
}

// Applies `f` to record indices 0..count-1, possibly on several threads;
// results land in caller-provided slots so output order never depends on
// scheduling.
void parallel_map(int jobs, int count, const std::function<void(int)>& f) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(jobs, count);
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
        });
    for (auto& t : pool) t.join();
}

// 0 = pass, 1 = some verdict false, 2 = input error
int run_per_record(const std::string& input_path, const Options& opt,
                   const std::function<Json(const Graph&)>& make_report) {
    std::vector<std::string> records = split_graph6_records(read_input(input_path));
    if (records.empty()) throw std::runtime_error("no graph6 records in input");
    std::vector<Json> reports(records.size());
    std::atomic<int> status{0};
    parallel_map(opt.jobs, static_cast<int>(records.size()), [&](int i) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            Graph g = parse_graph6(records[static_cast<size_t>(i)]);
            Json rep = make_report(g);
            rep["record"] = i;
            if (!report_verdict(rep)) {
                int expect = 0;
                status.compare_exchange_strong(expect, 1);
            }
            if (opt.timing)
                rep["timing_ms"] =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            reports[static_cast<size_t>(i)] = std::move(rep);
        } catch (const std::exception& e) {
            reports[static_cast<size_t>(i)] =
                Json{{"schema", report_schema_version}, {"record", i}, {"error", e.what()}};
            status = 2;
        }
    });
    emit_reports(reports, opt);
    return status;
}

RecipeBuild build_from_options(const std::string& recipe_name, const std::string& recipe_file) {
    if (!recipe_file.empty()) return build_recipe_from(parse_recipe(read_input(recipe_file)));
    return build_recipe(recipe_name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and verify odd 2-factored snarks"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--jobs", opt.jobs, "worker threads for multi-record inputs (output bytes are unaffected)")
        ->default_val(1);
    app.add_flag("--jsonl", opt.jsonl, "emit one compact JSON object per line");
    app.add_flag("--timing", opt.timing, "include timing_ms in reports (breaks byte-reproducibility)");

    // gen
    auto* gen = app.add_subcommand("gen", "write a named graph as graph6 on stdout");
    std::string gen_name;
    int gen_t = 0;
    bool gen_force = false;
    gen->add_option("name", gen_name, "P10|J5|J7|J9|P18|P26|P34|Blanusa1|Blanusa2|petersen|flower")->required();
    gen->add_option("--t", gen_t, "flower parameter (odd, at least 5)");
    gen->add_flag("--force", gen_force, "allow any flower parameter t >= 3");

    // check
    auto* check = app.add_subcommand("check", "verify each graph6 record and report JSON");
    std::string check_kind, check_input;
    check->add_option("kind", check_kind, "snark|odd2f|classify")
        ->required()
        ->check(CLI::IsMember({"snark", "odd2f", "classify"}));
    check->add_option("input", check_input, "graph6 file, or - for stdin")->required();

    // factors
    auto* factors = app.add_subcommand("factors", "enumerate 2-factors (cycles, spectra, summary counts)");
    std::string factors_input;
    std::vector<std::string> factors_contain, factors_avoid;
    bool factors_matchings = false;
    factors->add_option("input", factors_input, "graph6 file, or - for stdin")->required();
    factors->add_option("--contain", factors_contain, "edge u,v every factor must use (repeatable)");
    factors->add_option("--avoid", factors_avoid, "edge u,v every factor must skip (repeatable)");
    factors->add_flag("--matchings", factors_matchings, "also list all perfect matchings");

    // bold / gadget / orbits
    std::string bold_input, gadget_input, orbits_input;
    auto* bold = app.add_subcommand("bold", "list all bold edges of each record");
    bold->add_option("input", bold_input, "graph6 file, or - for stdin")->required();
    auto* gadget = app.add_subcommand("gadget", "list all gadget pairs of each record");
    gadget->add_option("input", gadget_input, "graph6 file, or - for stdin")->required();
    auto* orbits = app.add_subcommand("orbits", "automorphism group, vertex and edge orbits");
    orbits->add_option("input", orbits_input, "graph6 file, or - for stdin")->required();

    // iso
    auto* iso = app.add_subcommand("iso", "explicit isomorphism between two graphs, if any");
    std::string iso_a, iso_b;
    iso->add_option("first", iso_a)->required();
    iso->add_option("second", iso_b)->required();

    // dot
    auto* dot = app.add_subcommand("dot", "dot product of two graphs; graph6 on stdout");
    std::string dot_left, dot_right, dot_pattern = "A";
    std::vector<int> dot_edge, dot_pair, dot_orient{0, 0};
    bool dot_verified = false;
    dot->add_option("left", dot_left, "graph6 file for the left operand")->required();
    dot->add_option("right", dot_right, "graph6 file for the right operand")->required();
    dot->add_option("--edge", dot_edge, "adjacent x,y to remove from the left operand")
        ->delimiter(',')
        ->expected(2)
        ->required();
    dot->add_option("--pair", dot_pair, "independent edges a,b and c,d to remove from the right operand")
        ->delimiter(',')
        ->expected(4)
        ->required();
    dot->add_option("--pattern", dot_pattern, "join pattern A or B")->check(CLI::IsMember({"A", "B"}));
    dot->add_option("--orient", dot_orient, "orientation bits i,j for the two join pairs")
        ->delimiter(',')
        ->expected(2);
    dot->add_flag("--verified", dot_verified, "require a bold edge and a gadget pair, and verify the product");

    // construct
    auto* construct = app.add_subcommand("construct", "replay a stored construction recipe; graph6 on stdout");
    std::string recipe_name = "P18", recipe_file;
    construct->add_option("--recipe", recipe_name, "P18|P26|P34");
    construct->add_option("--recipe-file", recipe_file, "path to a recipe file");

    // audit-theorem37
    auto* audit =
        app.add_subcommand("audit-theorem37", "classify every 2-factor of a recipe build against its four-cut");
    std::string audit_recipe = "P18", audit_file;
    audit->add_option("--recipe", audit_recipe, "P18|P26|P34");
    audit->add_option("--recipe-file", audit_file, "path to a recipe file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (gen_name == "flower") {
                if (gen_t == 0) throw std::runtime_error("gen flower requires --t");
                std::cout << emit_graph6(flower(gen_t, gen_force).graph) << "\n";
            } else {
                std::cout << emit_graph6(named(gen_name)) << "\n";
            }
            return 0;
        }
        if (check->parsed()) {
            if (check_kind == "snark")
                return run_per_record(check_input, opt, [](const Graph& g) { return report_snark(g); });
            if (check_kind == "odd2f")
                return run_per_record(check_input, opt, [](const Graph& g) { return report_odd2f(g); });
            return run_per_record(check_input, opt, [](const Graph& g) { return report_classify(g); });
        }
        if (factors->parsed()) {
            auto parse_edge_arg = [](const std::string& arg) {
                int u = 0, v = 0;
                char comma = 0;
                std::istringstream in(arg);
                if (!(in >> u >> comma >> v) || comma != ',')
                    throw std::runtime_error("expected an edge as u,v — got '" + arg + "'");
                return Edge(u, v);
            };
            FactorConstraint constraint;
            for (const std::string& arg : factors_contain) constraint.must_contain.push_back(parse_edge_arg(arg));
            for (const std::string& arg : factors_avoid) constraint.must_avoid.push_back(parse_edge_arg(arg));
            return run_per_record(factors_input, opt,
                                  [&](const Graph& g) { return report_factors(g, constraint, factors_matchings); });
        }
        if (bold->parsed()) return run_per_record(bold_input, opt, [](const Graph& g) { return report_bold(g); });
        if (gadget->parsed())
            return run_per_record(gadget_input, opt, [](const Graph& g) { return report_gadget(g); });
        if (orbits->parsed())
            return run_per_record(orbits_input, opt, [](const Graph& g) { return report_orbits(g); });
        if (iso->parsed()) {
            auto records_a = split_graph6_records(read_input(iso_a));
            auto records_b = split_graph6_records(read_input(iso_b));
            if (records_a.size() != 1 || records_b.size() != 1)
                throw std::runtime_error("iso expects exactly one graph6 record per input");
            Json rep = report_iso(parse_graph6(records_a[0]), parse_graph6(records_b[0]));
            emit_reports({rep}, opt);
            return report_verdict(rep) ? 0 : 1;
        }
        if (dot->parsed()) {
            auto records_l = split_graph6_records(read_input(dot_left));
            auto records_r = split_graph6_records(read_input(dot_right));
            if (records_l.size() != 1 || records_r.size() != 1)
                throw std::runtime_error("dot expects exactly one graph6 record per operand");
            Graph left = parse_graph6(records_l[0]);
            Graph right = parse_graph6(records_r[0]);
            Edge xy(dot_edge[0], dot_edge[1]);
            Edge f(dot_pair[0], dot_pair[1]), g(dot_pair[2], dot_pair[3]);
            JoinPattern pat = dot_pattern == "A" ? JoinPattern::A : JoinPattern::B;
            DotProduct product =
                dot_verified
                    ? bold_gadget_dot_product(left, xy, right, f, g, pat, dot_orient[0] != 0, dot_orient[1] != 0)
                    : dot_product({left, xy, right, f, g, pat, dot_orient[0] != 0, dot_orient[1] != 0});
            std::cout << emit_graph6(product.graph) << "\n";
            return 0;
        }
        if (construct->parsed()) {
            RecipeBuild build = build_from_options(recipe_name, recipe_file);
            std::cout << emit_graph6(build.graph) << "\n";
            return 0;
        }
        if (audit->parsed()) {
            RecipeBuild build = build_from_options(audit_recipe, audit_file);
            Json rep = report_audit(build);
            emit_reports({rep}, opt);
            return report_verdict(rep) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
