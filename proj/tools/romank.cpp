// Command line driver: exact Roman k-domination solving, closed-form
// evaluation on complete bipartite graphs, formula-vs-solver sweeps, case
// table rendering, graph generation, property reports and LP export.
//
// Exit codes: 0 success, 1 discrepancy/violation, 2 usage or input error,
// 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "romank/graph_io.hpp"
#include "romank/ilp.hpp"
#include "romank/kmn.hpp"
#include "romank/solve.hpp"
#include "romank/transforms.hpp"
#include "romank/verify.hpp"

using namespace romank;

namespace {

struct Range {
    int lo = 1;
    int hi = 1;
};

// "a..b" or a single "a".
Range parse_range(const std::string& text) {
    Range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected <a> or <a>..<b>, got `" + text + "`");
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw CLI::ValidationError("range", "range `" + text + "` is empty or negative");
    return r;
}

Variant parse_variant(const std::string& name) {
    const auto v = variant_from_string(name);
    if (!v)
        throw CLI::ValidationError(
            "variant", "expected roman|perfect|strong|perfect-strong, got `" + name + "`");
    return *v;
}

std::vector<Variant> parse_variants(const std::string& text) {
    if (text == "all")
        return {Variant::roman, Variant::perfect, Variant::strong, Variant::perfect_strong};
    std::vector<Variant> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(parse_variant(token));
    if (out.empty()) throw CLI::ValidationError("variants", "no variants given");
    return out;
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_solve(const std::string& graph_file, int k, const std::string& variant_name,
              const std::string& method_name, const Budget& budget,
              const std::string& witness_out) {
    const Graph g = load_graph_file(graph_file);
    const Variant variant = parse_variant(variant_name);
    SolveResult result;
    if (method_name == "auto") {
        result = solve_auto(g, k, variant, budget);
    } else if (method_name == "oracle") {
        result = solve_oracle(g, k, variant);
    } else if (method_name == "bnb") {
        result = solve_bnb(g, k, variant, budget);
    } else if (method_name == "multiset") {
        result = solve_with(Method::multiset, g, k, variant, budget);
    } else {
        throw CLI::ValidationError("method", "expected oracle|bnb|multiset|auto");
    }
    std::cout << solve_result_to_json(result, variant, k) << "\n";
    if (!witness_out.empty()) write_out(serialize_weight_function(result.witness), witness_out);
    return result.exact ? 0 : 3;
}

int cmd_formula(int m, int n, int k, const std::string& variant_name, bool do_resolve) {
    const Variant variant = parse_variant(variant_name);
    const FormulaResult fr = formula_for(variant, m, n, k);
    std::optional<long long> resolved;
    if (do_resolve && !fr.is_exact()) resolved = resolve(m, n, k, variant, fr);
    std::cout << formula_result_to_json(fr, resolved) << "\n";
    return 0;
}

int cmd_verify(const SweepSpec& spec) {
    const VerifyReport report = run_verify(spec);
    std::cout << report.to_json() << "\n";
    if (report.discrepancies() > 0) return 1;
    if (report.flagged > 0) return 3;
    return 0;
}

int cmd_table(const std::string& id, const SweepSpec& spec, bool markdown,
              const std::string& out_file) {
    Variant variant;
    if (id == "3.1")
        variant = Variant::perfect_strong;
    else if (id == "3.2")
        variant = Variant::strong;
    else if (id == "3.3")
        variant = Variant::perfect;
    else if (id == "3.4")
        variant = Variant::roman;
    else
        throw CLI::ValidationError("table", "expected 3.1|3.2|3.3|3.4, got `" + id + "`");
    write_out(render_table(variant, spec, markdown ? TableFormat::markdown : TableFormat::csv),
              out_file);
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& out_file) {
    const auto need = [&](size_t count) {
        if (params.size() != count)
            throw CLI::ValidationError("gen", family + " needs " + std::to_string(count) +
                                                  " integer parameter(s)");
    };
    Graph g;
    if (family == "kmn") {
        need(2);
        g = complete_bipartite(params[0], params[1]).first;
    } else if (family == "complete") {
        need(1);
        g = complete(params[0]);
    } else if (family == "path") {
        need(1);
        g = path(params[0]);
    } else if (family == "cycle") {
        need(1);
        g = cycle(params[0]);
    } else if (family == "empty") {
        need(1);
        g = empty_graph(params[0]);
    } else if (family == "fan") {
        // fan F_{m,n}: empty graph on n vertices joined with a path on m
        need(2);
        g = join(empty_graph(params[1]), path(params[0]));
    } else if (family == "gadget") {
        need(2);
        g = build_gadget({params[0], params[1]});
    } else {
        throw CLI::ValidationError(
            "gen", "unknown family `" + family +
                       "` (kmn|complete|path|cycle|empty|fan|gadget)");
    }
    write_out(serialize_graph(g), out_file);
    return 0;
}

int cmd_props(const std::string& graph_file, int k_max, const Budget& budget) {
    const Graph g = load_graph_file(graph_file);
    const SuiteReport report = check_inequality_suite(g, graph_file, k_max, budget);
    std::cout << report.to_json() << "\n";
    if (!report.complete) return 3;
    return report.all_hold() ? 0 : 1;
}

int cmd_gadget(int m, int ell, int k, const Budget& budget) {
    const GadgetReport report = gadget_lower_bound_check({m, ell}, k, budget);
    std::cout << report.to_json() << "\n";
    return report.exact ? 0 : 3;
}

int cmd_ilp(const std::string& graph_file, int k, const std::string& variant_name,
            const std::string& out_file) {
    const Graph g = load_graph_file(graph_file);
    write_out(export_ilp(g, k, parse_variant(variant_name)), out_file);
    return 0;
}

int cmd_check(const std::string& graph_file, const std::string& witness_file,
              const std::string& variant_name, bool explain) {
    const Graph g = load_graph_file(graph_file);
    std::ifstream in(witness_file);
    if (!in) throw std::runtime_error("cannot open witness file: " + witness_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    const WeightFunction f = parse_weight_function(buf.str());
    const Variant variant = parse_variant(variant_name);
    nlohmann::json j{{"variant", to_string(variant)}, {"k", f.k}, {"weight", f.weight()}};
    if (explain) {
        const auto violations = all_violations(g, f, variant);
        j["valid"] = violations.empty();
        nlohmann::json arr = nlohmann::json::array();
        for (const Violation& v : violations)
            arr.push_back({{"vertex", v.vertex},
                           {"required", v.required},
                           {"actual", v.actual},
                           {"reason", v.reason}});
        j["violations"] = arr;
    } else {
        const auto r = validate(g, f, variant);
        j["valid"] = r.ok;
        if (!r.ok)
            j["first_violation"] = {{"vertex", r.first->vertex},
                                    {"required", r.first->required},
                                    {"actual", r.first->actual},
                                    {"reason", r.first->reason}};
    }
    std::cout << j.dump() << "\n";
    return j["valid"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for Roman k-domination and its perfect/strong variants"};
    app.require_subcommand(1);

    std::string graph_file, witness_file, variant_name = "roman", method = "auto";
    std::string out_file, table_id, family, variants_text = "all";
    std::string m_range = "1..4", n_range = "1..6", k_range = "1..6";
    std::string table_m = "1..4", table_n = "1..5", table_k = "1..5";
    std::vector<int> gen_params;
    int k = 1, k_max = 4, m = 1, n = 1, jobs = 1, gadget_m = 3, gadget_ell = 2;
    bool do_resolve = false, markdown = false, explain = false;
    Budget budget;

    const auto add_budget_flags = [&budget, &jobs](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget.max_nodes, "search node budget");
        cmd->add_option("--budget-ms", budget.max_ms, "wall clock budget in ms (0 = off)");
        cmd->add_option("--jobs", jobs, "worker threads");
    };

    auto* solve = app.add_subcommand("solve", "exact domination number of a graph file");
    solve->add_option("graph", graph_file, "edge-list graph file")->required();
    solve->add_option("--k", k, "number of legions demanded per vertex")->required();
    solve->add_option("--variant", variant_name, "roman|perfect|strong|perfect-strong");
    solve->add_option("--method", method, "oracle|bnb|multiset|auto");
    solve->add_option("--witness-out", witness_file, "write the witness function here");
    add_budget_flags(solve);

    auto* formula = app.add_subcommand("formula", "closed-form value for K_{m,n}");
    formula->add_option("m", m)->required();
    formula->add_option("n", n)->required();
    formula->add_option("k", k)->required();
    formula->add_option("variant", variant_name)->required();
    formula->add_flag("--resolve", do_resolve, "narrow one_of/range cells with the solver");

    auto* verify = app.add_subcommand("verify", "formula-vs-solver sweep over a K_{m,n} grid");
    verify->add_option("--m", m_range, "m range, e.g. 1..4");
    verify->add_option("--n", n_range, "n range");
    verify->add_option("--k", k_range, "k range");
    verify->add_option("--variants", variants_text, "all or comma-separated list");
    verify->add_option("--jobs", jobs, "worker threads");

    auto* table = app.add_subcommand("table", "render one of the published case tables");
    table->add_option("id", table_id, "3.1|3.2|3.3|3.4")->required();
    table->add_option("--m", table_m, "m range");
    table->add_option("--n", table_n, "n range");
    table->add_option("--k", table_k, "k range");
    table->add_flag("--md", markdown, "markdown instead of csv");
    table->add_option("-o,--out", out_file, "output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->add_option("family", family, "kmn|complete|path|cycle|empty|fan|gadget")->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("-o,--out", out_file, "output file (default stdout)");

    auto* props = app.add_subcommand("props", "run the inequality suite on a graph file");
    props->add_option("graph", graph_file)->required();
    props->add_option("--kmax", k_max, "check k = 1..kmax");
    add_budget_flags(props);

    auto* gadget = app.add_subcommand("gadget", "pendant-gadget lower-bound report");
    gadget->add_option("--m", gadget_m, "side-A size (>= 3)");
    gadget->add_option("--ell", gadget_ell, "side-B size exponent (>= 2)");
    gadget->add_option("--k", k, "legion demand");
    add_budget_flags(gadget);

    auto* ilp = app.add_subcommand("ilp", "export a CPLEX-LP model");
    ilp->add_option("graph", graph_file)->required();
    ilp->add_option("--k", k)->required();
    ilp->add_option("--variant", variant_name);
    ilp->add_option("-o,--out", out_file, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "validate a witness file against a graph");
    check->add_option("graph", graph_file)->required();
    check->add_option("witness", witness_file)->required();
    check->add_option("--variant", variant_name);
    check->add_flag("--explain", explain, "list every violation, not just the first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        budget.jobs = jobs;
        if (solve->parsed())
            return cmd_solve(graph_file, k, variant_name, method, budget, witness_file);
        if (formula->parsed()) return cmd_formula(m, n, k, variant_name, do_resolve);
        const auto spec_from = [&jobs](const std::string& ms, const std::string& ns,
                                       const std::string& ks) {
            SweepSpec spec;
            const Range mr = parse_range(ms), nr = parse_range(ns), kr = parse_range(ks);
            spec.m_lo = mr.lo;
            spec.m_hi = mr.hi;
            spec.n_lo = nr.lo;
            spec.n_hi = nr.hi;
            spec.k_lo = kr.lo;
            spec.k_hi = kr.hi;
            spec.jobs = jobs;
            return spec;
        };
        if (verify->parsed()) {
            SweepSpec spec = spec_from(m_range, n_range, k_range);
            spec.variants = parse_variants(variants_text);
            return cmd_verify(spec);
        }
        if (table->parsed())
            return cmd_table(table_id, spec_from(table_m, table_n, table_k), markdown,
                             out_file);
        if (gen->parsed()) return cmd_gen(family, gen_params, out_file);
        if (props->parsed()) return cmd_props(graph_file, k_max, budget);
        if (gadget->parsed()) return cmd_gadget(gadget_m, gadget_ell, k, budget);
        if (ilp->parsed()) return cmd_ilp(graph_file, k, variant_name, out_file);
        if (check->parsed()) return cmd_check(graph_file, witness_file, variant_name, explain);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const TheoremContradiction& e) {
        std::cerr << "theorem contradiction: " << e.what() << "\nwitness:";
        for (int v : e.result().witness.values) std::cerr << " " << v;
        std::cerr << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
