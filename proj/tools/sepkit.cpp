#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sepkit/cnf.hpp"
#include "sepkit/enumerate.hpp"
#include "sepkit/errors.hpp"
#include "sepkit/gadgets.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/separators.hpp"
#include "sepkit/treedepth.hpp"
#include "sepkit/verify.hpp"

namespace {

using namespace sepkit;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit_error(const std::string& type, const std::string& message) {
    nlohmann::json j;
    j["error"] = {{"type", type}, {"message", message}};
    std::cerr << j.dump() << '\n';
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open output file: " + path);
    out << text;
}

void emit_graph(const Graph& g, const std::string& out_path) {
    if (out_path.empty())
        write_edge_list(g, std::cout);
    else
        write_text_file(out_path, write_edge_list(g));
}

struct GenArgs {
    std::string kind;
    int n = 0;
    std::string out;
    std::string labels;
};

int run_gen(const GenArgs& args) {
    if (args.kind == "banner") {
        auto [g, l] = banner();
        emit_graph(g, args.out);
        if (!args.labels.empty()) write_text_file(args.labels, labels_to_json(l));
        return kExitOk;
    }
    if (args.kind == "melon" || args.kind == "melon-pendants") {
        if (args.n < 1)
            throw std::invalid_argument("gen " + args.kind +
                                        " requires a positive path count");
        if (args.kind == "melon") {
            auto [g, l] = melon(args.n);
            emit_graph(g, args.out);
            if (!args.labels.empty())
                write_text_file(args.labels, labels_to_json(l));
        } else {
            PendantMelon pm = melon_with_pendants(args.n);
            emit_graph(pm.graph, args.out);
            if (!args.labels.empty())
                write_text_file(args.labels,
                                labels_to_json(pm.melon, pm.pendants));
        }
        return kExitOk;
    }
    throw std::invalid_argument("unknown generator '" + args.kind +
                                "' (expected banner|melon|melon-pendants)");
}

struct EnumArgs {
    std::string kind = "minimal";
    std::string method;
    std::string file;
    bool json = false;
    std::size_t max_separators = 1'000'000;
    long long time_limit_ms = 0;
    int brute_cap = 20;
};

int run_enum(const EnumArgs& args) {
    const Graph g = read_edge_list_file(args.file);
    EnumBudget budget;
    budget.max_separators = args.max_separators;
    budget.time_limit = std::chrono::milliseconds(args.time_limit_ms);

    SeparatorFamily fam;
    if (args.kind == "minimal" && args.method == "berry")
        fam = enumerate_minimal_separators(g, budget);
    else if (args.kind == "minimal" && args.method == "brute")
        fam = enumerate_minimal_separators_bruteforce(g, args.brute_cap);
    else if (args.kind == "iwm" && args.method == "filter")
        fam = enumerate_iwm_filter(g, budget);
    else if (args.kind == "iwm" && args.method == "brute")
        fam = enumerate_iwm_bruteforce(g, args.brute_cap);
    else
        throw std::invalid_argument(
            "unsupported kind/method combination: " + args.kind + "/" +
            args.method +
            " (minimal: berry|brute, iwm: filter|brute)");

    if (args.json)
        std::cout << family_to_json(fam) << '\n';
    else
        write_family_lines(fam, std::cout);
    return kExitOk;
}

struct CheckArgs {
    std::string set_text;
    std::vector<int> ab;
    std::string file;
};

int run_check(const CheckArgs& args) {
    const Graph g = read_edge_list_file(args.file);
    std::vector<Vertex> ids;
    std::istringstream in(args.set_text);
    int v;
    while (in >> v) ids.push_back(v);
    if (!in.eof())
        throw std::invalid_argument("--set expects space-separated ids");
    const VertexSet s(std::move(ids));

    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "set: " << s << '\n';
    std::cout << "separator: " << yesno(is_separator(g, s)) << '\n';
    if (!args.ab.empty()) {
        const Vertex a = args.ab[0], b = args.ab[1];
        std::cout << "ab-separator(" << a << ',' << b
                  << "): " << yesno(is_ab_separator(g, s, a, b)) << '\n';
        std::cout << "minimal-ab-separator(" << a << ',' << b
                  << "): " << yesno(is_minimal_ab_separator(g, s, a, b))
                  << '\n';
    }
    std::cout << "inclusion-wise-minimal-separator: "
              << yesno(is_inclusion_wise_minimal_separator(g, s)) << '\n';
    return kExitOk;
}

struct ReduceArgs {
    std::string file;
    std::string out;
    std::string labels;
};

int run_reduce(const ReduceArgs& args) {
    const Cnf3 f = normalize(parse_dimacs_file(args.file));
    auto [g, labels] = sat_to_graph(f);
    emit_graph(g, args.out);
    if (!args.labels.empty())
        write_text_file(args.labels, labels_to_json(labels));
    return kExitOk;
}

struct VerifyArgs {
    std::string file;
    int random_count = 0;
    int max_vars = 6;
    int max_clauses = 4;
    std::uint64_t seed = 1;
    bool pairs = false;
    std::string method = "filter";
    int jobs = 1;
    std::size_t max_separators = 1'000'000;
    long long time_limit_ms = 0;
    int brute_cap = 20;
    int sat_cap = 24;
    std::string report_path;
};

void print_verdict(const FormulaVerdict& v) {
    const EquivalenceReport& eq = v.equivalence;
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "formula " << v.id << ": satisfiable=" << yesno(eq.satisfiable)
              << " models=" << eq.model_count
              << " max-iwm-size=" << eq.max_iwm_size
              << " large-iwm=" << yesno(eq.has_large_iwm)
              << " equivalent=" << yesno(eq.equivalent)
              << " status=" << to_string(eq.status) << '\n';
    std::cout << "  lemma1: status=" << to_string(v.lemma1.status)
              << " audited=" << v.lemma1.audited
              << " violations=" << v.lemma1.violations.size()
              << " u-convention=" << v.lemma1.u_convention_ok << '/'
              << v.lemma1.audited << " w-convention="
              << v.lemma1.w_convention_ok << '/' << v.lemma1.audited << '\n';
    std::cout << "  lemma2: models=" << v.lemma2.models
              << " in-family=" << v.lemma2.in_family
              << " violations=" << v.lemma2.violations.size() << '\n';
}

int run_verify(const VerifyArgs& args) {
    std::vector<std::pair<std::string, Cnf3>> formulas;
    if (!args.file.empty())
        formulas.emplace_back(args.file,
                              normalize(parse_dimacs_file(args.file)));
    if (args.pairs) {
        auto pairs = full_polarity_pairs();
        formulas.insert(formulas.end(), pairs.begin(), pairs.end());
    }
    if (args.random_count > 0) {
        std::mt19937_64 rng(args.seed);
        for (int k = 0; k < args.random_count; ++k)
            formulas.emplace_back(
                "random-" + std::to_string(args.seed) + "-" +
                    std::to_string(k),
                random_cnf3(rng, args.max_vars, args.max_clauses));
    }
    if (formulas.empty())
        throw std::invalid_argument(
            "verify needs a CNF file, --pairs, or --random K");

    VerifyOptions options;
    options.method =
        args.method == "brute" ? VerifyMethod::brute : VerifyMethod::filter;
    if (args.method != "brute" && args.method != "filter")
        throw std::invalid_argument("--method must be filter or brute");
    options.budget.max_separators = args.max_separators;
    options.budget.time_limit = std::chrono::milliseconds(args.time_limit_ms);
    options.brute_cap = args.brute_cap;
    options.sat_cap = args.sat_cap;

    SuiteResult result = verify_suite(formulas, options, args.jobs);
    for (const FormulaVerdict& v : result.verdicts) print_verdict(v);
    std::cout << "summary: formulas=" << result.verdicts.size()
              << " passed=" << result.passed_count
              << " failed=" << result.failed_count
              << " inconclusive=" << result.inconclusive_count << '\n';

    if (!args.report_path.empty()) {
        nlohmann::json j;
        j["seed"] = args.seed;
        j["params"] = {{"random", args.random_count},
                       {"max_vars", args.max_vars},
                       {"max_clauses", args.max_clauses},
                       {"method", args.method},
                       {"max_separators", args.max_separators}};
        auto& reports = j["reports"] = nlohmann::json::array();
        for (const FormulaVerdict& v : result.verdicts)
            reports.push_back(nlohmann::json::parse(verdict_to_json(v)));
        write_text_file(args.report_path, j.dump(2) + "\n");
    }

    if (result.failed_count > 0) return kExitVerificationFailed;
    if (result.inconclusive_count > 0) return kExitBudget;
    return kExitOk;
}

struct GapArgs {
    int n = 1;
    std::size_t max_separators = 1'000'000;
    bool json = false;
};

int run_gap(const GapArgs& args) {
    EnumBudget budget;
    budget.max_separators = args.max_separators;
    GapReport report = gap_report(args.n, budget);
    if (args.json) {
        std::cout << gap_report_to_json(report) << '\n';
    } else {
        auto yesno = [](bool b) { return b ? "yes" : "no"; };
        std::cout << "gap n=" << report.n
                  << ": minimal=" << report.minimal_count
                  << " iwm=" << report.iwm_count
                  << " cross-bound=" << report.cross_bound
                  << " expected-iwm=" << report.expected_iwm
                  << " ok=" << yesno(report.ok()) << '\n';
    }
    return report.ok() ? kExitOk : kExitVerificationFailed;
}

struct TreedepthArgs {
    std::string file;
    int cap = 14;
    bool json = false;
};

int run_treedepth(const TreedepthArgs& args) {
    const Graph g = read_edge_list_file(args.file);
    TreedepthResult result = treedepth_bruteforce(g, args.cap);
    const bool valid = replay_witness(g, result) == result.depth;
    if (args.json) {
        nlohmann::json j;
        j["treedepth"] = result.depth;
        j["witness_valid"] = valid;
        auto& choices = j["witness"] = nlohmann::json::array();
        for (const auto& [v, sub] : result.choices)
            choices.push_back({{"pick", v}, {"subgraph", sub.ids()}});
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "treedepth: " << result.depth << '\n';
        std::cout << "witness-valid: " << (valid ? "yes" : "no") << '\n';
    }
    return valid ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal and inclusion-wise minimal separator toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand(
        "gen", "generate a fixture graph (banner|melon N|melon-pendants N)");
    gen->add_option("kind", gen_args.kind, "banner|melon|melon-pendants")
        ->required();
    gen->add_option("n", gen_args.n, "path count for melon variants");
    gen->add_option("-o,--output", gen_args.out, "graph output file");
    gen->add_option("--labels", gen_args.labels, "labels sidecar file");

    EnumArgs enum_args;
    auto* enumerate = app.add_subcommand("enum", "enumerate separators");
    enumerate->add_option("--kind", enum_args.kind, "minimal|iwm")->required();
    enumerate->add_option("--method", enum_args.method, "berry|filter|brute")
        ->required();
    enumerate->add_option("file", enum_args.file, "edge-list graph file")
        ->required();
    enumerate->add_flag("--json", enum_args.json, "structured output");
    enumerate->add_option("--max-separators", enum_args.max_separators,
                          "solution-count budget");
    enumerate->add_option("--time-limit-ms", enum_args.time_limit_ms,
                          "wall-clock budget (0 = off)");
    enumerate->add_option("--brute-cap", enum_args.brute_cap,
                          "vertex cap for exhaustive methods");

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "predicate verdicts for a set");
    check->add_option("--set", check_args.set_text, "space-separated ids")
        ->required();
    check->add_option("--ab", check_args.ab, "endpoint pair")->expected(2);
    check->add_option("file", check_args.file, "edge-list graph file")
        ->required();

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand(
        "reduce", "build the separator gadget of a 3-CNF formula");
    reduce->add_option("file", reduce_args.file, "DIMACS CNF file")
        ->required();
    reduce->add_option("-o,--output", reduce_args.out, "graph output file");
    reduce->add_option("--labels", reduce_args.labels, "labels sidecar file");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "check the satisfiability/large-separator equivalence");
    verify->add_option("file", verify_args.file, "DIMACS CNF file");
    verify->add_flag("--pairs", verify_args.pairs,
                     "all 36 full-polarity clause pairs");
    verify->add_option("--random", verify_args.random_count,
                       "number of random formulas");
    verify->add_option("--max-vars", verify_args.max_vars, "variable bound");
    verify->add_option("--max-clauses", verify_args.max_clauses,
                       "clause bound");
    verify->add_option("--seed", verify_args.seed, "random seed");
    verify->add_option("--method", verify_args.method, "filter|brute");
    verify->add_option("--jobs", verify_args.jobs, "worker threads");
    verify->add_option("--max-separators", verify_args.max_separators,
                       "solution-count budget");
    verify->add_option("--time-limit-ms", verify_args.time_limit_ms,
                       "wall-clock budget (0 = off)");
    verify->add_option("--brute-cap", verify_args.brute_cap,
                       "vertex cap for --method brute");
    verify->add_option("--sat-cap", verify_args.sat_cap,
                       "variable cap for the sat oracle");
    verify->add_option("--report", verify_args.report_path,
                       "write JSON reports to this file");

    GapArgs gap_args;
    auto* gap = app.add_subcommand(
        "gap", "minimal vs inclusion-wise counts on the pendant melon");
    gap->add_option("n", gap_args.n, "melon size (1..4)")->required();
    gap->add_option("--max-separators", gap_args.max_separators,
                    "solution-count budget");
    gap->add_flag("--json", gap_args.json, "structured output");

    TreedepthArgs td_args;
    auto* td = app.add_subcommand("treedepth",
                                  "exact treedepth of a small graph");
    td->add_option("file", td_args.file, "edge-list graph file")->required();
    td->add_option("--cap", td_args.cap, "vertex cap");
    td->add_flag("--json", td_args.json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (enumerate->parsed()) return run_enum(enum_args);
        if (check->parsed()) return run_check(check_args);
        if (reduce->parsed()) return run_reduce(reduce_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (gap->parsed()) return run_gap(gap_args);
        if (td->parsed()) return run_treedepth(td_args);
        emit_error("usage", "no subcommand given");
        return kExitUsage;
    } catch (const budget_error& e) {
        emit_error("budget", e.what());
        return kExitBudget;
    } catch (const contradiction_error& e) {
        emit_error("alarm", e.what());
        return kExitVerificationFailed;
    } catch (const parse_error& e) {
        emit_error("input", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        emit_error("usage", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kExitVerificationFailed;
    }
}
