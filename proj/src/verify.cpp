#include "sepkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include <nlohmann/json.hpp>

#include "sepkit/errors.hpp"
#include "sepkit/separators.hpp"

namespace sepkit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

struct Pipeline {
    Graph graph;
    GadgetLabels labels;
    std::vector<Assignment> models;
    std::optional<SeparatorFamily> minimal;
    std::optional<SeparatorFamily> iwm;
    VerifyStatus enum_status = VerifyStatus::ok;
    std::string enum_detail;
    double enumerate_ms = 0.0;
    double sat_ms = 0.0;
};

Pipeline run_pipeline(const Cnf3& f, const VerifyOptions& options) {
    Pipeline p;
    auto built = sat_to_graph(f);
    p.graph = std::move(built.first);
    p.labels = std::move(built.second);

    const auto sat_start = Clock::now();
    p.models = enumerate_satisfying(f, options.sat_cap);
    p.sat_ms = ms_since(sat_start);

    const auto enum_start = Clock::now();
    try {
        if (options.method == VerifyMethod::filter) {
            p.minimal = enumerate_minimal_separators(p.graph, options.budget);
            p.iwm = filter_inclusion_wise(p.graph, *p.minimal);
        } else {
            p.iwm = enumerate_iwm_bruteforce(p.graph, options.brute_cap);
        }
    } catch (const budget_error& e) {
        p.enum_status = VerifyStatus::inconclusive;
        p.enum_detail = e.what();
        p.minimal.reset();
        p.iwm.reset();
    }
    p.enumerate_ms = ms_since(enum_start);
    return p;
}

/// Decode with the contested literal convention (variable -> 1 iff one of
/// its w-vertices is selected); for valid sets this is the complement of
/// the binding u-convention.
Assignment w_convention_assignment(const GadgetLabels& labels,
                                   const VertexSet& separator) {
    std::vector<bool> values(labels.var_count);
    for (Vertex v : separator) {
        const auto& r = labels.role_of.at(static_cast<std::size_t>(v));
        if (r.role == GadgetLabels::Role::w)
            values[labels.clauses[r.j - 1].var[r.i - 1] - 1] = true;
    }
    return Assignment(std::move(values));
}

void audit_large_separator(const Cnf3& f, const Pipeline& p,
                           const VertexSet& s, Lemma1Report& report) {
    ++report.audited;
    const GadgetLabels& labels = p.labels;

    if (!s.is_subset_of(labels.cuw_candidates())) {
        report.violations.push_back(
            {s, "separator leaves the c/u/w candidate set"});
        return;
    }
    if (!is_ab_separator(p.graph, s, labels.a, labels.b)) {
        report.violations.push_back({s, "separator does not split a from b"});
        return;
    }
    for (int j = 0; j < labels.clause_count(); ++j) {
        const auto& cb = labels.clauses[j];
        for (int i = 0; i < 3; ++i) {
            const int hits = (s.contains(cb.u[i]) ? 1 : 0) +
                             (s.contains(cb.v[i]) ? 1 : 0) +
                             (s.contains(cb.w[i]) ? 1 : 0);
            if (hits != 1 || s.contains(cb.v[i])) {
                report.violations.push_back(
                    {s, "path " + std::to_string(i + 1) + " of clause " +
                            std::to_string(j + 1) +
                            " is not cut in exactly one endpoint"});
                return;
            }
        }
    }

    Assignment decoded;
    try {
        decoded = separator_to_assignment(p.graph, labels, s);
    } catch (const std::exception& e) {
        report.violations.push_back({s, std::string("decoding failed: ") +
                                            e.what()});
        return;
    }
    if (!satisfies(f, decoded)) {
        report.violations.push_back(
            {s, "decoded assignment does not satisfy the formula"});
        return;
    }
    ++report.u_convention_ok;
    if (satisfies(f, w_convention_assignment(labels, s)))
        ++report.w_convention_ok;

    if (assignment_to_separator(f, labels, decoded) != s)
        report.violations.push_back(
            {s, "decode/encode round trip does not reproduce the separator"});
}

Lemma1Report lemma1_from_pipeline(const Cnf3& f, const Pipeline& p) {
    Lemma1Report report;
    if (p.enum_status != VerifyStatus::ok) {
        report.status = VerifyStatus::inconclusive;
        report.status_detail = p.enum_detail;
        return report;
    }
    for (const VertexSet& s : p.iwm->sets)
        if (s.size() >= 4) audit_large_separator(f, p, s, report);
    return report;
}

Lemma2Report lemma2_from_pipeline(const Cnf3& f, const Pipeline& p) {
    Lemma2Report report;
    report.models = p.models.size();
    report.family_checked = p.iwm.has_value();
    const int m = f.clause_count();

    for (const Assignment& model : p.models) {
        VertexSet s = assignment_to_separator(f, p.labels, model);
        int traversable = 0;
        for (const Clause& c : f.clauses)
            if (is_traversable(c, model)) ++traversable;
        if (s.size() != static_cast<std::size_t>(3 * m + traversable) ||
            s.size() < 4) {
            report.violations.push_back(
                {s, "constructed separator has unexpected size " +
                        std::to_string(s.size())});
            continue;
        }
        if (!is_inclusion_wise_minimal_separator(p.graph, s)) {
            report.violations.push_back(
                {s, "constructed separator is not inclusion-wise minimal"});
            continue;
        }
        if (!is_ab_separator(p.graph, s, p.labels.a, p.labels.b)) {
            report.violations.push_back(
                {s, "constructed separator does not split a from b"});
            continue;
        }
        if (p.iwm) {
            if (p.iwm->contains(s))
                ++report.in_family;
            else
                report.violations.push_back(
                    {s, "constructed separator missing from the enumerated "
                        "family"});
        }
    }
    return report;
}

EquivalenceReport equivalence_from_pipeline(const Cnf3& f, std::string id,
                                            const Pipeline& p) {
    EquivalenceReport report;
    report.id = std::move(id);
    report.status = p.enum_status;
    report.status_detail = p.enum_detail;
    report.model_count = p.models.size();
    report.satisfiable = !p.models.empty();
    report.sat_ms = p.sat_ms;
    report.enumerate_ms = p.enumerate_ms;
    if (p.minimal) report.minimal_count = p.minimal->size();
    if (p.iwm) {
        report.iwm_count = p.iwm->size();
        report.max_iwm_size = p.iwm->max_set_size();
        report.has_large_iwm = report.max_iwm_size >= 4;
        report.equivalent = report.satisfiable == report.has_large_iwm;
    }
    if (report.satisfiable) {
        const Assignment& model = p.models.front();
        report.witness.emplace(model,
                               assignment_to_separator(f, p.labels, model));
    }
    return report;
}

void require_normalized(const Cnf3& f) {
    if (!is_normalized(f))
        throw std::invalid_argument("verification requires a normalized "
                                    "formula; run normalize() first");
}

} // namespace

std::string to_string(VerifyMethod method) {
    return method == VerifyMethod::filter ? "filter" : "brute";
}

std::string to_string(VerifyStatus status) {
    return status == VerifyStatus::ok ? "ok" : "inconclusive";
}

FormulaVerdict verify_formula(const Cnf3& normalized, std::string id,
                              const VerifyOptions& options) {
    require_normalized(normalized);
    Pipeline p = run_pipeline(normalized, options);
    FormulaVerdict verdict;
    verdict.id = id;
    verdict.formula = normalized;
    verdict.equivalence = equivalence_from_pipeline(normalized, id, p);
    verdict.lemma1 = lemma1_from_pipeline(normalized, p);
    verdict.lemma2 = lemma2_from_pipeline(normalized, p);
    return verdict;
}

EquivalenceReport check_hardness_equivalence(const Cnf3& normalized,
                                             const VerifyOptions& options) {
    require_normalized(normalized);
    Pipeline p = run_pipeline(normalized, options);
    return equivalence_from_pipeline(normalized, "formula", p);
}

Lemma1Report check_lemma1(const Cnf3& normalized,
                          const VerifyOptions& options) {
    require_normalized(normalized);
    Pipeline p = run_pipeline(normalized, options);
    return lemma1_from_pipeline(normalized, p);
}

Lemma2Report check_lemma2(const Cnf3& normalized,
                          const VerifyOptions& options) {
    require_normalized(normalized);
    // The constructive direction never needs the enumerated family.
    Pipeline p;
    auto built = sat_to_graph(normalized);
    p.graph = std::move(built.first);
    p.labels = std::move(built.second);
    p.models = enumerate_satisfying(normalized, options.sat_cap);
    return lemma2_from_pipeline(normalized, p);
}

GapReport gap_report(int n, const EnumBudget& budget) {
    if (n > 4)
        throw budget_error("gap report limited to n <= 4");
    PendantMelon pm = melon_with_pendants(n);

    GapReport report;
    report.n = n;
    report.cross_bound = 1;
    for (int i = 0; i < n; ++i) report.cross_bound *= 3;
    report.expected_iwm = 3 * static_cast<std::uint64_t>(n) + 2;

    SeparatorFamily minimal = enumerate_minimal_separators(pm.graph, budget);
    SeparatorFamily iwm = filter_inclusion_wise(pm.graph, minimal);
    report.minimal_count = minimal.size();
    report.iwm_count = iwm.size();
    report.minimal_ok = report.minimal_count >= report.cross_bound;
    report.iwm_ok = report.iwm_count == report.expected_iwm;

    const int original = 3 * n + 2;
    report.iwm_all_singletons =
        std::all_of(iwm.sets.begin(), iwm.sets.end(), [&](const VertexSet& s) {
            return s.size() == 1 && s.ids().front() < original;
        });
    return report;
}

Cnf3 random_cnf3(std::mt19937_64& rng, int max_vars, int max_clauses) {
    if (max_vars < 3)
        throw std::invalid_argument("random_cnf3 needs at least 3 variables");
    if (max_clauses < 2)
        throw std::invalid_argument("random_cnf3 needs at least 2 clauses");

    const int m = 2 + static_cast<int>(rng() % (max_clauses - 1));
    Cnf3 f;
    f.num_vars = max_vars;
    for (int j = 0; j < m; ++j) {
        int vars[3];
        for (int i = 0; i < 3; ++i) {
            bool fresh = false;
            while (!fresh) {
                vars[i] = 1 + static_cast<int>(rng() % max_vars);
                fresh = true;
                for (int k = 0; k < i; ++k)
                    if (vars[k] == vars[i]) fresh = false;
            }
        }
        Clause c;
        for (int i = 0; i < 3; ++i)
            c[i] = Literal{vars[i], (rng() & 1u) != 0};
        f.clauses.push_back(c);
    }
    return normalize(f);
}

std::vector<std::pair<std::string, Cnf3>> full_polarity_pairs() {
    auto clause = [](int pattern) {
        Clause c;
        for (int i = 0; i < 3; ++i)
            c[i] = Literal{i + 1, ((pattern >> i) & 1) != 0};
        return c;
    };
    std::vector<std::pair<std::string, Cnf3>> out;
    for (int s1 = 0; s1 < 8; ++s1)
        for (int s2 = s1; s2 < 8; ++s2) {
            Cnf3 f;
            f.num_vars = 3;
            f.clauses = {clause(s1), clause(s2)};
            out.emplace_back(
                "pair-" + std::to_string(s1) + "-" + std::to_string(s2),
                normalize(f));
        }
    return out;
}

SuiteResult verify_suite(
    const std::vector<std::pair<std::string, Cnf3>>& formulas,
    const VerifyOptions& options, int jobs) {
    SuiteResult result;
    result.verdicts.resize(formulas.size());
    std::vector<std::exception_ptr> errors(formulas.size());

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= formulas.size()) return;
            try {
                result.verdicts[k] = verify_formula(
                    formulas[k].second, formulas[k].first, options);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1 || formulas.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (const FormulaVerdict& v : result.verdicts) {
        if (!v.conclusive())
            ++result.inconclusive_count;
        else if (v.passed())
            ++result.passed_count;
        else
            ++result.failed_count;
    }
    return result;
}

namespace {

nlohmann::json violations_to_json(const std::vector<AuditViolation>& vs) {
    nlohmann::json out = nlohmann::json::array();
    for (const AuditViolation& v : vs)
        out.push_back({{"separator", v.separator.ids()}, {"reason", v.reason}});
    return out;
}

} // namespace

std::string verdict_to_json(const FormulaVerdict& verdict) {
    const EquivalenceReport& eq = verdict.equivalence;
    nlohmann::json j;
    j["id"] = verdict.id;
    j["formula"] = to_dimacs(verdict.formula);
    j["status"] = to_string(eq.status);
    if (!eq.status_detail.empty()) j["status_detail"] = eq.status_detail;
    j["satisfiable"] = eq.satisfiable;
    j["model_count"] = eq.model_count;
    j["max_iwm_size"] = eq.max_iwm_size;
    j["has_large_iwm"] = eq.has_large_iwm;
    j["equivalent"] = eq.equivalent;
    j["minimal_count"] = eq.minimal_count;
    j["iwm_count"] = eq.iwm_count;
    if (eq.witness) {
        j["witness"] = {
            {"assignment", assignment_line(eq.witness->first)},
            {"separator", eq.witness->second.ids()},
        };
    }
    j["timings_ms"] = {{"enumerate", eq.enumerate_ms}, {"sat", eq.sat_ms}};

    j["lemma1"] = {
        {"status", to_string(verdict.lemma1.status)},
        {"audited", verdict.lemma1.audited},
        {"u_convention_ok", verdict.lemma1.u_convention_ok},
        {"w_convention_ok", verdict.lemma1.w_convention_ok},
        {"violations", violations_to_json(verdict.lemma1.violations)},
    };
    j["lemma2"] = {
        {"models", verdict.lemma2.models},
        {"family_checked", verdict.lemma2.family_checked},
        {"in_family", verdict.lemma2.in_family},
        {"violations", violations_to_json(verdict.lemma2.violations)},
    };
    return j.dump(2);
}

std::string gap_report_to_json(const GapReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["minimal_count"] = report.minimal_count;
    j["iwm_count"] = report.iwm_count;
    j["cross_bound"] = report.cross_bound;
    j["expected_iwm"] = report.expected_iwm;
    j["minimal_ok"] = report.minimal_ok;
    j["iwm_ok"] = report.iwm_ok;
    j["iwm_all_singletons"] = report.iwm_all_singletons;
    return j.dump(2);
}

} // namespace sepkit
