#ifndef SEPKIT_VERIFY_HPP
#define SEPKIT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/cnf.hpp"
#include "sepkit/enumerate.hpp"
#include "sepkit/gadgets.hpp"
#include "sepkit/graph.hpp"

namespace sepkit {

enum class VerifyMethod { filter, brute };
enum class VerifyStatus { ok, inconclusive };

std::string to_string(VerifyMethod method);
std::string to_string(VerifyStatus status);

struct VerifyOptions {
    VerifyMethod method = VerifyMethod::filter;
    EnumBudget budget;
    int brute_cap = 20;
    int sat_cap = 24;
};

/// Outcome of the satisfiable(f) <=> "gadget has an inclusion-wise
/// minimal separator of size >= 4" comparison for one formula.
/// Budget overruns surface as status = inconclusive, never as a verdict.
struct EquivalenceReport {
    std::string id;
    VerifyStatus status = VerifyStatus::ok;
    std::string status_detail;

    bool satisfiable = false;
    std::size_t max_iwm_size = 0;
    bool has_large_iwm = false;
    bool equivalent = false;

    std::uint64_t minimal_count = 0;
    std::uint64_t iwm_count = 0;
    std::uint64_t model_count = 0;
    std::optional<std::pair<Assignment, VertexSet>> witness;

    double enumerate_ms = 0.0;
    double sat_ms = 0.0;
};

struct AuditViolation {
    VertexSet separator;
    std::string reason;
};

/// Audit of every enumerated inclusion-wise minimal separator of size
/// >= 4: candidate-set containment, a-b separation, per-path structure,
/// and decodability into a satisfying assignment. As the decoding
/// polarity is contested, both conventions are tallied: u-selected -> 1
/// (the binding one) and the complementary w-selected -> 1.
struct Lemma1Report {
    VerifyStatus status = VerifyStatus::ok;
    std::string status_detail;
    std::size_t audited = 0;
    std::size_t u_convention_ok = 0;
    std::size_t w_convention_ok = 0;
    std::vector<AuditViolation> violations;

    bool ok() const {
        return status == VerifyStatus::ok && violations.empty();
    }
};

/// Constructive check: every model yields a separator that passes the
/// inclusion-wise minimality test with size 3m + |traversable| >= 4 and
/// separates a from b.
struct Lemma2Report {
    std::size_t models = 0;
    bool family_checked = false;
    std::size_t in_family = 0;
    std::vector<AuditViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Full per-formula pipeline: one gadget, one enumeration, all checks.
struct FormulaVerdict {
    std::string id;
    Cnf3 formula;
    EquivalenceReport equivalence;
    Lemma1Report lemma1;
    Lemma2Report lemma2;

    bool conclusive() const {
        return equivalence.status == VerifyStatus::ok;
    }
    bool passed() const {
        return conclusive() && equivalence.equivalent && lemma1.ok() &&
               lemma2.ok();
    }
};

FormulaVerdict verify_formula(const Cnf3& normalized, std::string id,
                              const VerifyOptions& options = {});

EquivalenceReport check_hardness_equivalence(const Cnf3& normalized,
                                             const VerifyOptions& options = {});
Lemma1Report check_lemma1(const Cnf3& normalized,
                          const VerifyOptions& options = {});
Lemma2Report check_lemma2(const Cnf3& normalized,
                          const VerifyOptions& options = {});

/// Minimal vs inclusion-wise counts on the pendant-augmented melon:
/// the first stays >= 3^n while the second collapses to 3n+2.
struct GapReport {
    int n = 0;
    std::uint64_t minimal_count = 0;
    std::uint64_t iwm_count = 0;
    std::uint64_t cross_bound = 0;   // 3^n
    std::uint64_t expected_iwm = 0;  // 3n + 2
    bool minimal_ok = false;
    bool iwm_ok = false;
    bool iwm_all_singletons = false;

    bool ok() const { return minimal_ok && iwm_ok && iwm_all_singletons; }
};

GapReport gap_report(int n, const EnumBudget& budget = {});

/// Seeded random 3-CNF: 2..max_clauses clauses, three distinct variables
/// drawn from 1..max_vars each, uniform polarities; normalized before
/// return. Uses modular draws only, so identical seeds give identical
/// formulas on every platform.
Cnf3 random_cnf3(std::mt19937_64& rng, int max_vars, int max_clauses);

/// All m = 2 formulas over the 8 full-polarity clauses on variables
/// 1..3 (unordered pairs with repetition: 36 formulas).
std::vector<std::pair<std::string, Cnf3>> full_polarity_pairs();

struct SuiteResult {
    std::vector<FormulaVerdict> verdicts;

    std::size_t passed_count = 0;
    std::size_t failed_count = 0;
    std::size_t inconclusive_count = 0;

    bool all_passed() const {
        return failed_count == 0 && inconclusive_count == 0;
    }
};

/// Verify formulas independently, optionally across worker threads;
/// verdict order always matches input order.
SuiteResult verify_suite(
    const std::vector<std::pair<std::string, Cnf3>>& formulas,
    const VerifyOptions& options = {}, int jobs = 1);

std::string verdict_to_json(const FormulaVerdict& verdict);
std::string gap_report_to_json(const GapReport& report);

} // namespace sepkit

#endif
