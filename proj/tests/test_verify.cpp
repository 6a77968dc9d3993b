#include <doctest.h>

#include <algorithm>
#include <random>

#include "sepkit/cnf.hpp"
#include "sepkit/errors.hpp"
#include "sepkit/verify.hpp"

using namespace sepkit;

namespace {

Cnf3 fig3() {
    return parse_dimacs_cnf("p cnf 5 2\n-1 2 -5 0\n-3 -4 5 0\n");
}

Cnf3 polarity_cube() {
    Cnf3 f;
    f.num_vars = 3;
    for (int s = 0; s < 8; ++s) {
        Clause c;
        for (int i = 0; i < 3; ++i)
            c[i] = Literal{i + 1, ((s >> i) & 1) != 0};
        f.clauses.push_back(c);
    }
    return normalize(f);
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("two-clause fixture passes the whole pipeline") {
    FormulaVerdict v = verify_formula(fig3(), "fig3");
    CHECK(v.conclusive());
    CHECK(v.passed());

    const EquivalenceReport& eq = v.equivalence;
    CHECK(eq.satisfiable);
    CHECK(eq.model_count == 24);
    CHECK(eq.has_large_iwm);
    CHECK(eq.equivalent);
    REQUIRE(eq.witness.has_value());

    // Largest constructed separator: 3m plus the most traversable
    // clauses any model reaches.
    std::size_t expected_max = 0;
    for (const Assignment& i : enumerate_satisfying(fig3())) {
        std::size_t size = 6;
        for (const Clause& c : fig3().clauses)
            if (is_traversable(c, i)) ++size;
        expected_max = std::max(expected_max, size);
    }
    CHECK(eq.max_iwm_size == expected_max);
    CHECK(expected_max == 8);

    CHECK(v.lemma1.ok());
    CHECK(v.lemma1.audited == 24);  // one large separator per model
    CHECK(v.lemma1.u_convention_ok == 24);
    // The contested literal convention decodes to the complement
    // assignment; it must fail on at least one witness here.
    CHECK(v.lemma1.w_convention_ok < v.lemma1.audited);

    CHECK(v.lemma2.ok());
    CHECK(v.lemma2.models == 24);
    CHECK(v.lemma2.family_checked);
    CHECK(v.lemma2.in_family == 24);

    const std::string json = verdict_to_json(v);
    CHECK(json.find("\"equivalent\": true") != std::string::npos);
    CHECK(json.find("\"status\": \"ok\"") != std::string::npos);
}

TEST_CASE("equivalence report invariant") {
    for (const auto& [id, f] :
         std::vector<std::pair<std::string, Cnf3>>{{"fig3", fig3()}}) {
        EquivalenceReport eq = check_hardness_equivalence(f);
        CHECK(eq.equivalent == (eq.satisfiable == eq.has_large_iwm));
    }
}

TEST_CASE("unsatisfiable formula: constructive side is vacuous, "
          "enumeration is honestly inconclusive") {
    Cnf3 cube = polarity_cube();
    REQUIRE(!brute_force_sat(cube).has_value());

    Lemma2Report l2 = check_lemma2(cube);
    CHECK(l2.models == 0);
    CHECK(l2.ok());

    // The m = 8 gadget has at least 2^24 minimal separators (every
    // endpoint choice per path extends to one), far past any desk-scale
    // budget; the pipeline must say so instead of guessing.
    VerifyOptions small_budget;
    small_budget.budget.max_separators = 20000;
    FormulaVerdict v = verify_formula(cube, "cube", small_budget);
    CHECK(!v.conclusive());
    CHECK(v.equivalence.status == VerifyStatus::inconclusive);
    CHECK(v.lemma1.status == VerifyStatus::inconclusive);
    CHECK(v.lemma2.ok());

    VerifyOptions brute;
    brute.method = VerifyMethod::brute;
    EquivalenceReport eq = check_hardness_equivalence(cube, brute);
    CHECK(eq.status == VerifyStatus::inconclusive);
}

TEST_CASE("gap report") {
    GapReport g1 = gap_report(1);
    CHECK(g1.minimal_count >= 3);
    CHECK(g1.iwm_count == 5);
    CHECK(g1.ok());

    GapReport g2 = gap_report(2);
    CHECK(g2.minimal_count >= 9);
    CHECK(g2.iwm_count == 8);
    CHECK(g2.ok());

    GapReport g3 = gap_report(3);
    CHECK(g3.minimal_count >= 27);
    CHECK(g3.iwm_count == 11);
    CHECK(g3.ok());

    CHECK_THROWS_AS(gap_report(5), budget_error);
    CHECK(gap_report_to_json(g2).find("\"iwm_count\": 8") !=
          std::string::npos);
}

TEST_CASE("random formulas are reproducible and within bounds") {
    std::mt19937_64 a(123), b(123);
    for (int round = 0; round < 20; ++round) {
        Cnf3 fa = random_cnf3(a, 6, 4);
        Cnf3 fb = random_cnf3(b, 6, 4);
        CHECK(fa == fb);
        CHECK(is_normalized(fa));
        CHECK(fa.num_vars <= 6);
        CHECK(fa.clause_count() >= 2);
        CHECK(fa.clause_count() <= 4);
    }
}

TEST_CASE("all full-polarity clause pairs verify") {
    auto pairs = full_polarity_pairs();
    REQUIRE(pairs.size() == 36);
    SuiteResult result = verify_suite(pairs);
    CHECK(result.all_passed());
    CHECK(result.passed_count == 36);
    for (const FormulaVerdict& v : result.verdicts) {
        CHECK(v.equivalence.satisfiable);  // two 3-var clauses always are
        CHECK(v.equivalence.equivalent);
        CHECK(v.lemma1.audited == v.equivalence.model_count);
    }
}

TEST_CASE("parallel suite matches the serial one") {
    std::mt19937_64 rng(2718);
    std::vector<std::pair<std::string, Cnf3>> formulas;
    for (int k = 0; k < 6; ++k)
        formulas.emplace_back("r" + std::to_string(k), random_cnf3(rng, 5, 3));

    SuiteResult serial = verify_suite(formulas, {}, 1);
    SuiteResult parallel = verify_suite(formulas, {}, 2);
    REQUIRE(serial.verdicts.size() == parallel.verdicts.size());
    for (std::size_t k = 0; k < serial.verdicts.size(); ++k) {
        CHECK(serial.verdicts[k].id == parallel.verdicts[k].id);
        CHECK(serial.verdicts[k].equivalence.iwm_count ==
              parallel.verdicts[k].equivalence.iwm_count);
        CHECK(serial.verdicts[k].passed() == parallel.verdicts[k].passed());
    }
}

TEST_CASE("verification refuses un-normalized input") {
    Cnf3 raw = parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n");
    CHECK_THROWS_AS(verify_formula(raw, "raw"), std::invalid_argument);
}

} // TEST_SUITE
