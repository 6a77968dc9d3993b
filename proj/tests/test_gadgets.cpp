#include <doctest.h>

#include <random>
#include <set>

#include "sepkit/cnf.hpp"
#include "sepkit/enumerate.hpp"
#include "sepkit/errors.hpp"
#include "sepkit/gadgets.hpp"
#include "sepkit/separators.hpp"
#include "sepkit/verify.hpp"

using namespace sepkit;

namespace {

Cnf3 fig3() {
    return parse_dimacs_cnf("p cnf 5 2\n-1 2 -5 0\n-3 -4 5 0\n");
}

Cnf3 disjoint_pair() {
    return parse_dimacs_cnf("p cnf 6 2\n1 2 3 0\n-4 5 -6 0\n");
}

int conflicting_pair_count(const Cnf3& f) {
    int p = 0;
    for (int j = 0; j < f.clause_count(); ++j)
        for (int i = 0; i < 3; ++i)
            for (int j2 = 0; j2 < f.clause_count(); ++j2) {
                if (j2 == j) continue;
                for (int i2 = 0; i2 < 3; ++i2)
                    if (f.clauses[j][i].var == f.clauses[j2][i2].var) ++p;
            }
    return p;
}

} // namespace

TEST_SUITE("gadgets") {

TEST_CASE("banner fixture") {
    auto [g, l] = banner();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.degree(l.d) == 3);
    CHECK(g.degree(l.e) == 1);
    CHECK(is_minimal_ab_separator(g, VertexSet{l.b, l.d}, l.a, l.c));
    CHECK(!is_inclusion_wise_minimal_separator(g, VertexSet{l.b, l.d}));
    CHECK(is_inclusion_wise_minimal_separator(g, VertexSet{l.d}));
}

TEST_CASE("melon fixture") {
    CHECK_THROWS_AS(melon(0), std::invalid_argument);

    auto [m1, l1] = melon(1);
    CHECK(m1.vertex_count() == 5);
    CHECK(m1.edge_count() == 4);  // the path a-u-v-w-b
    CHECK(m1.degree(l1.a) == 1);

    for (int n = 1; n <= 4; ++n) {
        auto [g, l] = melon(n);
        CHECK(g.vertex_count() == 3 * n + 2);
        CHECK(g.edge_count() == 4 * n);
        CHECK(g.degree(l.a) == n);
        CHECK(g.degree(l.b) == n);
    }
}

TEST_CASE("pendant transform") {
    auto [g, l] = melon(2);
    auto [pg, pendants] = add_pendants(g, VertexSet{l.a, l.paths[0][1]});
    CHECK(pg.vertex_count() == g.vertex_count() + 2);
    CHECK(pg.degree(pendants.at(l.a)) == 1);
    CHECK(pg.degree(pendants.at(l.paths[0][1])) == 1);
    CHECK(pg.degree(l.a) == g.degree(l.a) + 1);
    CHECK_THROWS_AS(add_pendants(g, VertexSet{99}), std::invalid_argument);

    PendantMelon pm = melon_with_pendants(2);
    CHECK(pm.graph.vertex_count() == 2 * (3 * 2 + 2));
    SeparatorFamily iwm = enumerate_iwm_bruteforce(pm.graph);
    REQUIRE(iwm.size() == 8);
    for (int v = 0; v < 8; ++v) CHECK(iwm.contains(VertexSet{v}));
    CHECK(enumerate_minimal_separators(pm.graph).size() >= 9);
}

TEST_CASE("reduction graph for the two-clause fixture") {
    auto [g, labels] = sat_to_graph(fig3());

    CHECK(g.vertex_count() == 34);
    CHECK(g.edge_count() == 44);
    REQUIRE(labels.clause_count() == 2);
    REQUIRE(labels.connectors.size() == 2);

    SUBCASE("both connectors guard the shared variable") {
        CHECK(labels.connectors[0].var == 5);
        CHECK(labels.connectors[1].var == 5);
        CHECK(labels.connectors[0].u == labels.clauses[0].u[2]);
        CHECK(labels.connectors[0].w == labels.clauses[1].w[2]);
        CHECK(labels.connectors[1].u == labels.clauses[1].u[2]);
        CHECK(labels.connectors[1].w == labels.clauses[0].w[2]);
    }

    SUBCASE("clause vertices attach by literal polarity") {
        const auto& c1 = labels.clauses[0];
        CHECK(g.adjacent(c1.c, c1.u[0]));  // negative literal
        CHECK(g.adjacent(c1.c, c1.w[1]));  // positive literal
        CHECK(g.adjacent(c1.c, c1.u[2]));
        CHECK(g.degree(c1.c) == 3);
    }

    SUBCASE("pendants cover exactly a, b, middles and connectors") {
        std::set<Vertex> hosts;
        for (const auto& [host, z] : labels.pendants) {
            hosts.insert(host);
            CHECK(g.degree(z) == 1);
        }
        std::set<Vertex> expected{labels.a, labels.b};
        for (const auto& cb : labels.clauses)
            for (int i = 0; i < 3; ++i) expected.insert(cb.v[i]);
        for (const auto& conn : labels.connectors) expected.insert(conn.y);
        CHECK(hosts == expected);
    }

    SUBCASE("degree facts") {
        CHECK(g.degree(labels.a) == 3 * 2 + 1);
        for (const auto& cb : labels.clauses)
            for (int i = 0; i < 3; ++i) CHECK(g.degree(cb.v[i]) == 3);
    }

    SUBCASE("clause neighborhoods and conflict pairs test inclusion-wise "
            "minimal") {
        for (const auto& cb : labels.clauses) {
            VertexSet nc = g.neighbor_set(cb.c);
            CHECK(nc.size() == 3);
            CHECK(is_inclusion_wise_minimal_separator(g, nc));
        }
        for (const auto& conn : labels.connectors) {
            VertexSet pair{conn.u, conn.w};
            CHECK(pair.size() == 2);
            CHECK(is_inclusion_wise_minimal_separator(g, pair));
        }
    }

    SUBCASE("role names follow the documented layout") {
        CHECK(labels.role_name(0) == "a");
        CHECK(labels.role_name(labels.clauses[0].u[0]) == "u.1.1");
        CHECK(labels.role_name(labels.clauses[1].w[2]) == "w.3.2");
        CHECK(labels.role_name(labels.clauses[1].c) == "c.2");
        CHECK(labels.role_name(labels.connectors[0].y) == "y.1");
        CHECK(labels.role_name(labels.pendants.front().second) == "z.of.a");
        const std::string json = labels_to_json(labels);
        CHECK(json.find("\"u.3.2\"") != std::string::npos);
        CHECK(json.find("\"z.of.v.1.1\"") != std::string::npos);
    }
}

TEST_CASE("reduction size arithmetic") {
    auto [g0, l0] = sat_to_graph(disjoint_pair());
    CHECK(l0.connectors.empty());
    CHECK(g0.vertex_count() == 30);  // 13m + 4 with p = 0

    CHECK_THROWS_AS(sat_to_graph(parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(sat_to_graph(parse_dimacs_cnf("p cnf 2 2\n1 1 2 0\n"
                                                  "1 1 2 0\n")),
                    std::invalid_argument);

    std::mt19937_64 rng(661);
    for (int round = 0; round < 25; ++round) {
        Cnf3 f = random_cnf3(rng, 6, 4);
        auto [g, labels] = sat_to_graph(f);
        const int m = f.clause_count();
        const int p = conflicting_pair_count(f);
        CHECK(int(labels.connectors.size()) == p);
        CHECK(g.vertex_count() == 13 * m + 2 * p + 4);
        CHECK(int(labels.pendants.size()) == 3 * m + p + 2);
        CHECK(labels.cuw_candidates().size() == std::size_t(7 * m));

        // {a,b}, V1, V2 and V3 partition the vertex set.
        std::size_t covered = 2 + std::size_t(10 * m) + p +
                              labels.pendants.size();
        CHECK(covered == std::size_t(g.vertex_count()));
        for (const auto& conn : labels.connectors) {
            const auto& ur = labels.role_of[conn.u];
            const auto& wr = labels.role_of[conn.w];
            CHECK(ur.role == GadgetLabels::Role::u);
            CHECK(wr.role == GadgetLabels::Role::w);
            CHECK(ur.j != wr.j);
            CHECK(labels.clauses[ur.j - 1].var[ur.i - 1] ==
                  labels.clauses[wr.j - 1].var[wr.i - 1]);
        }
    }
}

TEST_CASE("assignment to separator") {
    Cnf3 f = fig3();
    auto [g, labels] = sat_to_graph(f);

    SUBCASE("paper example: everything true except x1") {
        Assignment i(std::vector<bool>{false, true, true, true, true});
        VertexSet s = assignment_to_separator(f, labels, i);
        CHECK(s == VertexSet{labels.clauses[0].w[0], labels.clauses[0].u[1],
                             labels.clauses[0].u[2], labels.clauses[0].c,
                             labels.clauses[1].u[0], labels.clauses[1].u[1],
                             labels.clauses[1].u[2]});
        CHECK(s.size() == 7);
    }
    SUBCASE("all-false assignment picks every w vertex, no clause vertex") {
        Assignment i(std::vector<bool>(5, false));
        VertexSet s = assignment_to_separator(f, labels, i);
        std::vector<Vertex> expected;
        for (const auto& cb : labels.clauses)
            for (int k = 0; k < 3; ++k) expected.push_back(cb.w[k]);
        CHECK(s == VertexSet(std::move(expected)));
        CHECK(s.size() == 6);
    }
    SUBCASE("per-clause contribution is always three path vertices") {
        for (const Assignment& i : enumerate_satisfying(f)) {
            VertexSet s = assignment_to_separator(f, labels, i);
            int traversable = 0;
            for (const Clause& c : f.clauses)
                if (is_traversable(c, i)) ++traversable;
            CHECK(s.size() == std::size_t(6 + traversable));
        }
    }
    SUBCASE("non-model is rejected") {
        // x1=1, x2=0, x5=1 falsifies the first clause.
        Assignment bad(std::vector<bool>{true, false, true, true, true});
        CHECK_THROWS_AS(assignment_to_separator(f, labels, bad),
                        std::invalid_argument);
    }
}

TEST_CASE("separator to assignment") {
    Cnf3 f = fig3();
    auto [g, labels] = sat_to_graph(f);

    SUBCASE("round trip over every model") {
        for (const Assignment& i : enumerate_satisfying(f)) {
            VertexSet s = assignment_to_separator(f, labels, i);
            CHECK(separator_to_assignment(g, labels, s) == i);
        }
    }
    SUBCASE("conflicting evidence raises the alarm") {
        VertexSet conflicted{labels.clauses[0].u[2], labels.clauses[1].w[2],
                             labels.clauses[1].u[0], labels.clauses[1].u[1]};
        CHECK_THROWS_AS(separator_to_assignment(g, labels, conflicted),
                        contradiction_error);
    }
    SUBCASE("vertices outside the candidate set raise the alarm") {
        VertexSet stray{labels.a, labels.clauses[0].w[0],
                        labels.clauses[0].u[1], labels.clauses[0].u[2]};
        CHECK_THROWS_AS(separator_to_assignment(g, labels, stray),
                        contradiction_error);
    }
    SUBCASE("small or non-minimal sets violate the precondition") {
        CHECK_THROWS_AS(
            separator_to_assignment(
                g, labels, VertexSet{labels.clauses[0].u[0],
                                     labels.clauses[0].u[1],
                                     labels.clauses[0].u[2]}),
            std::invalid_argument);
        VertexSet not_minimal{labels.clauses[0].u[0], labels.clauses[0].u[1],
                              labels.clauses[0].u[2],
                              labels.clauses[1].u[0]};
        CHECK_THROWS_AS(separator_to_assignment(g, labels, not_minimal),
                        std::invalid_argument);
    }
}

TEST_CASE("large separators of small gadgets decode to models exactly") {
    for (const Cnf3& f : {fig3(), disjoint_pair()}) {
        auto [g, labels] = sat_to_graph(f);
        SeparatorFamily iwm = enumerate_iwm_filter(g);
        std::vector<VertexSet> large;
        for (const VertexSet& s : iwm.sets)
            if (s.size() >= 4) large.push_back(s);

        std::vector<VertexSet> constructed;
        for (const Assignment& i : enumerate_satisfying(f))
            constructed.push_back(assignment_to_separator(f, labels, i));
        std::sort(constructed.begin(), constructed.end());

        // One large inclusion-wise minimal separator per model, and the
        // decodings agree both ways.
        CHECK(large == constructed);
        for (const VertexSet& s : large) {
            CHECK(s.is_subset_of(labels.cuw_candidates()));
            CHECK(is_ab_separator(g, s, labels.a, labels.b));
            Assignment decoded = separator_to_assignment(g, labels, s);
            CHECK(satisfies(f, decoded));
            CHECK(assignment_to_separator(f, labels, decoded) == s);
        }
    }
}

} // TEST_SUITE
