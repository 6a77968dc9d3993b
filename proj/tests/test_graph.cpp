#include <doctest.h>

#include <sstream>

#include "sepkit/errors.hpp"
#include "sepkit/graph.hpp"
#include "testutil.hpp"

using namespace sepkit;
using testutil::component_count_naive;
using testutil::path_graph;
using testutil::random_connected_graph;

TEST_SUITE("graph") {

TEST_CASE("vertex set canonical form") {
    VertexSet s(std::vector<Vertex>{3, 1, 3, 2});
    CHECK(s.ids() == std::vector<Vertex>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK(!s.contains(0));
    CHECK(s.with(0).ids() == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(s.without(2).ids() == std::vector<Vertex>{1, 3});
    CHECK(s.without(7) == s);

    CHECK(VertexSet{0, 2} < VertexSet{3});  // lexicographic on id lists
    CHECK(VertexSet{1}.is_proper_subset_of(VertexSet{1, 2}));
    CHECK(!VertexSet{1, 2}.is_proper_subset_of(VertexSet{1, 2}));
    CHECK(VertexSet{}.is_subset_of(VertexSet{1}));
    CHECK_THROWS_AS(VertexSet{-1}, std::invalid_argument);
}

TEST_CASE("graph construction and invariants") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 2}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);  // duplicate edge collapses
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.connected());

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);

    Graph h(4, {{0, 1}, {2, 3}});
    CHECK(!h.connected());

    std::mt19937_64 rng(7);
    for (int round = 0; round < 30; ++round) {
        Graph r = random_connected_graph(rng, 2 + int(rng() % 11));
        for (int u = 0; u < r.vertex_count(); ++u)
            for (int v = 0; v < r.vertex_count(); ++v)
                CHECK(r.adjacent(u, v) == r.adjacent(v, u));
    }
}

TEST_CASE("components") {
    Graph p5 = path_graph(5);
    auto comps = components(p5, VertexSet{1});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0});
    CHECK(comps[1] == VertexSet{2, 3, 4});

    SUBCASE("no removal on a connected graph gives one component") {
        auto whole = components(p5, VertexSet{});
        REQUIRE(whole.size() == 1);
        CHECK(whole[0] == VertexSet{0, 1, 2, 3, 4});
    }
    SUBCASE("removing everything gives the empty list") {
        CHECK(components(p5, VertexSet{0, 1, 2, 3, 4}).empty());
    }
    SUBCASE("invalid vertex id is rejected") {
        CHECK_THROWS_AS(components(p5, VertexSet{5}), std::invalid_argument);
    }
    SUBCASE("partition matches union-find on random inputs") {
        std::mt19937_64 rng(99);
        for (int round = 0; round < 60; ++round) {
            const int n = 2 + int(rng() % 10);
            Graph g = random_connected_graph(rng, n);
            VertexSet removed = testutil::subset_from_mask(
                std::uint32_t(rng() % (std::uint32_t(1) << n)));
            auto parts = components(g, removed);
            CHECK(int(parts.size()) == component_count_naive(g, removed));
            std::size_t covered = 0;
            for (const auto& part : parts) covered += part.size();
            CHECK(covered + removed.size() == std::size_t(n));
        }
    }
}

TEST_CASE("edge list round trip") {
    const std::string text =
        "# five-vertex fixture\n"
        "\n"
        "5 5\n"
        "0 1\n"
        "0 3\n"
        "1 2\n"
        "2 3\n"
        "3 4\n";
    std::istringstream in(text);
    Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(write_edge_list(g) ==
          "5 5\n0 1\n0 3\n1 2\n2 3\n3 4\n");

    std::mt19937_64 rng(4242);
    for (int round = 0; round < 25; ++round) {
        Graph r = random_connected_graph(rng, 2 + int(rng() % 12));
        std::istringstream back(write_edge_list(r));
        CHECK(read_edge_list(back) == r);
    }
}

TEST_CASE("edge list parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    };
    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("nonsense\n"), parse_error);
    CHECK_THROWS_AS(parse("3 1\n1 0\n"), parse_error);   // u >= v
    CHECK_THROWS_AS(parse("3 1\n0 3\n"), parse_error);   // v >= n
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), parse_error);   // edge count
    CHECK_THROWS_AS(parse("3 1\n0 1 9\n"), parse_error); // trailing token
    CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), parse_error); // duplicate
}

} // TEST_SUITE
