#include <doctest.h>

#include <random>

#include "sepkit/errors.hpp"
#include "sepkit/treedepth.hpp"
#include "testutil.hpp"

using namespace sepkit;
using testutil::complete_graph;
using testutil::path_graph;
using testutil::random_connected_graph;

TEST_SUITE("treedepth") {

TEST_CASE("fixtures") {
    CHECK(treedepth_bruteforce(Graph(1, {})).depth == 1);
    CHECK(treedepth_bruteforce(path_graph(5)).depth == 3);
    for (int n = 1; n <= 6; ++n)
        CHECK(treedepth_bruteforce(complete_graph(n)).depth == n);

    // Paths need ceil(log2(n + 1)) levels.
    CHECK(treedepth_bruteforce(path_graph(7)).depth == 3);
    CHECK(treedepth_bruteforce(path_graph(8)).depth == 4);
}

TEST_CASE("disconnected graphs take the maximum over components") {
    Graph two_paths(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
    TreedepthResult r = treedepth_bruteforce(two_paths);
    CHECK(r.depth == 3);  // path-4 component dominates the path-3 one

    Graph mixed(5, {{0, 1}, {1, 2}, {0, 2}});  // triangle plus two isolates
    CHECK(treedepth_bruteforce(mixed).depth == 3);
}

TEST_CASE("budget refusal") {
    CHECK_THROWS_AS(treedepth_bruteforce(path_graph(15)), budget_error);
    CHECK(treedepth_bruteforce(path_graph(15), 15).depth == 4);
}

TEST_CASE("witness replay reproduces the depth") {
    std::mt19937_64 rng(404);
    for (int round = 0; round < 25; ++round) {
        Graph g = random_connected_graph(rng, 2 + int(rng() % 8));
        TreedepthResult r = treedepth_bruteforce(g);
        CHECK(replay_witness(g, r) == r.depth);
    }

    TreedepthResult r = treedepth_bruteforce(path_graph(5));
    CHECK(replay_witness(path_graph(5), r) == 3);
    r.choices.clear();
    CHECK_THROWS_AS(replay_witness(path_graph(5), r), std::invalid_argument);
}

TEST_CASE("vertex deletion never increases treedepth") {
    std::mt19937_64 rng(9000);
    for (int round = 0; round < 15; ++round) {
        const int n = 3 + int(rng() % 6);
        Graph g = random_connected_graph(rng, n);
        const int depth = treedepth_bruteforce(g).depth;
        const Vertex drop = Vertex(rng() % n);

        std::vector<std::pair<Vertex, Vertex>> edges;
        for (auto [u, v] : g.edges())
            if (u != drop && v != drop)
                edges.emplace_back(u - (u > drop), v - (v > drop));
        Graph smaller(n - 1, edges);
        CHECK(treedepth_bruteforce(smaller).depth <= depth);
    }
}

} // TEST_SUITE
