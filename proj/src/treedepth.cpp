#include "sepkit/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "sepkit/errors.hpp"

namespace sepkit {

namespace {

// Subproblems are vertex subsets of a graph with at most 14 vertices, so
// a 32-bit mask is the whole state.
using Mask = std::uint32_t;

struct Solver {
    const Graph& g;
    std::unordered_map<Mask, std::pair<int, Vertex>> memo;  // depth, choice

    explicit Solver(const Graph& graph) : g(graph) {}

    Mask component_of(Vertex start, Mask inside) const {
        Mask comp = Mask{1} << start;
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                const Bits& nb = g.neighbors(v);
                for (auto u = nb.find_first(); u != Bits::npos;
                     u = nb.find_next(u))
                    next |= Mask{1} << u;
            }
            next &= inside & ~comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    int solve(Mask vertices) {
        if (vertices == 0) return 0;

        // Split into components first; only connected masks are memoized.
        const int seed = std::countr_zero(vertices);
        const Mask comp = component_of(seed, vertices);
        if (comp != vertices)
            return std::max(solve(comp), solve(vertices & ~comp));

        auto hit = memo.find(vertices);
        if (hit != memo.end()) return hit->second.first;

        int best = std::popcount(vertices);
        Vertex best_vertex = std::countr_zero(vertices);
        for (Mask rest = vertices; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int depth = 1 + solve(vertices & ~(Mask{1} << v));
            if (depth < best) {
                best = depth;
                best_vertex = v;
            }
        }
        memo.emplace(vertices, std::pair{best, best_vertex});
        return best;
    }

    void collect_witness(Mask vertices,
                         std::vector<std::pair<Vertex, VertexSet>>& out) const {
        if (vertices == 0) return;
        const int seed = std::countr_zero(vertices);
        const Mask comp = component_of(seed, vertices);
        if (comp != vertices) {
            collect_witness(comp, out);
            collect_witness(vertices & ~comp, out);
            return;
        }
        const auto& [depth, choice] = memo.at(vertices);
        out.emplace_back(choice, mask_to_set(vertices));
        collect_witness(vertices & ~(Mask{1} << choice), out);
    }

    static VertexSet mask_to_set(Mask m) {
        std::vector<Vertex> ids;
        while (m) {
            ids.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return VertexSet(std::move(ids));
    }
};

} // namespace

TreedepthResult treedepth_bruteforce(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices || max_vertices > 31)
        throw budget_error("treedepth recursion refused: " +
                           std::to_string(n) + " vertices exceeds the cap of " +
                           std::to_string(std::min(max_vertices, 31)));

    Solver solver(g);
    const Mask all = n == 0 ? 0 : ((Mask{1} << n) - 1);
    TreedepthResult result;
    result.depth = solver.solve(all);
    solver.collect_witness(all, result.choices);
    return result;
}

int replay_witness(const Graph& g, const TreedepthResult& result) {
    std::map<VertexSet, Vertex> choice_of;
    for (const auto& [v, subgraph] : result.choices) choice_of[subgraph] = v;

    // Depth recomputation that only follows recorded decisions.
    auto replay = [&](auto&& self, const VertexSet& vertices) -> int {
        if (vertices.empty()) return 0;
        VertexSet removed;
        {
            std::vector<Vertex> outside;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!vertices.contains(v)) outside.push_back(v);
            removed = VertexSet(std::move(outside));
        }
        std::vector<VertexSet> comps = components(g, removed);
        if (comps.size() > 1) {
            int depth = 0;
            for (const VertexSet& c : comps)
                depth = std::max(depth, self(self, c));
            return depth;
        }
        auto hit = choice_of.find(vertices);
        if (hit == choice_of.end() || !vertices.contains(hit->second))
            throw std::invalid_argument(
                "witness does not cover a subproblem it should");
        return 1 + self(self, vertices.without(hit->second));
    };

    std::vector<Vertex> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return replay(replay, VertexSet(std::move(all)));
}

} // namespace sepkit
