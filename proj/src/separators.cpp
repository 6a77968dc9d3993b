#include "sepkit/separators.hpp"

#include <stdexcept>
#include <string>

namespace sepkit {

namespace {

void require_connected(const Graph& g) {
    if (!g.connected())
        throw std::invalid_argument(
            "separator predicates require a connected graph");
}

} // namespace

bool is_separator(const Graph& g, const Bits& s, Bfs& bfs) {
    return bfs.splits(s);
}

bool is_separator(const Graph& g, const VertexSet& s) {
    require_connected(g);
    Bits mask = s.to_bits(g.vertex_count());
    Bfs bfs(g);
    return bfs.splits(mask);
}

bool is_ab_separator(const Graph& g, const VertexSet& s, Vertex a, Vertex b) {
    require_connected(g);
    const int n = g.vertex_count();
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("is_ab_separator: endpoint out of range");
    if (a == b)
        throw std::invalid_argument("is_ab_separator: endpoints must differ");
    if (s.contains(a) || s.contains(b))
        throw std::invalid_argument(
            "is_ab_separator: endpoints must survive removal of s");
    Bits mask = s.to_bits(n);
    Bfs bfs(g);
    return !bfs.connects(mask, a, b);
}

bool is_minimal_ab_separator(const Graph& g, const VertexSet& s, Vertex a,
                             Vertex b) {
    if (!is_ab_separator(g, s, a, b)) return false;
    Bits mask = s.to_bits(g.vertex_count());
    Bfs bfs(g);
    for (Vertex u : s) {
        mask.reset(static_cast<std::size_t>(u));
        const bool still = !bfs.connects(mask, a, b);
        mask.set(static_cast<std::size_t>(u));
        if (still) return false;
    }
    return true;
}

bool is_inclusion_wise_minimal_separator(const Graph& g, const Bits& s,
                                         Bfs& bfs) {
    if (!bfs.splits(s)) return false;
    Bits mask = s;
    for (auto u = s.find_first(); u != Bits::npos; u = s.find_next(u)) {
        mask.reset(u);
        const bool still = bfs.splits(mask);
        mask.set(u);
        if (still) return false;
    }
    return true;
}

bool is_inclusion_wise_minimal_separator(const Graph& g, const VertexSet& s) {
    require_connected(g);
    Bits mask = s.to_bits(g.vertex_count());
    Bfs bfs(g);
    return is_inclusion_wise_minimal_separator(g, mask, bfs);
}

} // namespace sepkit
