#ifndef SEPKIT_TREEDEPTH_HPP
#define SEPKIT_TREEDEPTH_HPP

#include <utility>
#include <vector>

#include "sepkit/graph.hpp"

namespace sepkit {

/// Exact treedepth with an elimination witness: one (root vertex,
/// subproblem) choice per connected subproblem on the optimal path.
/// Replaying the choices reproduces the depth.
struct TreedepthResult {
    int depth = 0;
    std::vector<std::pair<Vertex, VertexSet>> choices;
};

/// Elementary recursion: empty -> 0, disconnected -> max over components,
/// connected -> 1 + min over vertices v of treedepth(g - v); memoized on
/// the vertex subset. Refuses graphs above max_vertices.
TreedepthResult treedepth_bruteforce(const Graph& g, int max_vertices = 14);

/// Recompute the depth using only the recorded choices; throws if the
/// witness misses a subproblem it should cover.
int replay_witness(const Graph& g, const TreedepthResult& result);

} // namespace sepkit

#endif
