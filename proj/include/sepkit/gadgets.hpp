#ifndef SEPKIT_GADGETS_HPP
#define SEPKIT_GADGETS_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/cnf.hpp"
#include "sepkit/graph.hpp"

namespace sepkit {

/// Four-cycle a-b-c-d-a with a pendant e on d: the smallest witness that
/// a minimal separator need not be inclusion-wise minimal.
struct BannerLabels {
    Vertex a = 0, b = 1, c = 2, d = 3, e = 4;
};
std::pair<Graph, BannerLabels> banner();

/// Two hubs a, b joined by n disjoint three-vertex paths u_i-v_i-w_i
/// (a adjacent to every u_i, b to every w_i). Picking one vertex per path
/// gives 3^n inclusion-wise minimal separators.
struct MelonLabels {
    Vertex a = 0, b = 1;
    std::vector<std::array<Vertex, 3>> paths;  // paths[i] = {u_i, v_i, w_i}
};
std::pair<Graph, MelonLabels> melon(int n);

/// One new degree-1 neighbor per target vertex, ids appended after the
/// existing ids in target order. Returns the new graph and host->pendant.
std::pair<Graph, std::map<Vertex, Vertex>> add_pendants(
    const Graph& g, const VertexSet& targets);

/// melon(n) with a pendant on every vertex: the inclusion-wise minimal
/// family collapses to the 3n+2 original-vertex singletons while the
/// minimal-separator count stays exponential.
struct PendantMelon {
    Graph graph;
    MelonLabels melon;
    std::map<Vertex, Vertex> pendants;
};
PendantMelon melon_with_pendants(int n);

/// Role map for a reduction graph. Vertex layout: a=0, b=1, then one
/// 10-vertex block per clause (u1 v1 w1 u2 v2 w2 u3 v3 w3 c), then one
/// connector per cross-clause conflicting pair, then pendants in
/// ascending host order.
struct GadgetLabels {
    struct ClauseBlock {
        std::array<Vertex, 3> u{}, v{}, w{};
        Vertex c = 0;
        std::array<int, 3> var{};       // variable of literal i
        std::array<bool, 3> negated{};  // polarity of literal i
    };
    struct Connector {
        Vertex y = 0;
        Vertex u = 0;  // u-side of the conflicting pair
        Vertex w = 0;  // w-side, from a different clause
        int var = 0;   // shared variable
    };

    enum class Role { a, b, u, v, w, c, y, z };
    struct RoleRef {
        Role role = Role::a;
        int i = 0;      // literal position (1-based) for u/v/w
        int j = 0;      // clause index (1-based) for u/v/w/c, pair index for y
        Vertex host = -1;  // pendant host for z
    };

    Vertex a = 0, b = 1;
    int var_count = 0;
    std::vector<ClauseBlock> clauses;
    std::vector<Connector> connectors;
    std::vector<std::pair<Vertex, Vertex>> pendants;  // (host, pendant)
    std::vector<RoleRef> role_of;                     // indexed by vertex id

    int clause_count() const { return static_cast<int>(clauses.size()); }
    std::string role_name(Vertex id) const;
    /// All c_j, u_i^j and w_i^j vertices: the candidate set that every
    /// large inclusion-wise minimal separator must live in.
    VertexSet cuw_candidates() const;
};

/// The reduction graph of a normalized 3-CNF formula.
///
/// Per clause j: induced paths u_i^j-v_i^j-w_i^j and an extra vertex c_j;
/// edges a-u_i^j and b-w_i^j; c_j adjacent to u_i^j when literal i is
/// negative, to w_i^j otherwise. One connector y joins every conflicting
/// pair (u_i^j, w_i'^j') over a shared variable with j != j'. Pendants
/// attach to a, b, every connector and every middle vertex.
/// Total vertex count: 13m + 2p + 4 where p is the conflicting-pair count.
std::pair<Graph, GadgetLabels> sat_to_graph(const Cnf3& f);

/// Lemma-2 construction: { u_i^j : I(var) = 1 } u { w_i^j : I(var) = 0 }
/// u { c_j : clause j traversable w.r.t. I }. Requires I to satisfy f.
VertexSet assignment_to_separator(const Cnf3& f, const GadgetLabels& labels,
                                  const Assignment& assignment);

/// Inverse direction: variable -> 1 iff one of its u-vertices was
/// selected. Requires an inclusion-wise minimal separator of size >= 4;
/// raises contradiction_error if the set selects both truth values of a
/// variable or strays outside the c/u/w candidates.
Assignment separator_to_assignment(const Graph& g, const GadgetLabels& labels,
                                   const VertexSet& separator);

// Labels sidecars (flat role -> id map plus structural extras).
std::string labels_to_json(const BannerLabels& labels);
std::string labels_to_json(const MelonLabels& labels);
std::string labels_to_json(const MelonLabels& labels,
                           const std::map<Vertex, Vertex>& pendants);
std::string labels_to_json(const GadgetLabels& labels);

} // namespace sepkit

#endif
