#ifndef SEPKIT_GRAPH_HPP
#define SEPKIT_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sepkit {

using Vertex = int;
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Subset of vertices in canonical form: strictly increasing ids, no
/// duplicates. This is the universal currency for separators and
/// components; ordering and equality are lexicographic on the id list.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);
    static VertexSet from_bits(const Bits& bits);

    const std::vector<Vertex>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    bool contains(Vertex v) const;
    bool is_subset_of(const VertexSet& other) const;
    bool is_proper_subset_of(const VertexSet& other) const;

    VertexSet with(Vertex v) const;
    VertexSet without(Vertex v) const;
    Bits to_bits(int universe) const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<Vertex> ids_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const;
};

/// Simple undirected graph over dense vertex ids 0..n-1, immutable after
/// construction. Adjacency is kept as one bitset row per vertex, so
/// neighborhood unions and traversal masks are word-parallel.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const;
    const Bits& neighbors(Vertex v) const;
    VertexSet neighbor_set(Vertex v) const;
    int degree(Vertex v) const;

    bool connected() const { return connected_; }

    /// Edges in canonical order: (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    Bits vertex_mask() const;

    bool operator==(const Graph& other) const;

    /// Row-major adjacency blocks (words() 64-bit words per vertex) for
    /// the word-level traversal core used by the enumeration loops.
    int words() const { return words_; }
    const std::uint64_t* row_blocks(Vertex v) const {
        return blocks_.data() + static_cast<std::size_t>(v) * words_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    bool connected_ = true;
    std::vector<Bits> adj_;
    std::vector<int> degree_;
    std::vector<std::uint64_t> blocks_;
};

/// Connected components of g - removed, each in canonical form, ordered
/// by smallest member. Empty list iff removed covers every vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

/// Reusable breadth-first scratch space. One instance per worker; all
/// traversal masks are recycled across calls, so the hot enumeration
/// loops run allocation-free.
class Bfs {
public:
    explicit Bfs(const Graph& g);

    /// Vertices reachable from start in g - removed (start must be free).
    const Bits& reach(const Bits& removed, Vertex start);
    /// True iff g - removed has at least two connected components.
    bool splits(const Bits& removed);
    /// True iff a and b are connected in g - removed.
    bool connects(const Bits& removed, Vertex a, Vertex b);
    /// All components of g - removed as bit masks, ascending by seed.
    void components(const Bits& removed, std::vector<Bits>& out);
    /// N(component): vertices outside the component adjacent to it.
    void neighborhood(const Bits& component, Bits& out) const;

private:
    const Graph* g_;
    Bits visited_, frontier_, next_, free_;
};

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. Blank lines and '#' comment lines are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
std::string write_edge_list(const Graph& g);

} // namespace sepkit

#endif
