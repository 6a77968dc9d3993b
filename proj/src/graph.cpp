#include "sepkit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sepkit/errors.hpp"

namespace sepkit {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.front() < 0)
        throw std::invalid_argument("VertexSet: negative vertex id");
}

VertexSet VertexSet::from_bits(const Bits& bits) {
    VertexSet s;
    s.ids_.reserve(bits.count());
    for (auto v = bits.find_first(); v != Bits::npos; v = bits.find_next(v))
        s.ids_.push_back(static_cast<Vertex>(v));
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
}

bool VertexSet::is_proper_subset_of(const VertexSet& other) const {
    return size() < other.size() && is_subset_of(other);
}

VertexSet VertexSet::with(Vertex v) const {
    VertexSet s = *this;
    auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
    if (it == s.ids_.end() || *it != v) s.ids_.insert(it, v);
    return s;
}

VertexSet VertexSet::without(Vertex v) const {
    VertexSet s = *this;
    auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
    if (it != s.ids_.end() && *it == v) s.ids_.erase(it);
    return s;
}

Bits VertexSet::to_bits(int universe) const {
    Bits b(universe);
    for (Vertex v : ids_) {
        if (v < 0 || v >= universe)
            throw std::invalid_argument("VertexSet: vertex id " +
                                        std::to_string(v) +
                                        " outside universe of size " +
                                        std::to_string(universe));
        b.set(static_cast<std::size_t>(v));
    }
    return b;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    bool first = true;
    for (Vertex v : s) {
        if (!first) os << ' ';
        os << v;
        first = false;
    }
    return os;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex v : s) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(n_, Bits(n_));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }
    degree_.resize(n_);
    int twice_m = 0;
    for (int v = 0; v < n_; ++v) {
        degree_[v] = static_cast<int>(adj_[v].count());
        twice_m += degree_[v];
    }
    m_ = twice_m / 2;

    words_ = (n_ + 63) / 64;
    blocks_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int v = 0; v < n_; ++v)
        boost::to_block_range(adj_[v],
                              blocks_.begin() +
                                  static_cast<std::size_t>(v) * words_);

    if (n_ > 1) {
        Bfs bfs(*this);
        connected_ = !bfs.splits(Bits(n_));
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return adj_[u].test(static_cast<std::size_t>(v));
}

const Bits& Graph::neighbors(Vertex v) const { return adj_[v]; }

VertexSet Graph::neighbor_set(Vertex v) const {
    return VertexSet::from_bits(adj_[v]);
}

int Graph::degree(Vertex v) const { return degree_[v]; }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (auto v = adj_[u].find_next(u); v != Bits::npos;
             v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<Vertex>(v));
    return out;
}

Bits Graph::vertex_mask() const {
    Bits b(n_);
    b.set();
    return b;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    Bits mask = removed.to_bits(g.vertex_count());
    Bfs bfs(g);
    std::vector<Bits> comps;
    bfs.components(mask, comps);
    std::vector<VertexSet> out;
    out.reserve(comps.size());
    for (const Bits& c : comps) out.push_back(VertexSet::from_bits(c));
    return out;
}

Bfs::Bfs(const Graph& g)
    : g_(&g),
      visited_(g.vertex_count()),
      frontier_(g.vertex_count()),
      next_(g.vertex_count()),
      free_(g.vertex_count()) {}

const Bits& Bfs::reach(const Bits& removed, Vertex start) {
    visited_.reset();
    frontier_.reset();
    visited_.set(static_cast<std::size_t>(start));
    frontier_.set(static_cast<std::size_t>(start));
    while (frontier_.any()) {
        next_.reset();
        for (auto v = frontier_.find_first(); v != Bits::npos;
             v = frontier_.find_next(v))
            next_ |= g_->neighbors(static_cast<Vertex>(v));
        next_ -= removed;
        next_ -= visited_;
        visited_ |= next_;
        frontier_.swap(next_);
    }
    return visited_;
}

bool Bfs::splits(const Bits& removed) {
    const std::size_t total = g_->vertex_count() - removed.count();
    if (total <= 1) return false;
    free_ = removed;
    free_.flip();
    const auto start = free_.find_first();
    return reach(removed, static_cast<Vertex>(start)).count() < total;
}

bool Bfs::connects(const Bits& removed, Vertex a, Vertex b) {
    return reach(removed, a).test(static_cast<std::size_t>(b));
}

void Bfs::components(const Bits& removed, std::vector<Bits>& out) {
    out.clear();
    free_ = removed;
    free_.flip();
    for (auto s = free_.find_first(); s != Bits::npos; s = free_.find_next(s)) {
        out.push_back(reach(removed, static_cast<Vertex>(s)));
        free_ -= out.back();
    }
}

void Bfs::neighborhood(const Bits& component, Bits& out) const {
    out.reset();
    for (auto v = component.find_first(); v != Bits::npos;
         v = component.find_next(v))
        out |= g_->neighbors(static_cast<Vertex>(v));
    out -= component;
}

namespace {

bool data_line(const std::string& line, std::string& out) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') return false;
    out = line;
    return true;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line, data;
    int n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        if (!data_line(line, data)) continue;
        std::istringstream fields(data);
        if (n < 0) {
            if (!(fields >> n >> m) || n < 0 || m < 0)
                throw parse_error("edge list: malformed header line");
        } else {
            Vertex u, v;
            if (!(fields >> u >> v))
                throw parse_error("edge list: malformed edge line: " + data);
            if (u < 0 || v < 0 || u >= v || v >= n)
                throw parse_error("edge list: edge must satisfy 0 <= u < v < n: " +
                                  data);
            edges.emplace_back(u, v);
        }
        std::string trailing;
        if (fields >> trailing)
            throw parse_error("edge list: trailing tokens on line: " + data);
    }
    if (n < 0) throw parse_error("edge list: missing header line");
    if (static_cast<int>(edges.size()) != m)
        throw parse_error("edge list: expected " + std::to_string(m) +
                          " edges, found " + std::to_string(edges.size()));
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw parse_error("edge list: duplicate edge");
    return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

} // namespace sepkit
