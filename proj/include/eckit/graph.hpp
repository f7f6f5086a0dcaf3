#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eckit {

// Error hierarchy shared by all modules.
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateEdge : GraphError { using GraphError::GraphError; };
struct SelfLoop : GraphError { using GraphError::GraphError; };
struct VertexOutOfRange : GraphError { using GraphError::GraphError; };
struct EdgeOutOfRange : GraphError { using GraphError::GraphError; };
struct MalformedGraph6 : GraphError { using GraphError::GraphError; };
struct UnsupportedOrder : GraphError { using GraphError::GraphError; };
struct OrderTooLarge : GraphError { using GraphError::GraphError; };
struct MismatchedGraph : GraphError { using GraphError::GraphError; };
struct InvalidFamilyParams : GraphError { using GraphError::GraphError; };
struct SizeCapExceeded : GraphError { using GraphError::GraphError; };
struct NotDominating : GraphError { using GraphError::GraphError; };
struct OverlappingSets : GraphError { using GraphError::GraphError; };
struct EmptySet : GraphError { using GraphError::GraphError; };
struct NotAPartition : GraphError { using GraphError::GraphError; };
struct NotAnEcPartition : GraphError { using GraphError::GraphError; };
struct HasFullEdge : GraphError { using GraphError::GraphError; };
struct NoEdges : GraphError { using GraphError::GraphError; };
struct InvalidConstruction : GraphError { using GraphError::GraphError; };

// Subset of the edge index range {0,...,m-1} of one particular graph.
// Only meaningful against a graph with the same edge count.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int m) : m_(m), w_((m + 63) / 64, 0) {}

    static EdgeSet all(int m) {
        EdgeSet s(m);
        for (int i = 0; i < m; ++i) s.set(i);
        return s;
    }
    static EdgeSet of(int m, const std::vector<int>& idx) {
        EdgeSet s(m);
        for (int i : idx) s.set(i);
        return s;
    }

    int universe() const { return m_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }

    EdgeSet& operator|=(const EdgeSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    EdgeSet& subtract(const EdgeSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a.subtract(b); }

    bool operator==(const EdgeSet& o) const { return m_ == o.m_ && w_ == o.w_; }

    bool intersects(const EdgeSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const EdgeSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<int> indices() const {
        std::vector<int> v;
        for (int i = 0; i < m_; ++i)
            if (test(i)) v.push_back(i);
        return v;
    }

private:
    int m_ = 0;
    std::vector<uint64_t> w_;
};

// Ordered list of classes; the coalition layer checks the partition laws.
using EdgePartition = std::vector<EdgeSet>;

// Finite simple undirected graph. Vertices are 0..n-1, n <= 62 so that a
// vertex set always fits one machine word. Edges keep the order given at
// construction; edge index i permanently names the same endpoint pair.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    int m() const { return (int)edges_.size(); }

    std::pair<int, int> edge(int i) const {
        check_edge(i);
        return edges_[i];
    }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // -1 when the pair is not an edge.
    int edge_index(int u, int v) const;

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (vadj_[u] >> v) & 1u;
    }
    int degree(int v) const {
        check_vertex(v);
        return std::popcount(vadj_[v]);
    }
    uint64_t nbr_mask(int v) const {
        check_vertex(v);
        return vadj_[v];
    }
    const EdgeSet& incident_edges(int v) const {
        check_vertex(v);
        return vinc_[v];
    }
    // Open neighborhood: edges sharing an endpoint with e, excluding e.
    const EdgeSet& open_edge_neighborhood(int e) const {
        check_edge(e);
        return enbr_[e];
    }

    bool connected() const;

    friend Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    }
    void check_edge(int e) const {
        if (e < 0 || e >= m()) throw EdgeOutOfRange("edge " + std::to_string(e) + " out of range");
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<uint64_t> vadj_;
    std::vector<EdgeSet> vinc_;
    std::vector<EdgeSet> enbr_;
    std::vector<int16_t> eidx_;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// Neighborhood, degree and fullness of a single edge.
EdgeSet edge_neighborhood(const Graph& g, int e, bool closed);
int edge_degree(const Graph& g, int e);
bool is_full_edge(const Graph& g, int e);

// Vertex i of the result is edge e_i of g; adjacency = shared endpoint.
Graph line_graph(const Graph& g);

// Copy of g without isolated vertices, remaining vertices relabeled in order.
// Edge order is preserved. Useful when a property depends only on the edges.
Graph strip_isolated(const Graph& g);

// Standard families with frozen vertex and edge orderings:
//   path(n):    vertices 0..n-1, edges (i,i+1) in order
//   cycle(n):   path edges then the closing edge (0,n-1) last
//   complete(n), complete_bipartite(r,s): edges lexicographic by endpoints;
//                bipartite has left part 0..r-1, right part r..r+s-1
//   star(k):    k vertices total, center 0, edges (0,i) in order
//   double_star(p,q): centers 0,1; edge (0,1) first, then the p leaves of 0,
//                then the q leaves of 1
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int r, int s);
Graph star(int k);
Graph double_star(int p, int q);

// "name:params" mini-language, e.g. path:6, cycle:5, complete:4, kb:2,4,
// star:5, dstar:2,3. Throws InvalidFamilyParams on anything else.
Graph family_from_spec(const std::string& spec);

// graph6, short form only (n <= 62).
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// Plain text: first line "n m", then one "u v" line per edge.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// DOT with vertex labels = vertex indices and edge labels = edge indices.
std::string write_dot(const Graph& g);

} // namespace eckit
