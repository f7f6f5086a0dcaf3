#include "eckit/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace eckit {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0 || n > 62) throw UnsupportedOrder("order must be between 0 and 62, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.vadj_.assign(n, 0);
    g.eidx_.assign((size_t)n * n, -1);
    g.edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n) throw VertexOutOfRange("endpoint " + std::to_string(u) + " out of range");
        if (v < 0 || v >= n) throw VertexOutOfRange("endpoint " + std::to_string(v) + " out of range");
        if (u == v) throw SelfLoop("self loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (g.eidx_[(size_t)u * n + v] != -1)
            throw DuplicateEdge("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        int idx = (int)g.edges_.size();
        g.eidx_[(size_t)u * n + v] = (int16_t)idx;
        g.eidx_[(size_t)v * n + u] = (int16_t)idx;
        g.edges_.emplace_back(u, v);
        g.vadj_[u] |= uint64_t(1) << v;
        g.vadj_[v] |= uint64_t(1) << u;
    }
    int m = g.m();
    g.vinc_.assign(n, EdgeSet(m));
    g.enbr_.assign(m, EdgeSet(m));
    for (int i = 0; i < m; ++i) {
        g.vinc_[g.edges_[i].first].set(i);
        g.vinc_[g.edges_[i].second].set(i);
    }
    for (int i = 0; i < m; ++i) {
        g.enbr_[i] = g.vinc_[g.edges_[i].first] | g.vinc_[g.edges_[i].second];
        g.enbr_[i].reset(i);
    }
    return g;
}

int Graph::edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return -1;
    return eidx_[(size_t)u * n_ + v];
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    uint64_t seen = 1;
    uint64_t frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= vadj_[v] & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return std::popcount(seen) == n_;
}

EdgeSet edge_neighborhood(const Graph& g, int e, bool closed) {
    EdgeSet s = g.open_edge_neighborhood(e);
    if (closed) s.set(e);
    return s;
}

int edge_degree(const Graph& g, int e) {
    return g.open_edge_neighborhood(e).count();
}

bool is_full_edge(const Graph& g, int e) {
    return edge_degree(g, e) == g.m() - 1;
}

Graph line_graph(const Graph& g) {
    int m = g.m();
    std::vector<std::pair<int, int>> le;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.open_edge_neighborhood(i).test(j)) le.emplace_back(i, j);
    return make_graph(m, le);
}

Graph strip_isolated(const Graph& g) {
    std::vector<int> relabel(g.n(), -1);
    int k = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) relabel[v] = k++;
    std::vector<std::pair<int, int>> es;
    es.reserve(g.m());
    for (auto [u, v] : g.edges()) es.emplace_back(relabel[u], relabel[v]);
    return make_graph(k, es);
}

Graph path(int n) {
    if (n < 1) throw InvalidFamilyParams("path order must be at least 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return make_graph(n, es);
}

Graph cycle(int n) {
    if (n < 3) throw InvalidFamilyParams("cycle order must be at least 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return make_graph(n, es);
}

Graph complete(int n) {
    if (n < 1) throw InvalidFamilyParams("complete graph order must be at least 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return make_graph(n, es);
}

Graph complete_bipartite(int r, int s) {
    if (r < 1 || s < 1) throw InvalidFamilyParams("bipartite parts must be nonempty");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < s; ++v) es.emplace_back(u, r + v);
    return make_graph(r + s, es);
}

Graph star(int k) {
    if (k < 1) throw InvalidFamilyParams("star order must be at least 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < k; ++i) es.emplace_back(0, i);
    return make_graph(k, es);
}

Graph double_star(int p, int q) {
    if (p < 1 || q < 1) throw InvalidFamilyParams("double star needs at least one leaf per center");
    std::vector<std::pair<int, int>> es;
    es.emplace_back(0, 1);
    for (int i = 0; i < p; ++i) es.emplace_back(0, 2 + i);
    for (int i = 0; i < q; ++i) es.emplace_back(1, 2 + p + i);
    return make_graph(2 + p + q, es);
}

Graph family_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InvalidFamilyParams("family spec needs name:params, got '" + spec + "'");
    std::string name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::vector<int> args;
    {
        std::string tok;
        std::istringstream in(rest);
        while (std::getline(in, tok, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                args.push_back(v);
            } catch (const std::exception&) {
                throw InvalidFamilyParams("bad family parameter '" + tok + "' in '" + spec + "'");
            }
        }
    }
    auto want = [&](size_t k) {
        if (args.size() != k)
            throw InvalidFamilyParams("family '" + name + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (name == "path") { want(1); return path(args[0]); }
    if (name == "cycle") { want(1); return cycle(args[0]); }
    if (name == "complete") { want(1); return complete(args[0]); }
    if (name == "kb") { want(2); return complete_bipartite(args[0], args[1]); }
    if (name == "star") { want(1); return star(args[0]); }
    if (name == "dstar") { want(2); return double_star(args[0], args[1]); }
    throw InvalidFamilyParams("unknown family '" + name + "'");
}

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw MalformedGraph6("empty graph6 line");
    if (line[0] == '~') throw UnsupportedOrder("graph6 long form (n > 62) not supported");
    for (char c : line)
        if (c < 63 || c > 126) throw MalformedGraph6("graph6 byte out of printable range");
    int n = line[0] - 63;
    if (n < 0 || n > 62) throw MalformedGraph6("graph6 order byte out of range");
    int bits = n * (n - 1) / 2;
    int need = (bits + 5) / 6;
    if ((int)line.size() != 1 + need)
        throw MalformedGraph6("graph6 length mismatch for order " + std::to_string(n));
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int group = line[1 + bit / 6] - 63;
            if ((group >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
            ++bit;
        }
    }
    for (int b = bits; b < 6 * need; ++b) {
        int group = line[1 + b / 6] - 63;
        if ((group >> (5 - b % 6)) & 1) throw MalformedGraph6("nonzero padding bits");
    }
    return make_graph(n, es);
}

std::string write_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    out.push_back((char)(n + 63));
    int bits = n * (n - 1) / 2;
    int need = (bits + 5) / 6;
    std::string groups(need, (char)0);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) groups[bit / 6] |= (char)(1 << (5 - bit % 6));
            ++bit;
        }
    }
    for (char& c : groups) c = (char)(c + 63);
    return out + groups;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw GraphError("edge list header must be 'n m'");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw GraphError("edge list truncated at edge " + std::to_string(i));
        es.emplace_back(u, v);
    }
    return make_graph(n, es);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.edge(i);
        out << "  " << u << " -- " << v << " [label=\"" << i << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace eckit
