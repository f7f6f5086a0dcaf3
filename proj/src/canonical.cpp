#include "eckit/canonical.hpp"

#include <algorithm>
#include <map>

namespace eckit {

namespace {

// Degree-based color refinement: stable under isomorphism, used to order
// branching candidates.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.n();
    std::vector<int> colors(n, 0);
    {
        std::vector<int> degs;
        for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
        std::vector<int> uniq = degs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            colors[v] = (int)(std::lower_bound(uniq.begin(), uniq.end(), degs[v]) - uniq.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colors[v]);
            std::vector<int> nb;
            uint64_t mask = g.nbr_mask(v);
            while (mask) {
                int u = std::countr_zero(mask);
                mask &= mask - 1;
                nb.push_back(colors[u]);
            }
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> index;
        for (int v = 0; v < n; ++v) index.emplace(sig[v], 0);
        int next = 0;
        for (auto& kv : index) kv.second = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = index[sig[v]];
        if (fresh == colors) break;
        colors = fresh;
    }
    return colors;
}

// Exhaustive search for the vertex ordering minimizing the upper triangle
// bitstring, with prefix pruning against the best complete ordering so far.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> colors;
    std::vector<int> order;
    std::vector<char> used;
    std::vector<uint16_t> cols;
    std::vector<uint16_t> best;
    bool has_best = false;

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.n()), colors(refine_colors(graph)),
          order(n, -1), used(n, 0), cols(n, 0), best(n, 0) {}

    void dfs(int p, bool tight) {
        if (p == n) {
            if (!has_best || cols < best) {
                best = cols;
                has_best = true;
            }
            return;
        }
        struct Cand { uint16_t col; int color; int v; };
        std::vector<Cand> cands;
        cands.reserve(n - p);
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint16_t col = 0;
            for (int i = 0; i < p; ++i)
                if (g.adjacent(order[i], v)) col |= (uint16_t)(1u << (p - 1 - i));
            cands.push_back({col, colors[v], v});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.col != b.col) return a.col < b.col;
            if (a.color != b.color) return a.color < b.color;
            return a.v < b.v;
        });
        for (const Cand& c : cands) {
            if (has_best && tight && c.col > best[p]) break;
            bool child_tight = tight && has_best && c.col == best[p];
            order[p] = c.v;
            used[c.v] = 1;
            cols[p] = c.col;
            dfs(p + 1, child_tight);
            used[c.v] = 0;
        }
    }
};

} // namespace

std::string canonical_key(const Graph& g) {
    int n = g.n();
    if (n > 10) throw OrderTooLarge("canonical form capped at 10 vertices, got " + std::to_string(n));
    if (n == 0) return write_graph6(g);
    CanonSearch search(g);
    search.dfs(0, true);
    std::vector<std::pair<int, int>> es;
    for (int p = 1; p < n; ++p)
        for (int i = 0; i < p; ++i)
            if ((search.best[p] >> (p - 1 - i)) & 1) es.emplace_back(i, p);
    return write_graph6(make_graph(n, es));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_key(a) == canonical_key(b);
}

} // namespace eckit
