#include "eckit/domination.hpp"

#include <algorithm>

namespace eckit {

namespace {

void check_universe(const Graph& g, const EdgeSet& d) {
    if (d.universe() != g.m())
        throw MismatchedGraph("edge set universe " + std::to_string(d.universe()) +
                              " does not match graph with " + std::to_string(g.m()) + " edges");
}

// Bitmask cover table for small m: cover[mask] = union of open neighborhoods
// of the edges in mask. A mask dominates iff (cover[mask] | mask) covers E.
std::vector<uint32_t> build_cover_table(const Graph& g) {
    int m = g.m();
    std::vector<uint32_t> open(m, 0);
    for (int e = 0; e < m; ++e)
        for (int f : g.open_edge_neighborhood(e).indices()) open[e] |= 1u << f;
    std::vector<uint32_t> cover(size_t(1) << m, 0);
    for (uint32_t mask = 1; mask < cover.size(); ++mask) {
        uint32_t low = mask & (~mask + 1);
        cover[mask] = cover[mask ^ low] | open[std::countr_zero(low)];
    }
    return cover;
}

} // namespace

DominationReport check_edge_dominating(const Graph& g, const EdgeSet& d) {
    check_universe(g, d);
    DominationReport rep{true, EdgeSet(g.m())};
    for (int e = 0; e < g.m(); ++e) {
        if (d.test(e)) continue;
        if (!g.open_edge_neighborhood(e).intersects(d)) {
            rep.dominating = false;
            rep.undominated.set(e);
        }
    }
    return rep;
}

std::vector<EdgeSet> enumerate_minimal_eds(const Graph& g) {
    int m = g.m();
    if (m > 20) throw SizeCapExceeded("minimal dominating set enumeration capped at 20 edges");
    std::vector<EdgeSet> out;
    if (m == 0) return out;
    std::vector<uint32_t> cover = build_cover_table(g);
    const uint32_t full = (m == 32) ? ~0u : (1u << m) - 1;
    auto dominating = [&](uint32_t mask) { return (cover[mask] | mask) == full; };
    for (uint32_t mask = 1; mask <= full; ++mask) {
        if (!dominating(mask)) continue;
        bool minimal = true;
        for (uint32_t rest = mask; rest && minimal; rest &= rest - 1) {
            uint32_t low = rest & (~rest + 1);
            if (dominating(mask ^ low)) minimal = false;
        }
        if (!minimal) continue;
        EdgeSet s(m);
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) s.set(e);
        out.push_back(s);
    }
    return out;
}

EdgeSet shrink_to_minimal(const Graph& g, EdgeSet d) {
    check_universe(g, d);
    if (!check_edge_dominating(g, d).dominating)
        throw NotDominating("cannot shrink a non dominating set");
    for (;;) {
        int removable = -1;
        for (int e = g.m() - 1; e >= 0; --e) {
            if (!d.test(e)) continue;
            EdgeSet trial = d;
            trial.reset(e);
            if (check_edge_dominating(g, trial).dominating) {
                removable = e;
                break;
            }
        }
        if (removable < 0) return d;
        d.reset(removable);
    }
}

namespace {

struct DomaticSearch {
    const Graph& g;
    int m;
    const std::vector<uint32_t>& cover;
    uint32_t full;
    int best = 0;
    std::vector<uint32_t> best_classes;
    std::vector<uint32_t> classes;
    int cap;

    DomaticSearch(const Graph& graph, const std::vector<uint32_t>& cov, int upper)
        : g(graph), m(graph.m()), cover(cov),
          full((m == 32) ? ~0u : (1u << m) - 1), cap(upper) {}

    bool dominating(uint32_t mask) const { return (cover[mask] | mask) == full; }

    void dfs(int i, uint32_t rest) {
        if (i == m) {
            for (uint32_t c : classes)
                if (!dominating(c)) return;
            if ((int)classes.size() > best) {
                best = (int)classes.size();
                best_classes = classes;
            }
            return;
        }
        int k = (int)classes.size();
        if (k + (m - i) <= best) return;
        for (uint32_t c : classes)
            if (!dominating(c | rest)) return;
        uint32_t bit = 1u << i;
        if (k < cap) {
            classes.push_back(bit);
            dfs(i + 1, rest & ~bit);
            classes.pop_back();
        }
        for (int c = 0; c < k; ++c) {
            classes[c] |= bit;
            dfs(i + 1, rest & ~bit);
            classes[c] &= ~bit;
        }
    }
};

} // namespace

EdgeDomaticResult edge_domatic_number(const Graph& g) {
    int m = g.m();
    if (m == 0) throw NoEdges("edge domatic number needs at least one edge");
    if (m > 16) throw SizeCapExceeded("edge domatic number capped at 16 edges");
    std::vector<uint32_t> cover = build_cover_table(g);
    const uint32_t full = (m == 32) ? ~0u : (1u << m) - 1;
    int min_nbhd = m;
    for (int e = 0; e < m; ++e) min_nbhd = std::min(min_nbhd, edge_degree(g, e) + 1);
    int min_eds = m;
    for (uint32_t mask = 1; mask <= full; ++mask)
        if ((cover[mask] | mask) == full) min_eds = std::min(min_eds, std::popcount(mask));
    int cap = std::min(min_nbhd, m / std::max(1, min_eds));
    DomaticSearch search(g, cover, cap);
    search.dfs(0, full);
    EdgeDomaticResult res;
    res.value = search.best;
    for (uint32_t c : search.best_classes) {
        EdgeSet s(m);
        for (int e = 0; e < m; ++e)
            if ((c >> e) & 1) s.set(e);
        res.witness.push_back(s);
    }
    return res;
}

} // namespace eckit
