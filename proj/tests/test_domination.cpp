#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eckit/domination.hpp"
#include "eckit/graph.hpp"

#include <algorithm>
#include <vector>

using namespace eckit;

namespace {

// Definitional oracle working from endpoints only: D dominates when every
// edge outside D shares an endpoint with an edge in D.
bool dominating_oracle(const Graph& g, uint32_t mask) {
    for (int e = 0; e < g.m(); ++e) {
        if ((mask >> e) & 1) continue;
        auto [a, b] = g.edge(e);
        bool hit = false;
        for (int f = 0; f < g.m() && !hit; ++f) {
            if (!((mask >> f) & 1)) continue;
            auto [c, d] = g.edge(f);
            hit = a == c || a == d || b == c || b == d;
        }
        if (!hit) return false;
    }
    return true;
}

std::vector<int> undominated_oracle(const Graph& g, uint32_t mask) {
    std::vector<int> out;
    for (int e = 0; e < g.m(); ++e) {
        if ((mask >> e) & 1) continue;
        auto [a, b] = g.edge(e);
        bool hit = false;
        for (int f = 0; f < g.m() && !hit; ++f) {
            if (!((mask >> f) & 1)) continue;
            auto [c, d] = g.edge(f);
            hit = a == c || a == d || b == c || b == d;
        }
        if (!hit) out.push_back(e);
    }
    return out;
}

EdgeSet from_mask(int m, uint32_t mask) {
    EdgeSet s(m);
    for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) s.set(i);
    return s;
}

uint32_t to_mask(const EdgeSet& s) {
    uint32_t mask = 0;
    for (int i : s.indices()) mask |= 1u << i;
    return mask;
}

std::vector<uint32_t> minimal_eds_oracle(const Graph& g) {
    std::vector<uint32_t> out;
    for (uint32_t mask = 0; mask < (1u << g.m()); ++mask) {
        if (!dominating_oracle(g, mask)) continue;
        bool minimal = true;
        for (int i = 0; i < g.m() && minimal; ++i)
            if (((mask >> i) & 1) && dominating_oracle(g, mask & ~(1u << i))) minimal = false;
        if (minimal) out.push_back(mask);
    }
    return out;
}

// Largest family of pairwise disjoint dominating sets. Leftover edges can
// always be absorbed into one class, so this equals the largest number of
// classes in an all-dominating partition.
int packing_oracle(const std::vector<uint32_t>& minimal, size_t i, uint32_t used, int depth) {
    int best = depth;
    for (size_t j = i; j < minimal.size(); ++j) {
        if (minimal[j] & used) continue;
        best = std::max(best, packing_oracle(minimal, j + 1, used | minimal[j], depth + 1));
    }
    return best;
}

const std::vector<Graph>& suite() {
    static std::vector<Graph> gs = {
        path(2),  path(4),  path(5),  path(6),
        cycle(3), cycle(4), cycle(5), cycle(6),
        star(4),  star(6),  double_star(2, 2),
        complete(4), complete_bipartite(2, 3),
        make_graph(4, {{0, 1}, {2, 3}}),
        make_graph(7, {{0, 1}, {2, 3}, {3, 4}, {5, 6}}),
        make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}), // net
    };
    return gs;
}

} // namespace

TEST_CASE("domination check matches the endpoint oracle on all subsets") {
    for (const Graph& g : suite()) {
        REQUIRE(g.m() <= 10);
        for (uint32_t mask = 0; mask < (1u << g.m()); ++mask) {
            DominationReport rep = check_edge_dominating(g, from_mask(g.m(), mask));
            CHECK(rep.dominating == dominating_oracle(g, mask));
            CHECK(rep.undominated.indices() == undominated_oracle(g, mask));
        }
    }
}

TEST_CASE("domination corner cases") {
    Graph e0 = make_graph(3, {});
    CHECK(check_edge_dominating(e0, EdgeSet(0)).dominating); // nothing to cover
    Graph k2 = complete(2);
    CHECK(check_edge_dominating(k2, EdgeSet::of(1, {0})).dominating);
    CHECK_FALSE(check_edge_dominating(k2, EdgeSet(1)).dominating);
    CHECK_THROWS_AS(check_edge_dominating(k2, EdgeSet(3)), MismatchedGraph);
}

TEST_CASE("minimal dominating sets match the oracle") {
    for (const Graph& g : suite()) {
        std::vector<uint32_t> got;
        for (const EdgeSet& s : enumerate_minimal_eds(g)) got.push_back(to_mask(s));
        CHECK(got == minimal_eds_oracle(g));
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("shrink to minimal") {
    for (const Graph& g : suite()) {
        if (g.m() == 0) continue;
        EdgeSet all = EdgeSet::all(g.m());
        EdgeSet s = shrink_to_minimal(g, all);
        uint32_t mask = to_mask(s);
        CHECK(dominating_oracle(g, mask));
        for (int i = 0; i < g.m(); ++i)
            if ((mask >> i) & 1) CHECK_FALSE(dominating_oracle(g, mask & ~(1u << i)));
        // Deterministic: repeated runs agree.
        CHECK(to_mask(shrink_to_minimal(g, all)) == mask);
    }
    CHECK_THROWS_AS(shrink_to_minimal(path(4), EdgeSet(3)), NotDominating);
}

TEST_CASE("edge domatic number matches the disjoint packing oracle") {
    for (const Graph& g : suite()) {
        if (g.m() == 0) continue;
        EdgeDomaticResult r = edge_domatic_number(g);
        CHECK(r.value == packing_oracle(minimal_eds_oracle(g), 0, 0, 0));

        // Witness really is a partition into `value` dominating classes.
        CHECK((int)r.witness.size() == r.value);
        EdgeSet seen(g.m());
        for (const EdgeSet& c : r.witness) {
            CHECK_FALSE(c.empty());
            CHECK_FALSE(seen.intersects(c));
            seen |= c;
            CHECK(check_edge_dominating(g, c).dominating);
        }
        CHECK(seen == EdgeSet::all(g.m()));
    }
}

TEST_CASE("edge domatic examples") {
    CHECK(edge_domatic_number(complete(2)).value == 1);
    CHECK(edge_domatic_number(cycle(4)).value == 2);
    CHECK(edge_domatic_number(cycle(5)).value == 2);
    CHECK(edge_domatic_number(cycle(6)).value == 3);
    CHECK(edge_domatic_number(star(4)).value == 3); // every edge is full
    CHECK(edge_domatic_number(path(4)).value == 2);
}
