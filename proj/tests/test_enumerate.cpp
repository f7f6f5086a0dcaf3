#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eckit/canonical.hpp"
#include "eckit/enumerate.hpp"
#include "eckit/graph.hpp"

#include <set>

using namespace eckit;

namespace {

std::set<std::string> keys_of(const std::vector<Graph>& gs) {
    std::set<std::string> out;
    for (const Graph& g : gs) out.insert(canonical_key(g));
    return out;
}

bool sorted_by_size_then_key(const std::vector<Graph>& gs) {
    for (size_t i = 1; i < gs.size(); ++i) {
        auto a = std::make_pair(gs[i - 1].m(), canonical_key(gs[i - 1]));
        auto b = std::make_pair(gs[i].m(), canonical_key(gs[i]));
        if (b < a) return false;
    }
    return true;
}

} // namespace

TEST_CASE("graph counts per order") {
    const int want[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        std::vector<Graph> gs = all_graphs(n);
        CHECK((int)gs.size() == want[n - 1]);
        CHECK(keys_of(gs).size() == gs.size()); // pairwise non-isomorphic
        for (const Graph& g : gs) CHECK(g.n() == n);
        CHECK(sorted_by_size_then_key(gs));
    }
}

TEST_CASE("counts match a labelled brute force") {
    // Independent of the augmentation scheme: key every labelled graph.
    for (int n : {3, 4, 5, 6}) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::set<std::string> seen;
        for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> es;
            for (size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) es.push_back(pairs[i]);
            seen.insert(canonical_key(make_graph(n, es)));
        }
        CHECK(seen == keys_of(all_graphs(n)));
    }
}

TEST_CASE("connected graph counts") {
    const int want[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        std::vector<Graph> gs = connected_graphs(n);
        CHECK((int)gs.size() == want[n - 1]);
        for (const Graph& g : gs) CHECK(g.connected());
    }
    // Consistency with the full list.
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> filtered;
        for (const Graph& g : all_graphs(n))
            if (g.connected()) filtered.insert(canonical_key(g));
        CHECK(filtered == keys_of(connected_graphs(n)));
    }
}

TEST_CASE("tree counts") {
    const int want[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        std::vector<Graph> ts = trees(n);
        CHECK((int)ts.size() == want[n - 1]);
        CHECK(keys_of(ts).size() == ts.size());
        for (const Graph& t : ts) {
            CHECK(t.m() == n - 1);
            CHECK((n == 1 || t.connected()));
        }
    }
}

TEST_CASE("unicyclic counts") {
    const int want[] = {1, 2, 5, 13, 33, 89, 240, 657};
    for (int n = 3; n <= 10; ++n) {
        std::vector<Graph> us = unicyclic_graphs(n);
        CHECK((int)us.size() == want[n - 3]);
        CHECK(keys_of(us).size() == us.size());
        for (const Graph& u : us) {
            CHECK(u.m() == n); // connected with m = n: exactly one cycle
            CHECK(u.connected());
        }
    }
    CHECK(canonical_key(unicyclic_graphs(3)[0]) == canonical_key(cycle(3)));
}

TEST_CASE("trees and unicyclic lists agree with filters of the full list") {
    for (int n = 3; n <= 7; ++n) {
        std::set<std::string> t_filtered, u_filtered;
        for (const Graph& g : all_graphs(n)) {
            if (!g.connected()) continue;
            if (g.m() == n - 1) t_filtered.insert(canonical_key(g));
            if (g.m() == n) u_filtered.insert(canonical_key(g));
        }
        CHECK(t_filtered == keys_of(trees(n)));
        CHECK(u_filtered == keys_of(unicyclic_graphs(n)));
    }
}

TEST_CASE("deterministic order") {
    std::vector<Graph> a = all_graphs(5);
    std::vector<Graph> b = all_graphs(5);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].edges() == b[i].edges());
}

TEST_CASE("range validation") {
    CHECK_THROWS_AS(all_graphs(0), InvalidFamilyParams);
    CHECK_THROWS_AS(all_graphs(8), SizeCapExceeded);
    CHECK_THROWS_AS(connected_graphs(8), SizeCapExceeded);
    CHECK_THROWS_AS(trees(0), InvalidFamilyParams);
    CHECK_THROWS_AS(trees(11), SizeCapExceeded);
    CHECK_THROWS_AS(unicyclic_graphs(2), InvalidFamilyParams);
    CHECK_THROWS_AS(unicyclic_graphs(11), SizeCapExceeded);
}
