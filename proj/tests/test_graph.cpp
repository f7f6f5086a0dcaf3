#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eckit/graph.hpp"

#include <algorithm>
#include <set>

using namespace eckit;

namespace {

using Edges = std::vector<std::pair<int, int>>;

// Every labelled graph on n vertices, one per subset of the lexicographic
// pair list. Independent of the enumeration module on purpose.
std::vector<Graph> labelled_graphs(int n) {
    Edges pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        Edges es;
        for (size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1) es.push_back(pairs[i]);
        out.push_back(make_graph(n, es));
    }
    return out;
}

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    return {g.edges().begin(), g.edges().end()};
}

} // namespace

TEST_CASE("edge sets") {
    EdgeSet s = EdgeSet::of(10, {1, 4, 9});
    CHECK(s.universe() == 10);
    CHECK(s.count() == 3);
    CHECK(s.test(4));
    CHECK_FALSE(s.test(0));
    CHECK(s.indices() == std::vector<int>{1, 4, 9});

    EdgeSet t = EdgeSet::of(10, {4, 5});
    CHECK((s | t).indices() == std::vector<int>{1, 4, 5, 9});
    CHECK((s & t).indices() == std::vector<int>{4});
    CHECK((s - t).indices() == std::vector<int>{1, 9});
    CHECK(s.intersects(t));
    CHECK_FALSE(EdgeSet::of(10, {0}).intersects(s));
    CHECK(EdgeSet::of(10, {1, 9}).is_subset_of(s));
    CHECK_FALSE(s.is_subset_of(t));
    CHECK(EdgeSet(10).empty());
    CHECK(EdgeSet::all(4).count() == 4);

    s.reset(4);
    CHECK(s.indices() == std::vector<int>{1, 9});
    CHECK(EdgeSet::of(10, {1, 9}) == s);

    // A 70 edge universe exercises the second word.
    EdgeSet big = EdgeSet::of(70, {0, 63, 64, 69});
    CHECK(big.count() == 4);
    CHECK(big.test(64));
    CHECK((big - EdgeSet::of(70, {64})).indices() == std::vector<int>{0, 63, 69});
}

TEST_CASE("graph construction") {
    Graph g = make_graph(4, {{1, 0}, {1, 2}, {3, 2}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    // Endpoints are normalized low-high but edge order is preserved.
    CHECK(g.edge(0) == std::pair<int, int>{0, 1});
    CHECK(g.edge(1) == std::pair<int, int>{1, 2});
    CHECK(g.edge(2) == std::pair<int, int>{2, 3});
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.edge_index(0, 2) == -1);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.nbr_mask(1) == ((1ull << 0) | (1ull << 2)));
    CHECK(g.incident_edges(1).indices() == std::vector<int>{0, 1});
    CHECK(g.incident_edges(2).indices() == std::vector<int>{1, 2});

    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), SelfLoop);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), DuplicateEdge);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), VertexOutOfRange);
    CHECK_THROWS_AS(make_graph(63, {}), UnsupportedOrder);
    CHECK_THROWS_AS(make_graph(-1, {}), UnsupportedOrder);
    CHECK_THROWS_AS(g.edge(3), EdgeOutOfRange);
    CHECK_THROWS_AS(g.degree(4), VertexOutOfRange);

    Graph empty = make_graph(0, {});
    CHECK(empty.n() == 0);
    CHECK(empty.m() == 0);
}

TEST_CASE("edge neighborhoods") {
    Graph p4 = path(4); // 0-1, 1-2, 2-3
    CHECK(p4.open_edge_neighborhood(0).indices() == std::vector<int>{1});
    CHECK(p4.open_edge_neighborhood(1).indices() == std::vector<int>{0, 2});
    CHECK(edge_neighborhood(p4, 1, true).indices() == std::vector<int>{0, 1, 2});
    CHECK(edge_degree(p4, 0) == 1);
    CHECK(edge_degree(p4, 1) == 2);
    CHECK_FALSE(is_full_edge(p4, 0));
    CHECK(is_full_edge(p4, 1));

    Graph k3 = complete(3);
    for (int e = 0; e < 3; ++e) {
        CHECK(edge_degree(k3, e) == 2);
        CHECK(is_full_edge(k3, e));
    }

    Graph m2 = make_graph(4, {{0, 1}, {2, 3}});
    CHECK(edge_degree(m2, 0) == 0);
    CHECK_FALSE(is_full_edge(m2, 0));

    // Stars: every edge meets every other edge at the center.
    Graph s5 = star(5);
    for (int e = 0; e < 4; ++e) CHECK(is_full_edge(s5, e));
}

TEST_CASE("families have frozen edge orders") {
    CHECK(path(4).edges() == Edges{{0, 1}, {1, 2}, {2, 3}});
    CHECK(path(1).m() == 0);
    CHECK(cycle(4).edges() == Edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(complete(4).edges() == Edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(complete_bipartite(2, 3).edges() ==
          Edges{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(star(4).edges() == Edges{{0, 1}, {0, 2}, {0, 3}});
    CHECK(double_star(2, 1).edges() == Edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    CHECK(double_star(1, 1).n() == 4);

    CHECK_THROWS_AS(path(0), InvalidFamilyParams);
    CHECK_THROWS_AS(cycle(2), InvalidFamilyParams);
    CHECK_THROWS_AS(complete(0), InvalidFamilyParams);
    CHECK_THROWS_AS(complete_bipartite(0, 3), InvalidFamilyParams);
    CHECK_THROWS_AS(star(0), InvalidFamilyParams);
    CHECK_THROWS_AS(double_star(0, 1), InvalidFamilyParams);
}

TEST_CASE("family specs") {
    CHECK(edge_set(family_from_spec("path:6")) == edge_set(path(6)));
    CHECK(edge_set(family_from_spec("cycle:5")) == edge_set(cycle(5)));
    CHECK(edge_set(family_from_spec("complete:4")) == edge_set(complete(4)));
    CHECK(edge_set(family_from_spec("kb:2,4")) == edge_set(complete_bipartite(2, 4)));
    CHECK(edge_set(family_from_spec("star:7")) == edge_set(star(7)));
    CHECK(edge_set(family_from_spec("dstar:2,3")) == edge_set(double_star(2, 3)));

    CHECK_THROWS_AS(family_from_spec("path"), InvalidFamilyParams);
    CHECK_THROWS_AS(family_from_spec("blob:3"), InvalidFamilyParams);
    CHECK_THROWS_AS(family_from_spec("path:2,3"), InvalidFamilyParams);
    CHECK_THROWS_AS(family_from_spec("path:x"), InvalidFamilyParams);
    CHECK_THROWS_AS(family_from_spec("kb:2"), InvalidFamilyParams);
}

TEST_CASE("line graph and support") {
    Graph lp4 = line_graph(path(4));
    CHECK(lp4.n() == 3);
    CHECK(lp4.edges() == Edges{{0, 1}, {1, 2}});

    Graph lk13 = line_graph(star(4));
    CHECK(lk13.n() == 3);
    CHECK(lk13.m() == 3); // triangle

    Graph g = make_graph(5, {{1, 2}, {2, 3}});
    Graph s = strip_isolated(g);
    CHECK(s.n() == 3);
    CHECK(s.edges() == Edges{{0, 1}, {1, 2}});
    CHECK(strip_isolated(path(4)).n() == 4);
}

TEST_CASE("connectivity") {
    CHECK(path(6).connected());
    CHECK(cycle(5).connected());
    CHECK(complete(1).connected());
    CHECK_FALSE(make_graph(4, {{0, 1}, {2, 3}}).connected());
    CHECK_FALSE(make_graph(3, {}).connected());
    CHECK_FALSE(make_graph(3, {{0, 1}}).connected());
}

TEST_CASE("graph6 fixed strings") {
    CHECK(write_graph6(complete(2)) == "A_");
    CHECK(write_graph6(complete(3)) == "Bw");
    CHECK(write_graph6(make_graph(2, {})) == "A?");
    CHECK(parse_graph6("A_").m() == 1);
    CHECK(parse_graph6("Bw").m() == 3);
    CHECK(parse_graph6("?").n() == 0);
}

TEST_CASE("graph6 roundtrip over all labelled graphs up to order five") {
    for (int n = 0; n <= 5; ++n) {
        for (const Graph& g : labelled_graphs(n)) {
            Graph h = parse_graph6(write_graph6(g));
            CHECK(h.n() == g.n());
            CHECK(edge_set(h) == edge_set(g));
        }
    }
    // Larger spot checks, including the top of the supported range.
    for (const Graph& g : {path(20), cycle(41), complete_bipartite(5, 9), complete(11), star(62)}) {
        Graph h = parse_graph6(write_graph6(g));
        CHECK(h.n() == g.n());
        CHECK(edge_set(h) == edge_set(g));
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("~??"), UnsupportedOrder);
    CHECK_THROWS_AS(parse_graph6("B"), MalformedGraph6);      // truncated body
    CHECK_THROWS_AS(parse_graph6("A_X"), MalformedGraph6);    // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A "), MalformedGraph6);     // byte below range
    CHECK_THROWS_AS(parse_graph6("A@"), MalformedGraph6);     // nonzero padding
    CHECK_THROWS_AS(parse_graph6(std::string(1, char(127))), MalformedGraph6);
}

TEST_CASE("edge list text roundtrip") {
    Graph g = double_star(2, 3);
    Graph h = parse_edge_list(write_edge_list(g));
    CHECK(h.n() == g.n());
    CHECK(edge_set(h) == edge_set(g));
    CHECK(write_edge_list(complete(2)) == "2 1\n0 1\n");
    CHECK_THROWS_AS(parse_edge_list("3"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), GraphError);
}

TEST_CASE("dot output") {
    std::string dot = write_dot(path(3));
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
    CHECK(dot.find("label=\"0\"") != std::string::npos);
}
