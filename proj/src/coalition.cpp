#include "eckit/coalition.hpp"

#include "eckit/canonical.hpp"
#include "eckit/domination.hpp"

namespace eckit {

namespace {

void check_universe(const Graph& g, const EdgeSet& s) {
    if (s.universe() != g.m())
        throw MismatchedGraph("edge set universe " + std::to_string(s.universe()) +
                              " does not match graph with " + std::to_string(g.m()) + " edges");
}

} // namespace

bool forms_edge_coalition(const Graph& g, const EdgeSet& a, const EdgeSet& b) {
    check_universe(g, a);
    check_universe(g, b);
    if (a.empty() || b.empty()) throw EmptySet("coalition sets must be nonempty");
    if (a.intersects(b)) throw OverlappingSets("coalition sets must be disjoint");
    if (check_edge_dominating(g, a).dominating) return false;
    if (check_edge_dominating(g, b).dominating) return false;
    return check_edge_dominating(g, a | b).dominating;
}

PartitionVerdict validate_partition(const Graph& g, const EdgePartition& p, bool permissive) {
    int m = g.m();
    if (m == 0) throw NoEdges("partition validation needs at least one edge");
    EdgeSet seen(m);
    for (const EdgeSet& c : p) {
        check_universe(g, c);
        if (c.empty()) throw EmptySet("partition classes must be nonempty");
        if (seen.intersects(c)) throw OverlappingSets("partition classes must be disjoint");
        seen |= c;
    }
    if (!(seen == EdgeSet::all(m))) throw NotAPartition("classes do not cover the edge set");

    int k = (int)p.size();
    PartitionVerdict v;
    v.status.assign(k, ClassStatus::Orphan);
    v.partners.assign(k, {});
    std::vector<char> dom(k);
    std::vector<int> size(k);
    for (int i = 0; i < k; ++i) {
        dom[i] = check_edge_dominating(g, p[i]).dominating;
        size[i] = p[i].count();
    }
    for (int i = 0; i < k; ++i) {
        if (dom[i]) continue;
        for (int j = i + 1; j < k; ++j) {
            if (dom[j]) continue;
            if (check_edge_dominating(g, p[i] | p[j]).dominating) {
                v.partners[i].push_back(j);
                v.partners[j].push_back(i);
            }
        }
    }
    v.is_ec = true;
    for (int i = 0; i < k; ++i) {
        if (dom[i]) {
            if (size[i] == 1) {
                v.status[i] = ClassStatus::SingletonDominating;
            } else if (permissive) {
                v.status[i] = ClassStatus::Dominating;
            } else {
                v.status[i] = ClassStatus::Orphan;
                v.is_ec = false;
            }
        } else if (!v.partners[i].empty()) {
            v.status[i] = ClassStatus::Partnered;
        } else {
            v.status[i] = ClassStatus::Orphan;
            v.is_ec = false;
        }
    }
    return v;
}

Graph build_ecg(const Graph& g, const EdgePartition& p) {
    PartitionVerdict v = validate_partition(g, p);
    if (!v.is_ec) throw NotAnEcPartition("coalition graph needs a valid partition");
    int k = (int)p.size();
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j : v.partners[i])
            if (j > i) es.emplace_back(i, j);
    return make_graph(k, es);
}

EdgePartition singleton_partition(const Graph& g) {
    int m = g.m();
    if (m == 0) throw NoEdges("singleton partition needs at least one edge");
    EdgePartition p;
    p.reserve(m);
    for (int e = 0; e < m; ++e) {
        EdgeSet s(m);
        s.set(e);
        p.push_back(s);
    }
    return p;
}

bool is_singleton_ec(const Graph& g) {
    return validate_partition(g, singleton_partition(g)).is_ec;
}

bool is_self_edge_coalition(const Graph& g) {
    if (g.m() == 0) throw NoEdges("self coalition test needs at least one edge");
    if (g.m() != g.n()) return false;
    EdgePartition p = singleton_partition(g);
    PartitionVerdict v = validate_partition(g, p);
    if (!v.is_ec) return false;
    return is_isomorphic(build_ecg(g, p), g);
}

} // namespace eckit
