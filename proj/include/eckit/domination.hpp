#pragma once

#include "eckit/graph.hpp"

namespace eckit {

struct DominationReport {
    bool dominating;
    EdgeSet undominated; // edges outside the set with no neighbor inside it
};

// A set D of edges dominates when every edge outside D shares an endpoint
// with some edge of D. Edges inside D impose no requirement.
DominationReport check_edge_dominating(const Graph& g, const EdgeSet& d);

// All minimal edge dominating sets, in ascending bitmask order (edge 0 is
// the lowest bit). Capped at m = 20.
std::vector<EdgeSet> enumerate_minimal_eds(const Graph& g);

// Deterministic minimalization: repeatedly drop the highest-index edge whose
// removal keeps the set dominating. Throws NotDominating on bad input.
EdgeSet shrink_to_minimal(const Graph& g, EdgeSet d);

struct EdgeDomaticResult {
    int value;
    EdgePartition witness; // partition of E into `value` dominating classes
};

// Largest number of classes in a partition of E with every class edge
// dominating. Exact branch and bound, capped at m = 16.
EdgeDomaticResult edge_domatic_number(const Graph& g);

} // namespace eckit
