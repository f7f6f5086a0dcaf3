#pragma once

#include "eckit/graph.hpp"

namespace eckit {

// One representative per isomorphism class, returned in a deterministic
// order (edge count, then canonical graph6 key). Representatives are the
// canonical relabelings themselves. Results are memoized per process.
//
// all_graphs is capped at n = 7; trees and unicyclic_graphs at n = 10.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);
std::vector<Graph> trees(int n);
std::vector<Graph> unicyclic_graphs(int n);

} // namespace eckit
