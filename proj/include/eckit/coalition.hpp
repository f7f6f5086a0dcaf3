#pragma once

#include "eckit/graph.hpp"

namespace eckit {

// Status of one class inside a candidate partition.
//
// Under the strict reading a class is valid only when it is a dominating
// singleton or it pairs with another non dominating class whose union with
// it dominates. A dominating class of size two or more is marked Orphan and
// invalidates the partition. The permissive reading instead accepts such a
// class and marks it Dominating.
enum class ClassStatus { SingletonDominating, Partnered, Orphan, Dominating };

struct PartitionVerdict {
    bool is_ec = false;
    std::vector<ClassStatus> status;
    // partners[i]: all j such that classes i and j are both non dominating
    // and their union dominates. Symmetric; empty for dominating classes.
    std::vector<std::vector<int>> partners;
};

// Two disjoint nonempty edge sets form an edge coalition when neither
// dominates but their union does.
bool forms_edge_coalition(const Graph& g, const EdgeSet& a, const EdgeSet& b);

PartitionVerdict validate_partition(const Graph& g, const EdgePartition& p,
                                    bool permissive = false);

// Coalition graph: one vertex per class, in partition order; classes are
// adjacent when they form an edge coalition. Requires a strictly valid
// partition, otherwise NotAnEcPartition.
Graph build_ecg(const Graph& g, const EdgePartition& p);

EdgePartition singleton_partition(const Graph& g); // NoEdges when m = 0
bool is_singleton_ec(const Graph& g);

// True when the singleton partition is valid and its coalition graph is
// isomorphic to g itself. Needs m = n, hence false whenever they differ.
bool is_self_edge_coalition(const Graph& g);

} // namespace eckit
