#pragma once

#include "eckit/graph.hpp"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace eckit {

struct SolverConfig {
    int max_edges = 22;                       // hard solver cap, also the memory cap
    std::chrono::milliseconds time_budget{0}; // 0 = unlimited
    uint64_t node_budget = 0;                 // 0 = unlimited; deterministic cap
    int threads = 1;                          // > 1 splits the search tree
    bool permissive = false;                  // accept dominating classes of any size
    bool emit_all_optima = false;             // collect every optimal partition (single thread)
};

struct EcResult {
    int value = 0;
    EdgePartition certificate;
    std::vector<std::pair<std::string, int>> bound_trace;
    std::vector<EdgePartition> all_optima; // filled only when requested
};

// Raised when a time or node budget runs out. Carries the best proven
// interval and a validated partition of order lo.
struct TimeBudgetExceeded : GraphError {
    int lo;
    int hi;
    EdgePartition best;
    TimeBudgetExceeded(const std::string& msg, int lo_, int hi_, EdgePartition best_)
        : GraphError(msg), lo(lo_), hi(hi_), best(std::move(best_)) {}
};

// Sound upper bounds, cheapest first: the class count can never exceed m;
// equals m only when the all-singleton partition is valid; for a matching
// with m >= 2 the value is exactly 2; and for any non full edge e the count
// is at most |N[e]| * (1 + max_f |N[f]|) with closed neighborhoods.
int ec_upper_bound(const Graph& g);
int ec_upper_bound(const Graph& g, std::vector<std::pair<std::string, int>>& trace);

// Best validated constructive lower bound witness.
std::pair<int, EdgePartition> ec_lower_bound(const Graph& g);

// Always succeeds for m >= 1: seeds from a maximum (m <= 16) or greedy
// edge domatic partition, splits each shrunken class, then places leftovers.
EdgePartition existence_partition(const Graph& g);

// The minimum degree construction: singletons over the edges at a minimum
// degree vertex plus the rest as one class, with a one move repair pass.
// Throws InvalidConstruction when neither form validates.
EdgePartition delta_construction(const Graph& g);

// K_{r,s} with 2 <= r <= s and the order 2s partition splitting each right
// vertex star into a singleton and its remainder.
std::pair<Graph, EdgePartition> kr_s_construction(int r, int s);

// Exact maximum ec-partition order by branch and bound over restricted
// growth assignments. Certificates list classes by first edge ascending.
// Deterministic for a fixed config with threads = 1; the value alone is
// deterministic for any thread count.
EcResult ec_exact(const Graph& g, const SolverConfig& cfg = {});

} // namespace eckit
