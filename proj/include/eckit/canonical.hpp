#pragma once

#include "eckit/graph.hpp"

namespace eckit {

// Isomorphism-invariant key: graph6 string of a canonical relabeling chosen
// by exhaustive search over refinement-compatible orderings. Exact, meant
// for small graphs only; throws OrderTooLarge above n = 10.
std::string canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace eckit
