#pragma once

#include <cstdint>
#include <vector>

#include "maxmult/graph.hpp"

namespace maxmult::testing {

/// Isomorphism-invariant code of g (n <= 11): upper-triangle adjacency bits
/// maximised over orderings compatible with colour refinement.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class on exactly n vertices.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

}  // namespace maxmult::testing
