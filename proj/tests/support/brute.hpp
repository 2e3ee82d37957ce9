#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "maxmult/graph.hpp"
#include "maxmult/rational.hpp"
#include "maxmult/recognition.hpp"

namespace maxmult::testing {

/// Minimum path cover of a forest: n minus the largest edge set of maximum
/// degree two, found by trying every edge subset.
int brute_path_cover(const Graph& forest);

/// Every split of V into two induced paths, both orientations of the second,
/// checked directly for crossing connecting edges.
bool brute_two_parallel_paths(const Graph& g);

/// K4 minor by assigning vertices to four branch sets (or none).
bool brute_has_k4_minor(const Graph& g);

/// Random member of S(G) with small integer entries.
QMatrix random_pattern_matrix(const Graph& g, std::mt19937_64& rng, int range = 9);

/// Random connected graph on n vertices.
Graph random_connected(int n, double p, std::mt19937_64& rng);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

}  // namespace maxmult::testing
