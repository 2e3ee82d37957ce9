#pragma once

#include <array>
#include <optional>
#include <vector>

#include "maxmult/graph.hpp"

namespace maxmult {

struct RecognitionOptions {
  // Exhaustive searches (parallel-path covers, smallest hK4) run only up to
  // this order; larger graphs use the structural routes.
  int max_exhaustive_n = 12;
};

/// Two disjoint induced paths covering V, each listed in path order, whose
/// connecting edges form a monotone (non-crossing) staircase.
struct ParallelPathsCover {
  VertexSet p1;
  VertexSet p2;
};

/// Staircase test for a given orientation of p1 and p2. Throws GraphError
/// if the lists are not disjoint induced paths covering V.
bool check_staircase(const Graph& g, const VertexSet& p1, const VertexSet& p2);

std::optional<ParallelPathsCover> find_two_parallel_paths(const Graph& g,
                                                          const RecognitionOptions& opts = {});

bool is_partial_two_tree(const Graph& g);

enum class HomeomorphKind { K4, K23 };

/// K4 kind: branch = {t0, t1, t2, apex}; paths in the order
/// (t0,t1) (t0,t2) (t1,t2) (t0,apex) (t1,apex) (t2,apex), each listed from
/// its first to its second endpoint. hk4_case counts how many of the three
/// triple paths carry interior vertices, plus one.
///
/// K23 kind: branch = {u, v}; three u..v paths of at least two edges each.
struct HomeomorphWitness {
  HomeomorphKind kind = HomeomorphKind::K4;
  VertexSet branch;
  std::vector<VertexSet> paths;
  int hk4_case = 0;

  Mask vertex_mask() const;
};

std::optional<HomeomorphWitness> find_hK4(const Graph& g, const RecognitionOptions& opts = {});
std::optional<HomeomorphWitness> find_hK23(const Graph& g);

/// Re-targets a K4 witness so that branch[a], branch[b], branch[c] become the
/// triple; the case is recomputed.
HomeomorphWitness with_triple(const HomeomorphWitness& w, std::array<int, 3> triple);

/// Independent check that the witness is a subgraph homeomorph inside g.
bool verify_homeomorph(const Graph& g, const HomeomorphWitness& w);

struct SeacDecomposition {
  std::vector<VertexSet> cycles;  // each in cyclic order
  std::vector<Edge> articulation_edges;
  std::vector<std::pair<int, int>> articulated_cycles;  // per articulation edge
  std::vector<std::vector<int>> neighbors;              // per cycle
  std::vector<int> terminal_cycles;
  VertexSet distinguished;
  bool is_lseac = false;
};

/// Requires a connected graph of minimum degree two; nullopt if it is not
/// built from cycles articulated along distinct edges.
std::optional<SeacDecomposition> seac_decompose(const Graph& g);

struct PathCover {
  int count = 0;
  std::vector<VertexSet> paths;
};

/// Minimum vertex-disjoint path cover of a forest.
PathCover tree_path_cover(const Graph& g);

}  // namespace maxmult
