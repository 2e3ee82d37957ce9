#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "maxmult/graph.hpp"
#include "maxmult/rational.hpp"
#include "maxmult/recognition.hpp"

namespace maxmult {

enum class PatternEntry { StructZero, FreeDiagonal, ForcedNonzero };

struct PatternMatrix {
  int n = 0;
  std::vector<PatternEntry> entries;  // row-major
  PatternEntry at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

PatternMatrix pattern_of(const Graph& g);

/// Pattern of S(G) with rows and columns in cover order (p1 then p2).
PatternMatrix parallel_paths_pattern(const Graph& g, const ParallelPathsCover& cover);

/// Rows/columns listed in original vertex labels. After deleting the two
/// rows and two columns, row_order[k] against col_order[k] is the k-th
/// diagonal position of a lower-triangular arrangement.
struct TriangularCertificate {
  std::array<Vertex, 2> deleted_rows{};
  std::array<Vertex, 2> deleted_cols{};
  VertexSet row_order;
  VertexSet col_order;
};

TriangularCertificate lower_bound_certificate(const Graph& g, const ParallelPathsCover& cover);
bool verify_certificate(const Graph& g, const TriangularCertificate& cert);
/// Brute force over all deleted row and column pairs.
std::optional<TriangularCertificate> search_triangular_certificate(const Graph& g);

/// Random rational specialisation of the Schur frame: vertices order[0..l-1]
/// form the leading block, the rest the trailing block A22 = I - mu*B22.
struct SchurFrame {
  int l = 0;
  int q = 0;
  VertexSet order;
  mpq_class mu;
  QMatrix b22;
  QMatrix a12;
  QMatrix a22;
  mpq_class d;
  QMatrix w;
  QMatrix z;
  QMatrix c;
};

/// Nullopt when the drawn values make A22 singular.
std::optional<SchurFrame> make_schur_frame(const Graph& g, const VertexSet& order, int l,
                                           RationalDraw& draw, long range);

/// i and j (frame positions < l) are joined by a path of length >= 2 whose
/// interior avoids the leading block.
bool has_external_path(const Graph& g, const SchurFrame& f, int i, int j);

struct ConstructionOptions {
  std::uint64_t seed = 1;
  long range = 1000;
  int attempts = 100;
};

/// Exact matrix in S(G) of rank n-3 built from a K4 homeomorph. Throws
/// GraphError if no valid matrix is found within the retry budget.
RationalMatrix construct_corank3_hK4(const Graph& g, const HomeomorphWitness& w,
                                     const ConstructionOptions& opts = {});

/// Same for a K2,3 homeomorph; requires g to be a partial 2-tree.
RationalMatrix construct_corank3_hK23(const Graph& g, const HomeomorphWitness& w,
                                      const ConstructionOptions& opts = {});

enum class LiftCase { KeepNeighbor, DropBoth };

struct PendantLiftScalars {
  mpq_class x = 1;         // nonzero
  mpq_class coupling = 1;  // nonzero; u-v entry (KeepNeighbor) or u's other edges (DropBoth)
  mpq_class u_diag = 0;    // DropBoth only
};

/// g has pendant v. b is indexed by the remaining vertices of g - v
/// (KeepNeighbor) or g - {u,v} (DropBoth) in increasing label order.
RationalMatrix pendant_lift(const Graph& g, Vertex v, const RationalMatrix& b, LiftCase lift,
                            const PendantLiftScalars& s = {});

/// The forward row and column operations: KeepNeighbor needs a(v,v) != 0,
/// DropBoth needs a(v,v) == 0.
RationalMatrix pendant_reduce(const Graph& g, Vertex v, const RationalMatrix& a, LiftCase lift);

struct SubdivisionProjection {
  RationalMatrix b;  // on g' - w plus the restored edge, increasing labels
  int rank_delta = 0;  // rank(a) - rank(b)
  bool shifted = false;
};

/// w is a degree-2 vertex of g' with non-adjacent neighbours.
SubdivisionProjection subdivision_project(const Graph& g_prime, Vertex w, const RationalMatrix& a);

}  // namespace maxmult
