#include "maxmult/witness.hpp"

namespace maxmult {

namespace {

Vertex pendant_neighbor(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order() || g.degree(v) != 1) throw GraphError("vertex is not a pendant");
  return lowest(g.neighbors(v));
}

// Positions of the kept vertices in increasing label order.
std::vector<int> index_map(int n, Mask drop) {
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (!(drop & bit(i))) idx[i] = k++;
  }
  return idx;
}

}  // namespace

RationalMatrix pendant_lift(const Graph& g, Vertex v, const RationalMatrix& b, LiftCase lift,
                            const PendantLiftScalars& s) {
  const Vertex u = pendant_neighbor(g, v);
  const int n = g.order();
  const Mask drop = lift == LiftCase::KeepNeighbor ? bit(v) : bit(u) | bit(v);
  const std::vector<int> idx = index_map(n, drop);
  const int m = n - popcount(drop);
  if (b.rows() != m || b.cols() != m) throw GraphError("pendant_lift: matrix size mismatch");
  if (s.x == 0 || s.coupling == 0) throw GraphError("pendant_lift: scalars must be nonzero");
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    if (idx[i] < 0) continue;
    for (int j = 0; j < n; ++j) {
      if (idx[j] >= 0) a(i, j) = b(idx[i], idx[j]);
    }
  }
  if (lift == LiftCase::KeepNeighbor) {
    a(v, v) = s.x;
    a(u, v) = a(v, u) = s.coupling;
    a(u, u) += s.coupling * s.coupling / s.x;
  } else {
    a(u, v) = a(v, u) = s.x;
    a(u, u) = s.u_diag;
    for (Vertex w : to_vertices(g.neighbors(u) & ~bit(v))) a(u, w) = a(w, u) = s.coupling;
  }
  return a;
}

RationalMatrix pendant_reduce(const Graph& g, Vertex v, const RationalMatrix& a, LiftCase lift) {
  const Vertex u = pendant_neighbor(g, v);
  const int n = g.order();
  if (a.rows() != n || a.cols() != n) throw GraphError("pendant_reduce: matrix size mismatch");
  if (lift == LiftCase::KeepNeighbor) {
    if (a(v, v) == 0) throw GraphError("pendant_reduce: pendant diagonal is zero");
    RationalMatrix work = a;
    work(u, u) -= a(u, v) * a(u, v) / a(v, v);
    const VertexSet keep = to_vertices(g.vertices() & ~bit(v));
    return work.submatrix(keep, keep);
  }
  if (a(v, v) != 0) throw GraphError("pendant_reduce: pendant diagonal is nonzero");
  const VertexSet keep = to_vertices(g.vertices() & ~bit(u) & ~bit(v));
  return a.submatrix(keep, keep);
}

SubdivisionProjection subdivision_project(const Graph& g_prime, Vertex w, const RationalMatrix& a) {
  const int n = g_prime.order();
  if (w < 0 || w >= n || g_prime.degree(w) != 2) throw GraphError("subdivision_project: vertex must have degree 2");
  const VertexSet nb = to_vertices(g_prime.neighbors(w));
  const Vertex v1 = nb[0];
  const Vertex v2 = nb[1];
  if (g_prime.adjacent(v1, v2)) throw GraphError("subdivision_project: neighbours already adjacent");
  if (a.rows() != n || a.cols() != n) throw GraphError("subdivision_project: matrix size mismatch");
  SubdivisionProjection out;
  RationalMatrix work = a;
  if (work(w, w) == 0) {
    for (int i = 0; i < n; ++i) work(i, i) += 1;
    out.shifted = true;
  }
  const int full_rank = exact_rank(work);
  const mpq_class x = work(w, w);
  for (Vertex i : nb) {
    for (Vertex j : nb) work(i, j) -= work(i, w) * work(w, j) / x;
  }
  const VertexSet keep = to_vertices(g_prime.vertices() & ~bit(w));
  out.b = work.submatrix(keep, keep);
  out.rank_delta = full_rank - exact_rank(out.b);
  return out;
}

}  // namespace maxmult
