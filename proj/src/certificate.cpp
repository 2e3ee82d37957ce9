#include <algorithm>

#include "maxmult/witness.hpp"

namespace maxmult {

namespace {

bool possibly_nonzero(const Graph& g, Vertex r, Vertex c) { return r == c || g.adjacent(r, c); }

// Repeatedly removes a row with a single possibly-nonzero entry, which must
// be an edge entry. Succeeds iff the submatrix is permutation equivalent to
// a lower-triangular pattern with forced-nonzero diagonal.
std::optional<std::pair<VertexSet, VertexSet>> peel(const Graph& g, Mask rows, Mask cols) {
  VertexSet row_order;
  VertexSet col_order;
  while (rows != 0) {
    bool progressed = false;
    for (Vertex r : to_vertices(rows)) {
      Mask possible = g.neighbors(r) & cols;
      if (cols & bit(r)) possible |= bit(r);
      if (popcount(possible) != 1) continue;
      const Vertex c = lowest(possible);
      if (c == r) return std::nullopt;
      row_order.push_back(r);
      col_order.push_back(c);
      rows &= ~bit(r);
      cols &= ~bit(c);
      progressed = true;
      break;
    }
    if (!progressed) return std::nullopt;
  }
  return std::make_pair(std::move(row_order), std::move(col_order));
}

std::optional<TriangularCertificate> attempt(const Graph& g, std::array<Vertex, 2> rows,
                                             std::array<Vertex, 2> cols) {
  if (rows[0] == rows[1] || cols[0] == cols[1]) return std::nullopt;
  const Mask all = g.vertices();
  auto res = peel(g, all & ~bit(rows[0]) & ~bit(rows[1]), all & ~bit(cols[0]) & ~bit(cols[1]));
  if (!res) return std::nullopt;
  return TriangularCertificate{rows, cols, std::move(res->first), std::move(res->second)};
}

}  // namespace

PatternMatrix pattern_of(const Graph& g) {
  const int n = g.order();
  PatternMatrix p{n, std::vector<PatternEntry>(static_cast<std::size_t>(n) * n, PatternEntry::StructZero)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        p.entries[static_cast<std::size_t>(i) * n + j] = PatternEntry::FreeDiagonal;
      } else if (g.adjacent(i, j)) {
        p.entries[static_cast<std::size_t>(i) * n + j] = PatternEntry::ForcedNonzero;
      }
    }
  }
  return p;
}

PatternMatrix parallel_paths_pattern(const Graph& g, const ParallelPathsCover& cover) {
  if (!check_staircase(g, cover.p1, cover.p2)) throw GraphError("parallel_paths_pattern: invalid cover");
  VertexSet order = cover.p1;
  order.insert(order.end(), cover.p2.begin(), cover.p2.end());
  const PatternMatrix base = pattern_of(g);
  const int n = g.order();
  PatternMatrix p{n, std::vector<PatternEntry>(static_cast<std::size_t>(n) * n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) p.entries[static_cast<std::size_t>(i) * n + j] = base.at(order[i], order[j]);
  }
  return p;
}

TriangularCertificate lower_bound_certificate(const Graph& g, const ParallelPathsCover& cover) {
  if (!check_staircase(g, cover.p1, cover.p2)) throw GraphError("lower_bound_certificate: invalid cover");
  const VertexSet& p1 = cover.p1;
  VertexSet p2 = cover.p2;
  for (int flip = 0; flip < 2; ++flip) {
    if (auto c = attempt(g, {p1.back(), p2.back()}, {p1.front(), p2.front()})) return *c;
    if (auto c = attempt(g, {p1.front(), p2.front()}, {p1.back(), p2.back()})) return *c;
    std::reverse(p2.begin(), p2.end());
  }
  throw GraphError("lower_bound_certificate: no triangular submatrix found");
}

bool verify_certificate(const Graph& g, const TriangularCertificate& cert) {
  const int n = g.order();
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };
  for (Vertex v : cert.deleted_rows) {
    if (!in_range(v)) throw GraphError("verify_certificate: index out of range");
  }
  for (Vertex v : cert.deleted_cols) {
    if (!in_range(v)) throw GraphError("verify_certificate: index out of range");
  }
  for (const VertexSet* order : {&cert.row_order, &cert.col_order}) {
    for (Vertex v : *order) {
      if (!in_range(v)) throw GraphError("verify_certificate: index out of range");
    }
  }
  if (n < 2) return false;
  if (cert.deleted_rows[0] == cert.deleted_rows[1] || cert.deleted_cols[0] == cert.deleted_cols[1]) return false;
  const std::size_t k = static_cast<std::size_t>(n - 2);
  if (cert.row_order.size() != k || cert.col_order.size() != k) return false;
  const Mask rows = g.vertices() & ~bit(cert.deleted_rows[0]) & ~bit(cert.deleted_rows[1]);
  const Mask cols = g.vertices() & ~bit(cert.deleted_cols[0]) & ~bit(cert.deleted_cols[1]);
  const VertexSet rset = to_vertices(rows);
  const VertexSet cset = to_vertices(cols);
  VertexSet ro = cert.row_order;
  VertexSet co = cert.col_order;
  std::sort(ro.begin(), ro.end());
  std::sort(co.begin(), co.end());
  if (ro != rset || co != cset) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex r = cert.row_order[i];
    if (r == cert.col_order[i] || !g.adjacent(r, cert.col_order[i])) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (possibly_nonzero(g, r, cert.col_order[j])) return false;
    }
  }
  return true;
}

std::optional<TriangularCertificate> search_triangular_certificate(const Graph& g) {
  const int n = g.order();
  for (Vertex r0 = 0; r0 < n; ++r0) {
    for (Vertex r1 = r0 + 1; r1 < n; ++r1) {
      for (Vertex c0 = 0; c0 < n; ++c0) {
        for (Vertex c1 = c0 + 1; c1 < n; ++c1) {
          if (auto c = attempt(g, {r0, r1}, {c0, c1})) return c;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace maxmult
