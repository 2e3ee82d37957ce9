#include "maxmult/witness.hpp"

namespace maxmult {

std::optional<SchurFrame> make_schur_frame(const Graph& g, const VertexSet& order, int l,
                                           RationalDraw& draw, long range) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n || l < 1 || l > n) {
    throw GraphError("make_schur_frame: bad split");
  }
  const int m = n - l;
  SchurFrame f;
  f.l = l;
  f.q = m + 1;
  f.order = order;
  f.mu = draw.positive(range);
  f.b22 = QMatrix(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.adjacent(order[l + i], order[l + j])) {
        f.b22(i, j) = draw.positive(range);
        f.b22(j, i) = f.b22(i, j);
      }
    }
  }
  f.a12 = QMatrix(l, m);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < m; ++j) {
      if (g.adjacent(order[i], order[l + j])) f.a12(i, j) = draw.positive(range);
    }
  }
  f.a22 = QMatrix::identity(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) f.a22(i, j) = -f.mu * f.b22(i, j);
    }
  }
  f.d = determinant(f.a22);
  if (f.d == 0) return std::nullopt;
  f.z = *inverse(f.a22);
  f.w = f.z;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) f.w(i, j) *= f.d;
  }
  f.c = f.a12 * f.z * f.a12.transpose();
  return f;
}

bool has_external_path(const Graph& g, const SchurFrame& f, int i, int j) {
  Mask trailing = 0;
  for (std::size_t k = static_cast<std::size_t>(f.l); k < f.order.size(); ++k) trailing |= bit(f.order[k]);
  const Mask ni = g.neighbors(f.order[i]) & trailing;
  const Mask nj = g.neighbors(f.order[j]) & trailing;
  for (Vertex s : to_vertices(ni)) {
    if (component_of(g, s, trailing) & nj) return true;
  }
  return false;
}

}  // namespace maxmult
