#include <algorithm>

#include "maxmult/witness.hpp"

namespace maxmult {

namespace {

mpq_class signed_draw(RationalDraw& draw, long range) {
  mpq_class v = draw.positive(range);
  if (draw.engine()() & 1U) v = -v;
  return v;
}

// Square root in Q when it exists.
std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
  if (x < 0) return std::nullopt;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(rn, rd);
}

// Leading block S = A11 - C with the structure each case needs. Off-diagonal
// positions on non-edges are pinned to -c(i,j) so that A11 vanishes there;
// positions on edges are free.
class LeadingBlock {
 public:
  LeadingBlock(const Graph& g, const SchurFrame& f, RationalDraw& draw, long range)
      : g_(g), f_(f), draw_(draw), range_(range) {}

  bool edge(int i, int j) const { return g_.adjacent(f_.order[i], f_.order[j]); }
  bool free_at(int i, int j) const { return edge(i, j); }

  mpq_class value(int i, int j) {
    if (edge(i, j)) return signed_draw(draw_, range_);
    return -f_.c(i, j);
  }

  mpq_class any() { return signed_draw(draw_, range_); }

  std::optional<QMatrix> build(int hk4_case) {
    switch (hk4_case) {
      case 1:
        return QMatrix(3, 3);
      case 2:
        return case2();
      case 3:
        return case3();
      case 4:
        return case4();
      default:
        throw GraphError("construct_corank3_hK4: bad case");
    }
  }

 private:
  // Rank one: x = (s14/s24, 1, s23, s24).
  std::optional<QMatrix> case2() {
    const mpq_class s14 = value(0, 3);
    const mpq_class s23 = value(1, 2);
    const mpq_class s24 = value(1, 3);
    if (s24 == 0) return std::nullopt;
    const mpq_class x[4] = {s14 / s24, 1, s23, s24};
    QMatrix s(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) s(i, j) = x[i] * x[j];
    }
    return s;
  }

  // Rank two: leading 2x2 block P invertible, trailing 3x3 block equal to
  // Q^T P^{-1} Q. Only the (4,5) position is constrained, which gives one
  // linear equation in the entries u, v, w of P^{-1}.
  std::optional<QMatrix> case3() {
    QMatrix q(2, 3);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 3; ++c) q(r, c) = value(r, 2 + c);
    }
    const mpq_class target = value(3, 4);
    const mpq_class& s14 = q(0, 1);
    const mpq_class& s15 = q(0, 2);
    const mpq_class& s24 = q(1, 1);
    const mpq_class& s25 = q(1, 2);
    const mpq_class alpha = s14 * s15;
    const mpq_class kappa = s14 * s25 + s15 * s24;
    const mpq_class beta = s24 * s25;
    mpq_class u = any();
    mpq_class v = any();
    mpq_class w = any();
    if (kappa != 0) {
      v = (target - alpha * u - beta * w) / kappa;
    } else if (alpha != 0) {
      u = (target - kappa * v - beta * w) / alpha;
    } else if (beta != 0) {
      w = (target - alpha * u - kappa * v) / beta;
    } else if (target != 0) {
      return std::nullopt;
    }
    QMatrix pinv(2, 2);
    pinv(0, 0) = u;
    pinv(0, 1) = v;
    pinv(1, 0) = v;
    pinv(1, 1) = w;
    auto p = inverse(pinv);
    if (!p) return std::nullopt;
    const QMatrix tail = q.transpose() * pinv * q;
    QMatrix s(5, 5);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) s(i, j) = (*p)(i, j);
      for (int j = 0; j < 3; ++j) {
        s(i, 2 + j) = q(i, j);
        s(2 + j, i) = q(i, j);
      }
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) s(2 + i, 2 + j) = tail(i, j);
    }
    return s;
  }

  // Rank three: principal block G on positions {1,2,6} and trailing block
  // on {3,4,5} equal to Q^T G^{-1} Q. The (4,5) constraint reads
  // s45 det G - q4^T adj(G) q5 = 0, affine in x = G(1,1) with slope psi.
  std::optional<QMatrix> case4() {
    const int lead[3] = {0, 1, 5};
    const int tail_idx[3] = {2, 3, 4};
    QMatrix q(3, 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) q(r, c) = value(lead[r], tail_idx[c]);
    }
    const mpq_class s12 = value(0, 1);
    const mpq_class s26 = value(1, 5);
    const bool u_free = free_at(0, 5);
    const mpq_class target = value(3, 4);
    auto gram = [&](const mpq_class& x, const mpq_class& y, const mpq_class& z, const mpq_class& u) {
      QMatrix gm(3, 3);
      gm(0, 0) = x;
      gm(0, 1) = gm(1, 0) = s12;
      gm(0, 2) = gm(2, 0) = u;
      gm(1, 1) = y;
      gm(1, 2) = gm(2, 1) = s26;
      gm(2, 2) = z;
      return gm;
    };
    auto lhs = [&](const QMatrix& gm) -> mpq_class {
      QMatrix q4(3, 1);
      QMatrix q5(3, 1);
      for (int r = 0; r < 3; ++r) {
        q4(r, 0) = q(r, 1);
        q5(r, 0) = q(r, 2);
      }
      return target * determinant(gm) - (q4.transpose() * adjugate(gm) * q5)(0, 0);
    };
    const mpq_class y = any();
    const mpq_class z = any();
    mpq_class u = u_free ? any() : -f_.c(0, 5);
    mpq_class x;
    const mpq_class e0 = lhs(gram(0, y, z, u));
    const mpq_class psi = lhs(gram(1, y, z, u)) - e0;
    if (psi != 0) {
      x = -e0 / psi;
    } else {
      // The equation no longer involves x; solve it for u instead.
      if (e0 != 0) {
        if (!u_free) return std::nullopt;
        const mpq_class c0 = lhs(gram(0, y, z, 0));
        const mpq_class cp = lhs(gram(0, y, z, 1));
        const mpq_class cm = lhs(gram(0, y, z, -1));
        const mpq_class a = (cp + cm) / 2 - c0;
        const mpq_class b = (cp - cm) / 2;
        if (a == 0) {
          if (b == 0) return std::nullopt;
          u = -c0 / b;
        } else {
          auto root = rational_sqrt(b * b - 4 * a * c0);
          if (!root) return std::nullopt;
          u = (-b + *root) / (2 * a);
        }
      }
      x = any();
    }
    const QMatrix gm = gram(x, y, z, u);
    auto gi = inverse(gm);
    if (!gi) return std::nullopt;
    const QMatrix tail = q.transpose() * (*gi) * q;
    QMatrix s(6, 6);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        s(lead[i], lead[j]) = gm(i, j);
        s(lead[i], tail_idx[j]) = q(i, j);
        s(tail_idx[j], lead[i]) = q(i, j);
        s(tail_idx[i], tail_idx[j]) = tail(i, j);
      }
    }
    return s;
  }

  const Graph& g_;
  const SchurFrame& f_;
  RationalDraw& draw_;
  long range_;
};

QMatrix assemble(const Graph& g, const SchurFrame& f, const QMatrix& a11) {
  const int n = g.order();
  const int l = f.l;
  QMatrix a(n, n);
  auto put = [&](int i, int j, const mpq_class& v) {
    a(f.order[i], f.order[j]) = v;
  };
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) put(i, j, a11(i, j));
    for (int j = 0; j < n - l; ++j) {
      put(i, l + j, f.a12(i, j));
      put(l + j, i, f.a12(i, j));
    }
  }
  for (int i = 0; i < n - l; ++i) {
    for (int j = 0; j < n - l; ++j) put(l + i, l + j, f.a22(i, j));
  }
  return a;
}

}  // namespace

RationalMatrix construct_corank3_hK4(const Graph& g, const HomeomorphWitness& w,
                                     const ConstructionOptions& opts) {
  if (w.kind != HomeomorphKind::K4 || !verify_homeomorph(g, w)) {
    throw GraphError("construct_corank3_hK4: invalid witness");
  }
  const int n = g.order();
  VertexSet lead{w.branch[0], w.branch[1], w.branch[2]};
  if (w.hk4_case >= 2) lead.push_back(w.paths[2][w.paths[2].size() - 2]);
  if (w.hk4_case >= 3) lead.push_back(w.paths[1][w.paths[1].size() - 2]);
  if (w.hk4_case >= 4) lead.push_back(w.paths[0][1]);
  const int l = static_cast<int>(lead.size());
  VertexSet order = lead;
  for (Vertex v : to_vertices(g.vertices() & ~to_mask(lead))) order.push_back(v);

  RationalDraw draw(opts.seed);
  long range = opts.range;
  for (int round = 0; round < 3; ++round, range *= 10) {
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
      auto frame = make_schur_frame(g, order, l, draw, range);
      if (!frame) continue;
      LeadingBlock block(g, *frame, draw, range);
      auto s = block.build(w.hk4_case);
      if (!s) continue;
      const QMatrix a = assemble(g, *frame, *s + frame->c);
      if (in_pattern(a, g) && exact_rank(a) == n - 3) return a;
    }
  }
  throw GraphError("construct_corank3_hK4: no valid matrix within the retry budget");
}

RationalMatrix construct_corank3_hK23(const Graph& g, const HomeomorphWitness& w,
                                      const ConstructionOptions& opts) {
  if (w.kind != HomeomorphKind::K23 || !verify_homeomorph(g, w)) {
    throw GraphError("construct_corank3_hK23: invalid witness");
  }
  if (!is_partial_two_tree(g)) throw GraphError("construct_corank3_hK23: graph contains an hK4");
  const int n = g.order();
  const Vertex u = w.branch[0];
  const Vertex v = w.branch[1];
  const VertexSet s_set{u, v, w.paths[0][1], w.paths[1][1], w.paths[2][1]};
  const Mask s_mask = to_mask(s_set);
  const VertexSet rest = to_vertices(g.vertices() & ~s_mask);
  const int m = static_cast<int>(rest.size());

  RationalDraw draw(opts.seed);
  long range = opts.range;
  for (int round = 0; round < 3; ++round, range *= 10) {
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
      QMatrix a(n, n);
      for (auto [x, y] : g.edges()) {
        const bool xs = s_mask & bit(x);
        const bool ys = s_mask & bit(y);
        mpq_class val = draw.positive(range);
        if (!xs && !ys) val = -val;
        a(x, y) = a(y, x) = val;
      }
      for (Vertex x : rest) {
        mpq_class row = 0;
        for (Vertex y : rest) {
          if (y != x) row += abs(a(x, y));
        }
        a(x, x) = row + draw.positive(range);
      }
      const QMatrix arest = a.submatrix(rest, rest);
      auto zinv = inverse(arest);
      if (!zinv) continue;
      const QMatrix cross = a.submatrix(s_set, rest);
      const QMatrix k = m > 0 ? cross * (*zinv) * cross.transpose() : QMatrix(5, 5);
      // Schur complement T = A[S] - K: the w_i rows must be proportional
      // and the u row a multiple of the v row, so T has rank two.
      mpq_class abc[3];
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        abc[i] = a(v, s_set[2 + i]) - k(1, 2 + i);
        if (abc[i] == 0) ok = false;
        for (int j = i + 1; j < 3; ++j) {
          const Vertex wi = s_set[2 + i];
          const Vertex wj = s_set[2 + j];
          if (g.adjacent(wi, wj)) {
            a(wi, wj) = a(wj, wi) = k(2 + i, 2 + j);
            if (a(wi, wj) == 0) ok = false;
          } else if (k(2 + i, 2 + j) != 0) {
            ok = false;
          }
        }
      }
      if (!ok) continue;
      mpq_class lambda;
      bool found = false;
      for (int tries = 0; tries < 8 && !found; ++tries) {
        lambda = signed_draw(draw, range);
        found = true;
        for (int i = 0; i < 3; ++i) {
          if (lambda * abc[i] + k(0, 2 + i) == 0) found = false;
        }
      }
      if (!found) continue;
      for (int i = 0; i < 3; ++i) {
        const Vertex wi = s_set[2 + i];
        a(u, wi) = a(wi, u) = lambda * abc[i] + k(0, 2 + i);
        a(wi, wi) = k(2 + i, 2 + i);
      }
      const mpq_class off = a(u, v) - k(0, 1);
      if (off == 0) {
        a(u, u) = k(0, 0);
        a(v, v) = k(1, 1);
      } else {
        a(u, u) = lambda * off + k(0, 0);
        a(v, v) = off / lambda + k(1, 1);
      }
      if (in_pattern(a, g) && exact_rank(a) == n - 3) return a;
    }
  }
  throw GraphError("construct_corank3_hK23: no valid matrix within the retry budget");
}

}  // namespace maxmult
