#include "brute.hpp"

#include <vector>

namespace maxmult::testing {

int brute_path_cover(const Graph& forest) {
  const EdgeList edges = forest.edges();
  const int e = static_cast<int>(edges.size());
  if (e > 20) throw GraphError("brute_path_cover: too many edges");
  int best = 0;
  for (std::uint32_t sel = 0; sel < (1U << e); ++sel) {
    std::vector<int> deg(static_cast<std::size_t>(forest.order()), 0);
    bool ok = true;
    for (int k = 0; k < e && ok; ++k) {
      if (sel >> k & 1U) ok = ++deg[edges[k].first] <= 2 && ++deg[edges[k].second] <= 2;
    }
    if (ok) best = std::max(best, std::popcount(sel));
  }
  return forest.order() - best;
}

namespace {

std::optional<VertexSet> induced_path_order(const Graph& g, Mask side) {
  const Subgraph sub = induced_subgraph(g, side);
  auto order = is_path(sub.graph);
  if (!order) return std::nullopt;
  VertexSet out;
  for (Vertex v : *order) out.push_back(sub.to_parent[v]);
  return out;
}

bool crossing_free(const Graph& g, const VertexSet& p1, const VertexSet& p2) {
  std::vector<std::pair<int, int>> links;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    for (std::size_t j = 0; j < p2.size(); ++j) {
      if (g.adjacent(p1[i], p2[j])) links.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  for (auto [i1, j1] : links) {
    for (auto [i2, j2] : links) {
      if (i1 < i2 && j1 > j2) return false;
    }
  }
  return true;
}

}  // namespace

bool brute_two_parallel_paths(const Graph& g) {
  const int n = g.order();
  if (n < 2 || is_path(g)) return false;
  const Mask all = g.vertices();
  for (Mask s = 1; s < all; ++s) {
    auto p1 = induced_path_order(g, s);
    if (!p1) continue;
    auto p2 = induced_path_order(g, all & ~s);
    if (!p2) continue;
    if (crossing_free(g, *p1, *p2)) return true;
    VertexSet rev(p2->rbegin(), p2->rend());
    if (crossing_free(g, *p1, rev)) return true;
  }
  return false;
}

bool brute_has_k4_minor(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  // label 0 means unused, 1..4 branch sets.
  for (;;) {
    Mask sets[4] = {0, 0, 0, 0};
    for (int v = 0; v < n; ++v) {
      if (label[v] > 0) sets[label[v] - 1] |= bit(v);
    }
    bool ok = sets[0] && sets[1] && sets[2] && sets[3];
    for (int a = 0; a < 4 && ok; ++a) {
      if (component_of(g, lowest(sets[a]), sets[a]) != sets[a]) ok = false;
      for (int b = a + 1; b < 4 && ok; ++b) {
        bool touch = false;
        for (Vertex v : to_vertices(sets[a])) touch = touch || (g.neighbors(v) & sets[b]);
        ok = touch;
      }
    }
    if (ok) return true;
    int k = 0;
    while (k < n && label[k] == 4) label[k++] = 0;
    if (k == n) return false;
    ++label[k];
  }
}

QMatrix random_pattern_matrix(const Graph& g, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> any(-range, range);
  std::uniform_int_distribution<int> mag(1, range);
  const int n = g.order();
  QMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = any(rng);
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) a(i, j) = a(j, i) = (rng() & 1U ? 1 : -1) * mag(rng);
    }
  }
  return a;
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Graph g(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng)) g.add_edge(i, j);
      }
    }
    if (is_connected(g)) return g;
  }
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

}  // namespace maxmult::testing
