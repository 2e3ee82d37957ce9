#include "enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace maxmult::testing {

namespace {

using Colours = std::vector<int>;

// Colour refinement with canonical re-ranking of the signatures.
Colours refine(const Graph& g, Colours col) {
  const int n = g.order();
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (Vertex w : to_vertices(g.neighbors(v))) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {col[v], std::move(nb)};
    }
    std::vector<std::pair<int, std::vector<int>>> keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    Colours next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
    const int before = static_cast<int>(std::set<int>(col.begin(), col.end()).size());
    if (static_cast<int>(keys.size()) == before) return next;
    col = std::move(next);
  }
}

std::uint64_t leaf_code(const Graph& g, const Colours& col) {
  const int n = g.order();
  std::vector<Vertex> at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) at[col[v]] = v;
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(at[i], at[j]) ? 1U : 0U);
  }
  return code;
}

std::uint64_t search(const Graph& g, const Colours& col) {
  const int n = g.order();
  std::map<int, std::vector<Vertex>> cells;
  for (int v = 0; v < n; ++v) cells[col[v]].push_back(v);
  const std::vector<Vertex>* target = nullptr;
  for (const auto& [c, members] : cells) {
    if (members.size() > 1 && (!target || members.size() < target->size())) target = &members;
  }
  if (!target) return leaf_code(g, col);
  std::uint64_t best = 0;
  for (Vertex v : *target) {
    Colours next(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) next[w] = 2 * col[w] + (col[w] == col[v] && w != v ? 1 : 0);
    best = std::max(best, search(g, refine(g, next)));
  }
  return best;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > 11) throw GraphError("canonical_code: order too large");
  return search(g, refine(g, Colours(static_cast<std::size_t>(g.order()), 0)));
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> next;
    for (const Graph& h : level) {
      for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
        Graph g(k);
        for (auto [a, b] : h.edges()) g.add_edge(a, b);
        for (Vertex w : to_vertices(nb)) g.add_edge(w, k - 1);
        if (seen.insert(canonical_code(g)).second) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (n == 0 || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace maxmult::testing
