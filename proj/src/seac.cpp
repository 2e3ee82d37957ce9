#include <algorithm>
#include <set>

#include "maxmult/recognition.hpp"

namespace maxmult {

namespace {

struct Ear {
  VertexSet chain;  // endpoint, interior..., endpoint
};

// Maximal runs of degree-2 vertices (relative to `alive`) whose two
// endpoints have degree >= 3 and are adjacent.
std::optional<Ear> find_peelable_ear(const std::vector<Mask>& adj, Mask alive,
                                     const std::set<Edge>& used) {
  auto deg = [&](Vertex v) { return popcount(adj[v]); };
  Mask seen = 0;
  for (Vertex s : to_vertices(alive)) {
    if (deg(s) != 2 || (seen & bit(s))) continue;
    // Walk both ways from s.
    VertexSet left;
    VertexSet right;
    for (int side = 0; side < 2; ++side) {
      VertexSet& out = side == 0 ? left : right;
      Vertex prev = s;
      Vertex cur = side == 0 ? lowest(adj[s]) : lowest(adj[s] & (adj[s] - 1));
      while (deg(cur) == 2 && cur != s) {
        out.push_back(cur);
        const Vertex next = lowest(adj[cur] & ~bit(prev));
        prev = cur;
        cur = next;
      }
      out.push_back(cur);
    }
    VertexSet chain(left.rbegin(), left.rend());
    chain.push_back(s);
    chain.insert(chain.end(), right.begin(), right.end());
    for (Vertex v : chain) seen |= bit(v);
    const Vertex a = chain.front();
    const Vertex b = chain.back();
    if (a == s || deg(a) == 2) continue;  // the whole remainder is one cycle
    if (a == b || !(adj[a] & bit(b))) continue;
    if (used.count({std::min(a, b), std::max(a, b)})) continue;
    return Ear{std::move(chain)};
  }
  return std::nullopt;
}

std::optional<VertexSet> as_cycle(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return std::nullopt;
  for (Vertex v : to_vertices(alive)) {
    if (popcount(adj[v]) != 2) return std::nullopt;
  }
  const Vertex s = lowest(alive);
  VertexSet cyc{s};
  Vertex prev = s;
  Vertex cur = lowest(adj[s]);
  while (cur != s) {
    cyc.push_back(cur);
    const Vertex next = lowest(adj[cur] & ~bit(prev));
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(cyc.size()) != popcount(alive)) return std::nullopt;
  return cyc;
}

bool cycle_has_edge(const VertexSet& c, Edge e) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex a = c[i];
    const Vertex b = c[(i + 1) % c.size()];
    if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) return true;
  }
  return false;
}

}  // namespace

std::optional<SeacDecomposition> seac_decompose(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) throw GraphError("seac_decompose: input must be connected");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) throw GraphError("seac_decompose: input has a vertex of degree < 2");
  }
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  Mask alive = g.vertices();
  std::set<Edge> used;
  SeacDecomposition dec;
  while (true) {
    if (auto cyc = as_cycle(adj, alive)) {
      dec.cycles.push_back(std::move(*cyc));
      break;
    }
    auto ear = find_peelable_ear(adj, alive, used);
    if (!ear) return std::nullopt;
    const VertexSet& ch = ear->chain;
    const Edge e{std::min(ch.front(), ch.back()), std::max(ch.front(), ch.back())};
    used.insert(e);
    dec.articulation_edges.push_back(e);
    dec.cycles.push_back(ch);
    for (std::size_t i = 1; i + 1 < ch.size(); ++i) {
      const Vertex v = ch[i];
      for (Vertex w : to_vertices(adj[v])) adj[w] &= ~bit(v);
      adj[v] = 0;
      alive &= ~bit(v);
    }
  }
  const int k = static_cast<int>(dec.cycles.size());
  dec.neighbors.assign(static_cast<std::size_t>(k), {});
  // The peeled cycle for articulation edge i is cycles[i]; its partner is the
  // unique later cycle containing the same edge.
  for (std::size_t i = 0; i < dec.articulation_edges.size(); ++i) {
    const Edge e = dec.articulation_edges[i];
    int partner = -1;
    for (int j = static_cast<int>(i) + 1; j < k; ++j) {
      if (cycle_has_edge(dec.cycles[j], e)) {
        if (partner >= 0) return std::nullopt;
        partner = j;
      }
    }
    if (partner < 0) return std::nullopt;
    dec.articulated_cycles.emplace_back(static_cast<int>(i), partner);
    dec.neighbors[i].push_back(partner);
    dec.neighbors[partner].push_back(static_cast<int>(i));
  }
  dec.is_lseac = true;
  for (int c = 0; c < k; ++c) {
    std::sort(dec.neighbors[c].begin(), dec.neighbors[c].end());
    if (dec.neighbors[c].size() <= 1) dec.terminal_cycles.push_back(c);
    if (dec.neighbors[c].size() > 2) dec.is_lseac = false;
  }
  Mask common = g.vertices();
  for (int c : dec.terminal_cycles) common &= to_mask(dec.cycles[c]);
  dec.distinguished = to_vertices(common);
  return dec;
}

PathCover tree_path_cover(const Graph& g) {
  if (!is_forest(g)) throw GraphError("tree_path_cover: input has a cycle");
  const int n = g.order();
  // Linear-forest edges chosen bottom-up: a vertex links to at most two
  // children whose own path still ends at them.
  std::vector<int> link_deg(static_cast<std::size_t>(n), 0);
  std::vector<Mask> chosen(static_cast<std::size_t>(n), 0);
  Mask visited = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (visited & bit(root)) continue;
    // Iterative DFS producing a post-order.
    std::vector<std::pair<Vertex, Vertex>> order;  // (vertex, parent)
    std::vector<std::pair<Vertex, Vertex>> stack{{root, -1}};
    visited |= bit(root);
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      order.emplace_back(v, parent);
      for (Vertex w : to_vertices(g.neighbors(v) & ~visited)) {
        visited |= bit(w);
        stack.emplace_back(w, v);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, parent] = *it;
      if (parent < 0) continue;
      if (link_deg[v] < 2 && link_deg[parent] < 2) {
        chosen[v] |= bit(parent);
        chosen[parent] |= bit(v);
        ++link_deg[v];
        ++link_deg[parent];
      }
    }
  }
  PathCover out;
  Mask done = 0;
  for (Vertex v = 0; v < n; ++v) {
    if ((done & bit(v)) || link_deg[v] == 2) continue;
    VertexSet p{v};
    done |= bit(v);
    for (Mask next = chosen[v] & ~done; next != 0; next = chosen[p.back()] & ~done) {
      p.push_back(lowest(next));
      done |= next;
    }
    out.paths.push_back(std::move(p));
  }
  out.count = static_cast<int>(out.paths.size());
  return out;
}

}  // namespace maxmult
