#include <algorithm>
#include <map>
#include <queue>

#include "maxmult/recognition.hpp"

namespace maxmult {

Mask HomeomorphWitness::vertex_mask() const {
  Mask m = to_mask(branch);
  for (const auto& p : paths) m |= to_mask(p);
  return m;
}

namespace {

bool p2t_on(const Graph& g, Mask alive) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()));
  for (Vertex v : to_vertices(alive)) adj[v] = g.neighbors(v) & alive;
  for (bool progress = true; alive != 0 && progress;) {
    progress = false;
    for (Vertex v : to_vertices(alive)) {
      const Mask nb = adj[v];
      const int d = popcount(nb);
      if (d > 2) continue;
      if (d == 2) {
        const Vertex a = lowest(nb);
        const Vertex b = lowest(nb & (nb - 1));
        adj[a] |= bit(b);
        adj[b] |= bit(a);
      }
      for (Vertex w : to_vertices(nb)) adj[w] &= ~bit(v);
      adj[v] = 0;
      alive &= ~bit(v);
      progress = true;
    }
  }
  return alive == 0;
}

bool p2t_edges(int n, const std::vector<Mask>& rows) {
  Graph h(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : to_vertices(rows[v] & ~low_mask(v + 1))) h.add_edge(v, w);
  }
  return p2t_on(h, h.vertices());
}

// Next subset of the same popcount (Gosper).
Mask next_combination(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

Mask smallest_non_p2t_subset(const Graph& g) {
  const int n = g.order();
  for (int k = 4; k <= n; ++k) {
    for (Mask s = low_mask(k); s <= low_mask(n) && s != 0; s = next_combination(s)) {
      if (!p2t_on(g, s)) return s;
      if (s == (low_mask(k) << (n - k))) break;
    }
  }
  return g.vertices();
}

Mask greedy_non_p2t_subset(const Graph& g) {
  Mask keep = g.vertices();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!p2t_on(g, keep & ~bit(v))) keep &= ~bit(v);
  }
  return keep;
}

using PathMap = std::map<std::pair<Vertex, Vertex>, VertexSet>;

const VertexSet* lookup(const PathMap& pm, Vertex a, Vertex b) {
  auto it = pm.find({std::min(a, b), std::max(a, b)});
  return it == pm.end() ? nullptr : &it->second;
}

VertexSet oriented(const PathMap& pm, Vertex a, Vertex b) {
  VertexSet p = *lookup(pm, a, b);
  if (p.front() != a) std::reverse(p.begin(), p.end());
  return p;
}

bool subdivided(const PathMap& pm, Vertex a, Vertex b) { return lookup(pm, a, b)->size() > 2; }

// Orders the triple so the construction roles hold: case 2 puts the
// subdivided path between t1 and t2; case 3 puts the plain path between t0
// and t1.
HomeomorphWitness arrange(const PathMap& pm, std::array<Vertex, 3> t, Vertex apex) {
  std::sort(t.begin(), t.end());
  const bool s01 = subdivided(pm, t[0], t[1]);
  const bool s02 = subdivided(pm, t[0], t[2]);
  const bool s12 = subdivided(pm, t[1], t[2]);
  const int count = int{s01} + int{s02} + int{s12};
  if (count == 1) {
    if (s01) t = {t[2], t[0], t[1]};
    if (s02) t = {t[1], t[0], t[2]};
  } else if (count == 2) {
    if (!s02) t = {t[0], t[2], t[1]};
    if (!s12) t = {t[1], t[2], t[0]};
  }
  HomeomorphWitness w;
  w.kind = HomeomorphKind::K4;
  w.branch = {t[0], t[1], t[2], apex};
  w.paths = {oriented(pm, t[0], t[1]), oriented(pm, t[0], t[2]), oriented(pm, t[1], t[2]),
             oriented(pm, t[0], apex), oriented(pm, t[1], apex), oriented(pm, t[2], apex)};
  w.hk4_case = count + 1;
  return w;
}

PathMap path_map(const HomeomorphWitness& w) {
  PathMap pm;
  for (const auto& p : w.paths) pm[{std::min(p.front(), p.back()), std::max(p.front(), p.back())}] = p;
  return pm;
}

// Traces the six branch paths of a subdivided K4 given as adjacency rows.
PathMap trace_paths(const std::vector<Mask>& rows, const VertexSet& branch) {
  PathMap pm;
  const Mask bmask = to_mask(branch);
  for (Vertex b : branch) {
    for (Vertex first : to_vertices(rows[b])) {
      VertexSet p{b, first};
      Vertex prev = b;
      while (!(bmask & bit(p.back()))) {
        const Vertex cur = p.back();
        const Vertex next = lowest(rows[cur] & ~bit(prev));
        prev = cur;
        p.push_back(next);
      }
      if (b < p.back()) pm[{b, p.back()}] = p;
    }
  }
  return pm;
}

struct FlowArc {
  int to;
  int cap;
  int flow;
  int rev;
};

class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : arcs_(static_cast<std::size_t>(nodes)) {}

  void add(int a, int b, int cap) {
    arcs_[a].push_back({b, cap, 0, static_cast<int>(arcs_[b].size())});
    arcs_[b].push_back({a, 0, 0, static_cast<int>(arcs_[a].size()) - 1});
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> parent(arcs_.size(), {-1, -1});
    std::queue<int> q;
    q.push(s);
    parent[s] = {s, -1};
    while (!q.empty() && parent[t].first < 0) {
      const int x = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(arcs_[x].size()); ++i) {
        const FlowArc& a = arcs_[x][i];
        if (a.cap - a.flow > 0 && parent[a.to].first < 0) {
          parent[a.to] = {x, i};
          q.push(a.to);
        }
      }
    }
    if (parent[t].first < 0) return false;
    for (int y = t; y != s;) {
      auto [x, i] = parent[y];
      FlowArc& a = arcs_[x][i];
      a.flow += 1;
      arcs_[y][a.rev].flow -= 1;
      y = x;
    }
    return true;
  }

  std::vector<int> flow_successors(int x) const {
    std::vector<int> out;
    for (const FlowArc& a : arcs_[x]) {
      if (a.flow > 0) out.push_back(a.to);
    }
    return out;
  }

 private:
  std::vector<std::vector<FlowArc>> arcs_;
};

}  // namespace

bool is_partial_two_tree(const Graph& g) { return p2t_on(g, g.vertices()); }

std::optional<HomeomorphWitness> find_hK4(const Graph& g, const RecognitionOptions& opts) {
  if (is_partial_two_tree(g)) return std::nullopt;
  const Mask u = g.order() <= opts.max_exhaustive_n ? smallest_non_p2t_subset(g)
                                                    : greedy_non_p2t_subset(g);
  std::vector<Mask> rows(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : to_vertices(u)) rows[v] = g.neighbors(v) & u;
  for (auto [a, b] : g.edges()) {
    if (!(u & bit(a)) || !(u & bit(b))) continue;
    rows[a] &= ~bit(b);
    rows[b] &= ~bit(a);
    if (p2t_edges(g.order(), rows)) {
      rows[a] |= bit(b);
      rows[b] |= bit(a);
    }
  }
  VertexSet branch;
  for (Vertex v : to_vertices(u)) {
    if (popcount(rows[v]) == 3) branch.push_back(v);
  }
  if (branch.size() != 4) throw GraphError("find_hK4: minimal subgraph is not a subdivided K4");
  const PathMap pm = trace_paths(rows, branch);
  std::optional<HomeomorphWitness> best;
  for (int skip = 3; skip >= 0; --skip) {
    std::array<Vertex, 3> t{};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) t[k++] = branch[i];
    }
    HomeomorphWitness w = arrange(pm, t, branch[skip]);
    if (!best || w.hk4_case < best->hk4_case) best = std::move(w);
  }
  return best;
}

HomeomorphWitness with_triple(const HomeomorphWitness& w, std::array<int, 3> triple) {
  if (w.kind != HomeomorphKind::K4) throw GraphError("with_triple: not a K4 witness");
  Mask used = 0;
  std::array<Vertex, 3> t{};
  for (int k = 0; k < 3; ++k) {
    if (triple[k] < 0 || triple[k] > 3 || (used & bit(triple[k]))) {
      throw GraphError("with_triple: bad triple");
    }
    used |= bit(triple[k]);
    t[k] = w.branch[triple[k]];
  }
  const Vertex apex = w.branch[lowest(~used & 0xF)];
  return arrange(path_map(w), t, apex);
}

bool verify_homeomorph(const Graph& g, const HomeomorphWitness& w) {
  const bool k4 = w.kind == HomeomorphKind::K4;
  const std::size_t nb = k4 ? 4 : 2;
  const std::size_t np = k4 ? 6 : 3;
  const std::size_t min_len = k4 ? 2 : 3;  // vertices per path
  if (w.branch.size() != nb || w.paths.size() != np) return false;
  Mask used = 0;
  for (Vertex b : w.branch) {
    if (b < 0 || b >= g.order() || (used & bit(b))) return false;
    used |= bit(b);
  }
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = i + 1; j < nb; ++j) ends.emplace_back(w.branch[i], w.branch[j]);
  }
  if (k4) {
    // (t0,t1) (t0,t2) (t1,t2) (t0,apex) (t1,apex) (t2,apex)
    ends = {{w.branch[0], w.branch[1]}, {w.branch[0], w.branch[2]}, {w.branch[1], w.branch[2]},
            {w.branch[0], w.branch[3]}, {w.branch[1], w.branch[3]}, {w.branch[2], w.branch[3]}};
  } else {
    ends.assign(3, {w.branch[0], w.branch[1]});
  }
  for (std::size_t k = 0; k < np; ++k) {
    const VertexSet& p = w.paths[k];
    if (p.size() < min_len) return false;
    if (p.front() != ends[k].first || p.back() != ends[k].second) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i + 1] < 0 || p[i + 1] >= g.order() || !g.adjacent(p[i], p[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (used & bit(p[i])) return false;
      used |= bit(p[i]);
    }
  }
  if (k4) {
    int subdivided_count = 0;
    for (int k = 0; k < 3; ++k) subdivided_count += w.paths[k].size() > 2 ? 1 : 0;
    if (w.hk4_case != subdivided_count + 1) return false;
  }
  return true;
}

std::optional<HomeomorphWitness> find_hK23(const Graph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (popcount(g.neighbors(u) & ~bit(v)) < 3 || popcount(g.neighbors(v) & ~bit(u)) < 3) continue;
      UnitFlow flow(2 * n);
      for (Vertex x = 0; x < n; ++x) {
        if (x != u && x != v) flow.add(2 * x, 2 * x + 1, 1);
      }
      for (auto [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        flow.add(2 * a + 1, 2 * b, 1);
        flow.add(2 * b + 1, 2 * a, 1);
      }
      const int s = 2 * u + 1;
      const int t = 2 * v;
      int value = 0;
      while (value < 3 && flow.augment(s, t)) ++value;
      if (value < 3) continue;
      HomeomorphWitness w;
      w.kind = HomeomorphKind::K23;
      w.branch = {u, v};
      for (int first : flow.flow_successors(s)) {
        VertexSet p{u};
        int node = first;
        while (node != t) {
          const Vertex x = node / 2;
          p.push_back(x);
          node = flow.flow_successors(2 * x + 1).front();
        }
        p.push_back(v);
        w.paths.push_back(std::move(p));
        if (w.paths.size() == 3) break;
      }
      std::sort(w.paths.begin(), w.paths.end());
      if (w.paths.size() == 3 && verify_homeomorph(g, w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace maxmult
