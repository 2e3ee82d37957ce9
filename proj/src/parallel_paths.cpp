#include <algorithm>

#include "maxmult/recognition.hpp"

namespace maxmult {

namespace {

// Positions of each vertex within p1 (first) and p2 (second); -1 if absent.
struct Placement {
  std::vector<int> pos1;
  std::vector<int> pos2;
};

Placement place(int n, const VertexSet& p1, const VertexSet& p2) {
  Placement pl{std::vector<int>(static_cast<std::size_t>(n), -1),
               std::vector<int>(static_cast<std::size_t>(n), -1)};
  for (std::size_t i = 0; i < p1.size(); ++i) pl.pos1[p1[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < p2.size(); ++i) pl.pos2[p2[i]] = static_cast<int>(i);
  return pl;
}

bool induces_path_in_order(const Graph& g, const VertexSet& p) {
  const Mask m = to_mask(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Mask expect = 0;
    if (i > 0) expect |= bit(p[i - 1]);
    if (i + 1 < p.size()) expect |= bit(p[i + 1]);
    if ((g.neighbors(p[i]) & m) != expect) return false;
  }
  return true;
}

// Crossing test only; assumes both lists are valid induced paths.
bool no_crossing(const Graph& g, const VertexSet& p1, const VertexSet& p2) {
  const Placement pl = place(g.order(), p1, p2);
  std::vector<std::pair<int, int>> between;
  for (Vertex a : p1) {
    for (Vertex b : to_vertices(g.neighbors(a) & to_mask(p2))) between.emplace_back(pl.pos1[a], pl.pos2[b]);
  }
  for (auto [i, j] : between) {
    for (auto [k, l] : between) {
      if ((k > i && l < j) || (k < i && l > j)) return false;
    }
  }
  return true;
}

VertexSet reversed(VertexSet v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::optional<ParallelPathsCover> try_orientations(const Graph& g, const VertexSet& p1,
                                                   const VertexSet& p2) {
  if (no_crossing(g, p1, p2)) return ParallelPathsCover{p1, p2};
  VertexSet r2 = reversed(p2);
  if (no_crossing(g, p1, r2)) return ParallelPathsCover{p1, std::move(r2)};
  return std::nullopt;
}

// Path ordering of the induced subgraph on `rest`, in parent labels.
std::optional<VertexSet> induced_path_order(const Graph& g, Mask rest) {
  int twice_edges = 0;
  for (Vertex v : to_vertices(rest)) twice_edges += popcount(g.neighbors(v) & rest);
  if (twice_edges != 2 * (popcount(rest) - 1)) return std::nullopt;
  const Subgraph sub = induced_subgraph(g, rest);
  auto order = is_path(sub.graph);
  if (!order) return std::nullopt;
  for (Vertex& v : *order) v = sub.to_parent[v];
  return order;
}

// Depth-first enumeration of induced paths as candidate first sides. Each
// unordered path is visited once (first endpoint <= last endpoint). A
// negative budget means unlimited; exhausting it sets `exhausted`.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, long budget) : g_(g), budget_(budget) {}

  std::optional<ParallelPathsCover> run() {
    for (Vertex s = 0; s < g_.order() && !found_ && !exhausted_; ++s) {
      path_ = {s};
      extend(bit(s));
    }
    return found_;
  }

  bool exhausted() const { return exhausted_; }

 private:
  void extend(Mask in_path) {
    if (found_ || exhausted_) return;
    if (budget_ >= 0 && --budget_ < 0) {
      exhausted_ = true;
      return;
    }
    if (path_.front() <= path_.back()) visit(in_path);
    const Vertex last = path_.back();
    for (Vertex y : to_vertices(g_.neighbors(last) & ~in_path)) {
      if ((g_.neighbors(y) & in_path) != bit(last)) continue;
      path_.push_back(y);
      extend(in_path | bit(y));
      path_.pop_back();
      if (found_ || exhausted_) return;
    }
  }

  void visit(Mask in_path) {
    const Mask rest = g_.vertices() & ~in_path;
    if (rest == 0) return;
    auto p2 = induced_path_order(g_, rest);
    if (!p2) return;
    found_ = try_orientations(g_, path_, *p2);
  }

  const Graph& g_;
  long budget_;
  bool exhausted_ = false;
  VertexSet path_;
  std::optional<ParallelPathsCover> found_;
};

std::optional<ParallelPathsCover> lseac_cover(const Graph& g) {
  const auto dec = seac_decompose(g);
  if (!dec || !dec->is_lseac) return std::nullopt;
  if (dec->cycles.size() == 1) {
    const VertexSet& c = dec->cycles[0];
    return ParallelPathsCover{{c[0]}, VertexSet(c.begin() + 1, c.end())};
  }
  Graph ring = g;
  for (auto [a, b] : dec->articulation_edges) ring.remove_edge(a, b);
  auto cycle_edges = [&](int ci) {
    EdgeList out;
    const VertexSet& c = dec->cycles[ci];
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex a = c[i];
      const Vertex b = c[(i + 1) % c.size()];
      if (ring.adjacent(a, b)) out.emplace_back(a, b);
    }
    return out;
  };
  const EdgeList es = cycle_edges(dec->terminal_cycles.front());
  const EdgeList et = cycle_edges(dec->terminal_cycles.back());
  for (auto e1 : es) {
    for (auto e2 : et) {
      if (e1 == e2) continue;
      Graph cut = ring;
      cut.remove_edge(e1.first, e1.second);
      cut.remove_edge(e2.first, e2.second);
      const auto parts = components(cut);
      if (parts.size() != 2) continue;
      VertexSet sides[2];
      bool ok = true;
      for (int k = 0; k < 2 && ok; ++k) {
        auto order = is_path(parts[k].graph);
        if (!order) {
          ok = false;
          break;
        }
        for (Vertex v : *order) sides[k].push_back(parts[k].to_parent[v]);
        ok = induces_path_in_order(g, sides[k]);
      }
      if (!ok) continue;
      if (auto cover = try_orientations(g, sides[0], sides[1])) return cover;
    }
  }
  return std::nullopt;
}

std::optional<ParallelPathsCover> forest_cover(const Graph& g) {
  const PathCover pc = tree_path_cover(g);
  if (pc.count != 2) return std::nullopt;
  return try_orientations(g, pc.paths[0], pc.paths[1]);
}

constexpr long kLargeSearchBudget = 2'000'000;

}  // namespace

bool check_staircase(const Graph& g, const VertexSet& p1, const VertexSet& p2) {
  const int n = g.order();
  Mask seen = 0;
  for (const VertexSet* p : {&p1, &p2}) {
    for (Vertex v : *p) {
      if (v < 0 || v >= n) throw GraphError("check_staircase: vertex out of range");
      if (seen & bit(v)) throw GraphError("check_staircase: lists overlap");
      seen |= bit(v);
    }
  }
  if (seen != g.vertices()) throw GraphError("check_staircase: lists do not cover the graph");
  if (!induces_path_in_order(g, p1) || !induces_path_in_order(g, p2)) {
    throw GraphError("check_staircase: lists are not induced paths");
  }
  if (p1.empty() || p2.empty()) return false;
  if (is_path(g)) return false;
  return no_crossing(g, p1, p2);
}

std::optional<ParallelPathsCover> find_two_parallel_paths(const Graph& g,
                                                          const RecognitionOptions& opts) {
  if (g.order() == 0) throw GraphError("find_two_parallel_paths: empty graph");
  if (is_path(g)) return std::nullopt;
  const auto parts = components(g);
  if (parts.size() > 2) return std::nullopt;
  if (parts.size() == 2) {
    VertexSet sides[2];
    for (int k = 0; k < 2; ++k) {
      auto order = is_path(parts[k].graph);
      if (!order) return std::nullopt;
      for (Vertex v : *order) sides[k].push_back(parts[k].to_parent[v]);
    }
    return ParallelPathsCover{sides[0], sides[1]};
  }
  if (g.edge_count() > 2 * g.order() - 3 || !is_partial_two_tree(g)) return std::nullopt;
  if (g.order() <= opts.max_exhaustive_n) return CoverSearch(g, -1).run();
  if (is_forest(g)) return forest_cover(g);
  bool c2 = true;
  for (Vertex v = 0; v < g.order(); ++v) c2 = c2 && g.degree(v) >= 2;
  if (c2) return lseac_cover(g);
  return CoverSearch(g, kLargeSearchBudget).run();
}

}  // namespace maxmult
