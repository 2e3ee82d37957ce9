#include "maxmult/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxmult {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::M1:
      return "M1";
    case Verdict::M2:
      return "M2";
    case Verdict::MGe3:
      return "MGe3";
  }
  return "?";
}

int level(Verdict v) {
  switch (v) {
    case Verdict::M1:
      return 1;
    case Verdict::M2:
      return 2;
    case Verdict::MGe3:
      return 3;
  }
  return 0;
}

Verdict verdict_of_level(int level) {
  if (level <= 0) throw GraphError("verdict_of_level: empty graph has no verdict");
  if (level == 1) return Verdict::M1;
  if (level == 2) return Verdict::M2;
  return Verdict::MGe3;
}

std::string_view to_string(Ge3Reason r) {
  switch (r) {
    case Ge3Reason::HK4:
      return "HK4";
    case Ge3Reason::HK23:
      return "HK23";
    case Ge3Reason::TreeCoverGe3:
      return "TreeCoverGe3";
    case Ge3Reason::CutVertexC2:
      return "CutVertexC2";
    case Ge3Reason::SeacBranching:
      return "SeacBranching";
    case Ge3Reason::ThreePendantNeighbors:
      return "ThreePendantNeighbors";
    case Ge3Reason::PendantReductionWitness:
      return "PendantReductionWitness";
    case Ge3Reason::ComponentSum:
      return "ComponentSum";
  }
  return "?";
}

namespace {

VertexSet lift(const VertexSet& vs, const VertexSet& to_parent) {
  VertexSet out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(to_parent[v]);
  return out;
}

ParallelPathsCover lift(const ParallelPathsCover& c, const VertexSet& to_parent) {
  return {lift(c.p1, to_parent), lift(c.p2, to_parent)};
}

// Degree of v inside the induced subgraph on mask.
int degree_in(const Graph& g, Vertex v, Mask mask) { return popcount(g.neighbors(v) & mask); }

std::optional<Vertex> pendant_in(const Graph& g, Mask mask) {
  for (Vertex v : to_vertices(mask)) {
    if (degree_in(g, v, mask) == 1) return v;
  }
  return std::nullopt;
}

bool min_degree_two(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) return false;
  }
  return g.order() > 0;
}

std::optional<Vertex> three_pendant_hub(const Graph& g) {
  const Mask pendants = pendant_vertices(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (popcount(g.neighbors(u) & pendants) >= 3) return u;
  }
  return std::nullopt;
}

}  // namespace

PendantReduction::PendantReduction(const Graph& g, RecognitionOptions opts) : g_(g), opts_(opts) {}

int PendantReduction::level(Mask mask) {
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  const int value = compute(mask);
  memo_.emplace(mask, value);
  return value;
}

int PendantReduction::compute(Mask mask) {
  if (mask == 0) return 0;
  const Mask comp = component_of(g_, lowest(mask), mask);
  if (comp != mask) return std::min(3, level(comp) + level(mask & ~comp));
  if (popcount(mask) == 1) return 1;
  if (auto v = pendant_in(g_, mask)) {
    const Mask rest = mask & ~bit(*v);
    const Vertex u = lowest(g_.neighbors(*v) & mask);
    const int keep = level(rest);
    if (keep >= 3) return 3;
    return std::max(keep, level(rest & ~bit(u)));
  }
  const Graph sub = induced_subgraph(g_, mask).graph;
  if (is_path(sub)) return 1;
  return find_two_parallel_paths(sub, opts_) ? 2 : 3;
}

std::optional<Mask> PendantReduction::ge3_witness(Mask mask) {
  if (level(mask) < 3) return std::nullopt;
  for (;;) {
    if (component_of(g_, lowest(mask), mask) != mask) return mask;
    auto v = pendant_in(g_, mask);
    if (!v) return mask;
    const Mask rest = mask & ~bit(*v);
    const Vertex u = lowest(g_.neighbors(*v) & mask);
    mask = level(rest) >= 3 ? rest : rest & ~bit(u);
  }
}

std::optional<ExceptionalReport> exceptional_test(const Graph& g, const RecognitionOptions& opts) {
  if (g.order() == 0 || !is_connected(g) || find_two_parallel_paths(g, opts)) return std::nullopt;
  PendantReduction reduction(g, opts);
  std::optional<ExceptionalReport> best;
  for (Vertex v : to_vertices(pendant_vertices(g))) {
    const Vertex u = lowest(g.neighbors(v));
    const Mask minus_v = g.vertices() & ~bit(v);
    const Mask minus_uv = minus_v & ~bit(u);
    if (reduction.level(minus_v) > 2 || reduction.level(minus_uv) > 2) continue;
    ExceptionalReport r;
    r.distinguished = u;
    r.pendant = v;
    const Subgraph sv = induced_subgraph(g, minus_v);
    if (auto c = find_two_parallel_paths(sv.graph, opts)) r.minus_pendant = lift(*c, sv.to_parent);
    r.minus_both_is_empty = minus_uv == 0;
    if (minus_uv != 0) {
      const Subgraph suv = induced_subgraph(g, minus_uv);
      r.minus_both_is_path = is_path(suv.graph).has_value();
      if (!r.minus_both_is_path) {
        if (auto c = find_two_parallel_paths(suv.graph, opts)) r.minus_both = lift(*c, suv.to_parent);
      }
    }
    const bool strict = r.minus_pendant && (r.minus_both || r.minus_both_is_path || r.minus_both_is_empty);
    if (!best || strict) best = r;
    if (strict) break;
  }
  if (!best) return std::nullopt;
  const Mask pendants = pendant_vertices(g);
  best->pendant_count = popcount(pendants);
  try {
    const CoreResult core = core_of(g);
    const Mask core_mask = to_mask(core.core.to_parent);
    best->core_order = core.core.graph.order();
    if (core.core.graph.order() >= 3) {
      auto seac = seac_decompose(core.core.graph);
      best->core_is_lseac = seac && seac->is_lseac;
      if (seac) best->core_cycle_count = static_cast<int>(seac->cycles.size());
    }
    bool on_core = true;
    for (Vertex x : to_vertices(g.vertices() & ~core_mask)) {
      if (!(pendants & bit(x)) || !(g.neighbors(x) & core_mask)) on_core = false;
    }
    best->pendants_on_core = on_core;
  } catch (const AcyclicGraphError&) {
    best->core_order = 0;
  }
  return best;
}

int m_upper_by_pendant_reduction(const Graph& g, const RecognitionOptions& opts) {
  if (g.order() == 0 || !is_connected(g) || pendant_vertices(g) == 0) {
    throw GraphError("m_upper_by_pendant_reduction: needs a connected graph with a pendant");
  }
  return PendantReduction(g, opts).level(g.vertices());
}

Classification classify(const Graph& g, const RecognitionOptions& opts) {
  const int n = g.order();
  if (n == 0) throw GraphError("classify: empty graph");
  if (!is_connected(g)) {
    DisconnectedCert cert;
    int total = 0;
    for (const Subgraph& part : components(g)) {
      Classification c = classify(part.graph, opts);
      total += level(c.verdict);
      cert.parts.push_back(part.to_parent);
      cert.verdicts.push_back(std::move(c));
    }
    std::optional<int> exact;
    int sum = 0;
    bool all_exact = true;
    for (const auto& c : cert.verdicts) {
      if (c.exact_m) {
        sum += *c.exact_m;
      } else {
        all_exact = false;
      }
    }
    if (all_exact) exact = sum;
    return {verdict_of_level(std::min(3, total)), std::move(cert), exact};
  }
  if (auto order = is_path(g)) return {Verdict::M1, PathCert{*order}, 1};

  if (auto cover = find_two_parallel_paths(g, opts)) {
    TppCert cert{*cover, lower_bound_certificate(g, *cover)};
    return {Verdict::M2, std::move(cert), 2};
  }

  if (is_forest(g)) {
    const PathCover pc = tree_path_cover(g);
    if (pc.count < 3) throw std::logic_error("classify: forest with cover 2 but no parallel paths");
    Ge3Cert cert;
    cert.reason = Ge3Reason::TreeCoverGe3;
    cert.tree_path_cover = pc.count;
    return {Verdict::MGe3, cert, pc.count};
  }

  if (!is_partial_two_tree(g)) {
    auto w = find_hK4(g, opts);
    if (!w) throw std::logic_error("classify: no hK4 in a graph that is not a partial 2-tree");
    Ge3Cert cert;
    cert.reason = Ge3Reason::HK4;
    cert.homeomorph = *w;
    return {Verdict::MGe3, cert, std::nullopt};
  }

  PendantReduction reduction(g, opts);
  const int lv = reduction.level(g.vertices());
  if (lv == 2) {
    auto report = exceptional_test(g, opts);
    if (!report) throw std::logic_error("classify: pendant recursion gives 2 without an exceptional pendant");
    return {Verdict::M2, ExceptionalCert{*report}, 2};
  }
  if (lv != 3) throw std::logic_error("classify: non-path with level below 2");

  Ge3Cert cert;
  if (auto w = find_hK23(g)) {
    cert.reason = Ge3Reason::HK23;
    cert.homeomorph = *w;
  } else if (min_degree_two(g)) {
    const VertexSet cuts = cut_vertices(g);
    if (!cuts.empty()) {
      cert.reason = Ge3Reason::CutVertexC2;
      cert.cut_vertices = cuts;
    } else {
      cert.reason = Ge3Reason::SeacBranching;
    }
  } else if (auto hub = three_pendant_hub(g)) {
    cert.reason = Ge3Reason::ThreePendantNeighbors;
    cert.hub = *hub;
  } else {
    cert.reason = Ge3Reason::PendantReductionWitness;
    cert.reduced = to_vertices(*reduction.ge3_witness(g.vertices()));
  }
  return {Verdict::MGe3, cert, std::nullopt};
}

namespace {

// Staircase check of a cover given in parent labels on the subgraph induced
// by keep.
bool cover_fits(const Graph& g, Mask keep, const ParallelPathsCover& cover) {
  const Subgraph sub = induced_subgraph(g, keep);
  VertexSet index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) index[sub.to_parent[i]] = static_cast<Vertex>(i);
  auto local = [&](const VertexSet& p) {
    VertexSet out;
    for (Vertex v : p) {
      if (v < 0 || v >= g.order() || index[v] < 0) throw GraphError("cover vertex outside subgraph");
      out.push_back(index[v]);
    }
    return out;
  };
  try {
    return check_staircase(sub.graph, local(cover.p1), local(cover.p2));
  } catch (const GraphError&) {
    return false;
  }
}

struct Verifier {
  const Graph& g;

  std::optional<bool> operator()(const PathCert& c) const {
    auto order = is_path(g);
    if (!order) return false;
    VertexSet rev = *order;
    std::reverse(rev.begin(), rev.end());
    return c.order == *order || c.order == rev;
  }
  std::optional<bool> operator()(const TppCert& c) const {
    return cover_fits(g, g.vertices(), c.cover) && verify_certificate(g, c.certificate);
  }
  std::optional<bool> operator()(const ExceptionalCert& c) const {
    const ExceptionalReport& r = c.report;
    const int n = g.order();
    if (r.pendant < 0 || r.pendant >= n || r.distinguished < 0 || r.distinguished >= n) return false;
    if (g.degree(r.pendant) != 1 || !g.adjacent(r.pendant, r.distinguished)) return false;
    if (!r.minus_pendant) return std::nullopt;
    const Mask minus_v = g.vertices() & ~bit(r.pendant);
    const Mask minus_uv = minus_v & ~bit(r.distinguished);
    if (!cover_fits(g, minus_v, *r.minus_pendant)) return false;
    if (r.minus_both_is_empty) return minus_uv == 0;
    if (r.minus_both_is_path) return is_path(induced_subgraph(g, minus_uv).graph).has_value();
    if (!r.minus_both) return std::nullopt;
    return cover_fits(g, minus_uv, *r.minus_both);
  }
  std::optional<bool> operator()(const DisconnectedCert& c) const {
    bool unknown = false;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      const Subgraph sub = induced_subgraph(g, to_mask(c.parts[i]));
      auto ok = verify_classification(sub.graph, c.verdicts[i]);
      if (ok && !*ok) return false;
      if (!ok) unknown = true;
    }
    if (unknown) return std::nullopt;
    return true;
  }
  std::optional<bool> operator()(const Ge3Cert& c) const {
    switch (c.reason) {
      case Ge3Reason::HK4:
      case Ge3Reason::HK23:
        return c.homeomorph && verify_homeomorph(g, *c.homeomorph);
      case Ge3Reason::TreeCoverGe3:
        return is_forest(g) && is_connected(g) && tree_path_cover(g).count == c.tree_path_cover &&
               c.tree_path_cover >= 3;
      case Ge3Reason::CutVertexC2: {
        if (!is_connected(g) || !min_degree_two(g) || c.cut_vertices.empty()) return false;
        const VertexSet cuts = cut_vertices(g);
        for (Vertex v : c.cut_vertices) {
          if (std::find(cuts.begin(), cuts.end(), v) == cuts.end()) return false;
        }
        return true;
      }
      case Ge3Reason::ThreePendantNeighbors:
        return c.hub >= 0 && c.hub < g.order() && popcount(g.neighbors(c.hub) & pendant_vertices(g)) >= 3;
      default:
        return std::nullopt;
    }
  }
};

}  // namespace

std::optional<bool> verify_classification(const Graph& g, const Classification& c) {
  return std::visit(Verifier{g}, c.certificate);
}

}  // namespace maxmult
