#include "maxmult/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace maxmult {

VertexSet to_vertices(Mask m) {
  VertexSet out;
  out.reserve(popcount(m));
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

Mask to_mask(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

ParseError::ParseError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) : what),
      line_(line) {}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (Mask row : adj_) twice += popcount(row);
  return twice / 2;
}

EdgeList Graph::edges() const {
  EdgeList out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : to_vertices(adj_[u] & ~low_mask(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Parses whitespace separated integers; false on junk.
bool read_ints(std::string_view line, std::vector<long>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{}) return false;
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') return false;
    out.push_back(value);
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  std::vector<long> ints;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    const auto line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!read_ints(line, ints)) throw ParseError("malformed line", line_no);
    if (!g) {
      if (ints.size() != 1) throw ParseError("expected vertex count", line_no);
      if (ints[0] < 0 || ints[0] > kMaxVertices) {
        throw ParseError("vertex count out of range", line_no);
      }
      g.emplace(static_cast<int>(ints[0]));
    } else {
      if (ints.size() != 2) throw ParseError("expected \"u v\"", line_no);
      const long u = ints[0];
      const long v = ints[1];
      if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) {
        throw ParseError("vertex index out of range", line_no);
      }
      if (u == v) throw ParseError("self-loop", line_no);
      g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (end == text.size()) break;
  }
  if (!g) throw ParseError("missing vertex count", 0);
  return *g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// graph6: one byte n+63 (n <= 62), then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed 6 bits per byte, big-endian,
// each byte offset by 63.
Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 0);
  }
  const int n = text[0] - 63;
  if (n > 62) throw ParseError("graph6 with more than 62 vertices is unsupported", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw ParseError("truncated graph6 payload", 0);
  if (text.size() - 1 > bytes) throw ParseError("trailing graph6 payload", 0);
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw GraphError("graph6 with more than 62 vertices is unsupported");
  std::string out(1, static_cast<char>(n + 63));
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Subgraph induced_subgraph(const Graph& g, Mask keep) {
  keep &= g.vertices();
  Subgraph sub{Graph(popcount(keep)), to_vertices(keep)};
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) index[sub.to_parent[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex w : to_vertices(g.neighbors(sub.to_parent[i]) & keep)) {
      if (index[w] > static_cast<int>(i)) sub.graph.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  return sub;
}

Graph remove_vertices(const Graph& g, Mask drop) {
  return induced_subgraph(g, g.vertices() & ~drop).graph;
}

Mask component_of(const Graph& g, Vertex v, Mask within) {
  Mask seen = bit(v) & within;
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Vertex u : to_vertices(frontier)) next |= g.neighbors(u);
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, 0, g.vertices()) == g.vertices();
}

bool is_forest(const Graph& g) {
  int comps = 0;
  for (Mask rest = g.vertices(); rest != 0;) {
    rest &= ~component_of(g, lowest(rest), rest);
    ++comps;
  }
  return g.edge_count() == g.order() - comps;
}

std::vector<Subgraph> components(const Graph& g) {
  std::vector<Subgraph> out;
  for (Mask rest = g.vertices(); rest != 0;) {
    const Mask comp = component_of(g, lowest(rest), rest);
    out.push_back(induced_subgraph(g, comp));
    rest &= ~comp;
  }
  return out;
}

std::optional<VertexSet> is_path(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g) || g.edge_count() != n - 1) return std::nullopt;
  Vertex start = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  }
  VertexSet order{start};
  Mask used = bit(start);
  while (static_cast<int>(order.size()) < n) {
    const Mask next = g.neighbors(order.back()) & ~used;
    if (popcount(next) != 1) return std::nullopt;
    order.push_back(lowest(next));
    used |= next;
  }
  return order;
}

VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw GraphError("cut_vertices requires a connected graph");
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Mask rest = g.vertices() & ~bit(v);
    if (rest != 0 && component_of(g, lowest(rest), rest) != rest) out.push_back(v);
  }
  return out;
}

CoreResult core_of(const Graph& g) {
  Mask alive = g.vertices();
  VertexSet order;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : to_vertices(alive)) {
      if (popcount(g.neighbors(v) & alive) <= 1) {
        alive &= ~bit(v);
        order.push_back(v);
        changed = true;
      }
    }
  }
  if (alive == 0) throw AcyclicGraphError();
  return {induced_subgraph(g, alive), std::move(order)};
}

Contraction pendant_path_contract(const Graph& g) {
  if (is_forest(g)) throw AcyclicGraphError();
  Mask alive = g.vertices();
  std::vector<ContractionStep> log;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : to_vertices(alive)) {
      const Mask nb = g.neighbors(v) & alive;
      if (popcount(nb) != 1) continue;
      const Vertex u = lowest(nb);
      if (popcount(g.neighbors(u) & alive) == 2) {
        alive &= ~bit(v);
        log.push_back({v, u});
        changed = true;
      }
    }
  }
  return {induced_subgraph(g, alive), std::move(log)};
}

Graph subdivide_edge(const Graph& g, Edge e) {
  const auto [u, v] = e;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw GraphError("subdivide_edge: no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  Graph out(g.order() + 1);
  for (auto [a, b] : g.edges()) {
    if (!((a == u && b == v) || (a == v && b == u))) out.add_edge(a, b);
  }
  out.add_edge(u, g.order());
  out.add_edge(g.order(), v);
  return out;
}

Mask pendant_vertices(const Graph& g) {
  Mask out = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out |= bit(v);
  }
  return out;
}

}  // namespace maxmult
