#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxmult {

using Vertex = int;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using EdgeList = std::vector<Edge>;
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return std::countr_zero(m); }

VertexSet to_vertices(Mask m);
Mask to_mask(std::span<const Vertex> vs);

/// Raised for malformed edge-list or graph6 input. line() is 1-based, 0 when
/// the format has no line structure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line);
  int line() const { return line_; }

 private:
  int line_;
};

/// Precondition violations on graph operations.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// core_of and friends signal an acyclic input with this.
class AcyclicGraphError : public GraphError {
 public:
  AcyclicGraphError() : GraphError("tree") {}
};

/// Simple undirected graph on vertices 0..n-1, adjacency stored as one
/// 64-bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  Mask vertices() const { return low_mask(n_); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  Mask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  int edge_count() const;
  EdgeList edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Mask> adj_;
};

/// An induced subgraph relabeled to 0..k-1; to_parent[i] is the parent label
/// of vertex i.
struct Subgraph {
  Graph graph;
  VertexSet to_parent;
};

Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

Subgraph induced_subgraph(const Graph& g, Mask keep);
Graph remove_vertices(const Graph& g, Mask drop);

Mask component_of(const Graph& g, Vertex v, Mask within);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
std::vector<Subgraph> components(const Graph& g);

/// Path ordering if g is a path (a single vertex counts), else nullopt.
std::optional<VertexSet> is_path(const Graph& g);

/// Vertices whose removal disconnects g. Requires g connected.
VertexSet cut_vertices(const Graph& g);

struct CoreResult {
  Subgraph core;
  VertexSet removal_order;  // parent labels, in deletion order
};

/// Iteratively strips vertices of degree <= 1. Throws AcyclicGraphError when
/// nothing survives.
CoreResult core_of(const Graph& g);

struct ContractionStep {
  Vertex removed;   // pendant that was deleted (parent label)
  Vertex attached;  // its neighbor at deletion time, which had degree 2
};

struct Contraction {
  Subgraph graph;
  std::vector<ContractionStep> log;
};

/// Deletes pendant vertices whose neighbor has degree 2 until none remain.
Contraction pendant_path_contract(const Graph& g);

/// Replaces edge (u,v) by a path u-w-v; w is the new vertex n.
Graph subdivide_edge(const Graph& g, Edge e);

/// Vertices of degree one.
Mask pendant_vertices(const Graph& g);

}  // namespace maxmult
