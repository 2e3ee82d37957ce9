#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "enumerate.hpp"
#include "maxmult/graph.hpp"

using namespace maxmult;
using namespace maxmult::testing;

namespace {

// Straight transcription of the graph6 layout: N(n) byte, then the upper
// triangle column by column, six bits per byte, big-endian, offset 63.
Graph decode_graph6_by_hand(const std::string& s) {
  const int n = s[0] - 63;
  Graph g(n);
  std::vector<int> bits;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const int v = s[k] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(v >> b & 1);
  }
  std::size_t idx = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits[idx++]) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Graph k3 = parse_edge_list("3\n0 1\n1 2\n0 2\n");
  CHECK(k3 == complete_graph(3));
  CHECK(parse_edge_list("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3") == complete_graph(4));
  CHECK(parse_edge_list("# comment\n3\n\n0 1\n0 1\n1 2\n") == path_graph(3));

  try {
    parse_edge_list("2\n0 0");
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("graph6 decoding and round trip") {
  const Graph e = parse_graph6("A_");
  CHECK(e.order() == 2);
  CHECK(e.adjacent(0, 1));
  const Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(parse_graph6(">>graph6<<A_") == e);
  CHECK(parse_graph6("A_ \n") == e);
  CHECK(parse_graph6("D~{") == decode_graph6_by_hand("D~{"));

  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const std::string s = to_graph6(g);
      CHECK(decode_graph6_by_hand(s) == g);
      CHECK(parse_graph6(s) == g);
      CHECK(to_graph6(parse_graph6(s)) == s);
    }
  }
  CHECK_THROWS_AS(parse_graph6("C~ ~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("D~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A_x"), ParseError);
}

TEST_CASE("components") {
  Graph two(6);
  for (int b : {0, 3}) {
    two.add_edge(b, b + 1);
    two.add_edge(b + 1, b + 2);
    two.add_edge(b, b + 2);
  }
  const auto parts = components(two);
  REQUIRE(parts.size() == 2);
  for (const auto& p : parts) CHECK(p.graph == complete_graph(3));
  CHECK(parts[1].to_parent == VertexSet{3, 4, 5});
  CHECK(components(cycle_graph(5)).size() == 1);
  CHECK(components(Graph(0)).empty());
}

TEST_CASE("path recognition") {
  auto order = is_path(path_graph(5));
  REQUIRE(order);
  VertexSet expect{0, 1, 2, 3, 4};
  VertexSet rev(expect.rbegin(), expect.rend());
  CHECK((*order == expect || *order == rev));
  CHECK(!is_path(cycle_graph(4)));
  CHECK(!is_path(complete_bipartite(1, 3)));
  CHECK(is_path(Graph(1)));
  CHECK(!is_path(Graph(2)));
}

TEST_CASE("cut vertices agree with deletion") {
  CHECK(cut_vertices(path_graph(4)) == VertexSet{1, 2});
  CHECK(cut_vertices(cycle_graph(5)).empty());
  CHECK_THROWS_AS(cut_vertices(Graph(2)), GraphError);
  for (const Graph& g : connected_graphs(6)) {
    VertexSet expect;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!is_connected(remove_vertices(g, bit(v)))) expect.push_back(v);
    }
    CHECK(cut_vertices(g) == expect);
  }
}

TEST_CASE("core and pendant-path contraction") {
  // Triangle 0-1-2 with a pendant path 2-3-4.
  Graph g(5, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  const CoreResult core = core_of(g);
  CHECK(core.core.to_parent == VertexSet{0, 1, 2});
  CHECK(core.removal_order.size() == 2);
  CHECK_THROWS_AS(core_of(path_graph(4)), AcyclicGraphError);

  const Contraction c = pendant_path_contract(g);
  CHECK(c.graph.to_parent == VertexSet{0, 1, 2, 3});
  REQUIRE(c.log.size() == 1);
  CHECK(c.log[0].removed == 4);
  CHECK(c.log[0].attached == 3);
  CHECK_THROWS_AS(pendant_path_contract(path_graph(3)), AcyclicGraphError);
}

TEST_CASE("edge subdivision") {
  const Graph g = subdivide_edge(complete_graph(3), {0, 1});
  CHECK(g.order() == 4);
  CHECK(!g.adjacent(0, 1));
  CHECK(g.adjacent(0, 3));
  CHECK(g.adjacent(3, 1));
  CHECK((g == cycle_graph(4) || is_connected(g)));
  CHECK(g.edge_count() == 4);
  CHECK_THROWS_AS(subdivide_edge(path_graph(3), {0, 2}), GraphError);
}

TEST_CASE("enumerator counts") {
  const int all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  const int connected[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(all_graphs(n).size() == static_cast<std::size_t>(all[n]));
    CHECK(connected_graphs(n).size() == static_cast<std::size_t>(connected[n]));
  }
}

TEST_CASE("canonical code is a relabeling invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_connected(7, 0.4, rng);
    VertexSet perm{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(7);
    for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
    CHECK(canonical_code(g) == canonical_code(h));
  }
}
