#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "maxmult/oracle.hpp"

using namespace maxmult;
using namespace maxmult::testing;

TEST_CASE("corank searches on named graphs") {
  CHECK(find_corank(complete_graph(4), 3).success);
  CHECK(!find_corank(path_graph(4), 2).success);
  CHECK(find_corank(cycle_graph(6), 2).success);
  CHECK(!find_corank(cycle_graph(6), 3).success);
  CHECK(estimate_M(complete_bipartite(2, 3)) == 3);
  CHECK(estimate_M(path_graph(5)) == 1);
  Graph diamond(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(estimate_M(diamond) == 2);
  CHECK(estimate_M(Graph(0)) == 0);
  CHECK(estimate_M(Graph(1)) == 1);
  CHECK(estimate_M(Graph(4), 3) == 3);
}

TEST_CASE("successful searches pass verification") {
  for (const Graph& g : {complete_graph(4), cycle_graph(5), complete_bipartite(2, 3)}) {
    const int m = g.order() == 5 && g.edge_count() == 5 ? 2 : 3;
    const CorankResult r = find_corank(g, m);
    REQUIRE(r.success);
    CHECK(r.residual < 1e-16);
    CHECK(r.gap > 1e-4);
    CHECK(verify_corank(g, r.matrix, m));
  }
}

TEST_CASE("verify_corank") {
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(4, 4);
  CHECK(verify_corank(complete_graph(4), ones, 3));
  CHECK(!verify_corank(complete_graph(4), ones, 2));  // corank is 3, so no gap after two
  CHECK(!verify_corank(cycle_graph(4), Eigen::MatrixXd::Identity(4, 4), 2));
  Eigen::MatrixXd hole = ones;
  hole(0, 1) = hole(1, 0) = 0;
  CHECK(!verify_corank(complete_graph(4), hole, 3));
  Eigen::MatrixXd extra = Eigen::MatrixXd::Zero(4, 4);
  extra(0, 2) = extra(2, 0) = 1;
  CHECK(!verify_corank(path_graph(4), extra, 2));
}

TEST_CASE("searches are deterministic") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_connected(6, 0.5, rng);
    const CorankResult a = find_corank(g, 2);
    const CorankResult b = find_corank(g, 2);
    CHECK(a.success == b.success);
    CHECK(a.restart == b.restart);
    CHECK(a.matrix == b.matrix);
  }
}

TEST_CASE("objective gradient") {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected(5, 0.6, rng);
    const MultiplicityObjective f(g, 2);
    Eigen::VectorXd x(f.dimension());
    for (int k = 0; k < x.size(); ++k) x(k) = normal(rng);
    Eigen::VectorXd grad;
    f.value(x, &grad);
    Eigen::VectorXd fd(x.size());
    const double h = 1e-6;
    for (int k = 0; k < x.size(); ++k) {
      Eigen::VectorXd xp = x;
      Eigen::VectorXd xm = x;
      xp(k) += h;
      xm(k) -= h;
      fd(k) = (f.value(xp) - f.value(xm)) / (2 * h);
    }
    CHECK((grad - fd).norm() <= 1e-5 * std::max(grad.norm(), 1e-8));
  }
}
