#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>

#include "maxmult/graph.hpp"

namespace maxmult {

struct OracleOptions {
  std::uint64_t seed = 1;
  int restarts = 32;
  int max_iterations = 300;
  double residual_tol = 1e-16;
  double gap_tol = 1e-4;
  // Edge weights are kept at least this large (after scaling to
  // ||A||_F = sqrt(n)) while searching.
  double search_floor = 0.1;
  // verify_corank rejects edge entries smaller than this.
  double pattern_floor = 1e-3;
};

/// Parameters are the n diagonal entries followed by one weight per edge in
/// g.edges() order.
class MultiplicityObjective {
 public:
  MultiplicityObjective(const Graph& g, int m);

  int dimension() const { return static_cast<int>(edges_.size()) + n_; }
  Eigen::MatrixXd matrix(const Eigen::VectorXd& x) const;
  /// Variance-type spread sum (lambda_i - mean)^2 over the window of m
  /// consecutive eigenvalues where it is smallest.
  double value(const Eigen::VectorXd& x, Eigen::VectorXd* grad = nullptr) const;

  const EdgeList& edges() const { return edges_; }
  int m() const { return m_; }

 private:
  int n_;
  int m_;
  EdgeList edges_;
};

struct CorankResult {
  bool success = false;
  Eigen::MatrixXd matrix;  // in S(G), corank m when success
  double residual = 0;     // sum of squares of the m smallest singular values
  double gap = 0;          // (m+1)-th smallest singular value
  int restart = -1;
};

/// Searches S(G) for a matrix of corank m. Deterministic for a given seed.
CorankResult find_corank(const Graph& g, int m, const OracleOptions& opts = {});

/// Pattern, symmetry, residual and gap checks on a numeric matrix.
bool verify_corank(const Graph& g, const Eigen::MatrixXd& a, int m, const OracleOptions& opts = {});

/// Numeric estimate of M(G) capped at max_level; 0 for the empty graph.
int estimate_M(const Graph& g, int max_level = 3, const OracleOptions& opts = {});

}  // namespace maxmult
