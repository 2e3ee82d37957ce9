#include "maxmult/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace maxmult {

namespace {

struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

Spectrum spectrum(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  return {es.eigenvalues(), es.eigenvectors()};
}

struct Window {
  int start = 0;
  double mean = 0;
  double spread = 0;
};

Window best_window(const Eigen::VectorXd& ev, int m) {
  Window best;
  best.spread = std::numeric_limits<double>::infinity();
  for (int s = 0; s + m <= ev.size(); ++s) {
    const double mean = ev.segment(s, m).mean();
    const double spread = (ev.segment(s, m).array() - mean).square().sum();
    if (spread < best.spread) best = {s, mean, spread};
  }
  return best;
}

Eigen::VectorXd singular_values_ascending(const Eigen::MatrixXd& a) {
  Eigen::VectorXd sv = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs();
  std::sort(sv.data(), sv.data() + sv.size());
  return sv;
}

}  // namespace

MultiplicityObjective::MultiplicityObjective(const Graph& g, int m) : n_(g.order()), m_(m), edges_(g.edges()) {
  if (m < 1 || m > n_) throw GraphError("MultiplicityObjective: multiplicity out of range");
}

Eigen::MatrixXd MultiplicityObjective::matrix(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) a(i, i) = x(i);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto [i, j] = edges_[k];
    a(i, j) = a(j, i) = x(n_ + static_cast<int>(k));
  }
  return a;
}

double MultiplicityObjective::value(const Eigen::VectorXd& x, Eigen::VectorXd* grad) const {
  const Spectrum s = spectrum(matrix(x));
  const Window w = best_window(s.values, m_);
  if (grad) {
    grad->setZero(dimension());
    for (int r = 0; r < m_; ++r) {
      const int idx = w.start + r;
      const double c = 2 * (s.values(idx) - w.mean);
      const auto v = s.vectors.col(idx);
      for (int i = 0; i < n_; ++i) (*grad)(i) += c * v(i) * v(i);
      for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto [i, j] = edges_[k];
        (*grad)(n_ + static_cast<int>(k)) += c * 2 * v(i) * v(j);
      }
    }
  }
  return w.spread;
}

namespace {

class Search {
 public:
  Search(const Graph& g, int m, const OracleOptions& opts) : obj_(g, m), n_(g.order()), m_(m), opts_(opts) {}

  CorankResult run() {
    CorankResult best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int r = 0; r < opts_.restarts; ++r) {
      std::mt19937_64 rng(opts_.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r));
      Eigen::VectorXd x = initial(rng);
      descend(x);
      CorankResult res = evaluate(x);
      res.restart = r;
      if (res.success) return res;
      if (res.residual < best.residual) best = res;
    }
    return best;
  }

 private:
  Eigen::VectorXd initial(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> diag(-2.0, 2.0);
    std::uniform_real_distribution<double> mag(0.1, 2.0);
    Eigen::VectorXd x(obj_.dimension());
    for (int i = 0; i < n_; ++i) x(i) = diag(rng);
    for (int k = n_; k < x.size(); ++k) x(k) = (rng() & 1U ? 1.0 : -1.0) * mag(rng);
    return x;
  }

  // Shift the window mean to zero, rescale to ||A||_F = sqrt(n), and keep
  // edge weights away from zero.
  void normalize(Eigen::VectorXd& x) const {
    const Window w = best_window(spectrum(obj_.matrix(x)).values, m_);
    x.head(n_).array() -= w.mean;
    const double norm = obj_.matrix(x).norm();
    if (norm > 0) x *= std::sqrt(static_cast<double>(n_)) / norm;
    for (int k = n_; k < x.size(); ++k) {
      if (std::abs(x(k)) < opts_.search_floor) x(k) = x(k) < 0 ? -opts_.search_floor : opts_.search_floor;
    }
  }

  // Damped Newton on the block equations v_i^T (A - tI) v_j = 0 for the
  // window eigenvectors, unknowns x and t, minimum-norm steps.
  void descend(Eigen::VectorXd& x) const {
    normalize(x);
    double f = obj_.value(x);
    double damping = 1e-3;
    int stall = 0;
    const int rows = m_ * (m_ + 1) / 2;
    const int cols = obj_.dimension() + 1;
    const auto& edges = obj_.edges();
    for (int it = 0; it < opts_.max_iterations && f > 1e-30; ++it) {
      const Spectrum s = spectrum(obj_.matrix(x));
      const Window w = best_window(s.values, m_);
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(rows, cols);
      Eigen::VectorXd res = Eigen::VectorXd::Zero(rows);
      int row = 0;
      for (int a = 0; a < m_; ++a) {
        for (int b = a; b < m_; ++b, ++row) {
          const auto va = s.vectors.col(w.start + a);
          const auto vb = s.vectors.col(w.start + b);
          if (a == b) {
            res(row) = s.values(w.start + a) - w.mean;
            jac(row, cols - 1) = -1;
          }
          for (int i = 0; i < n_; ++i) jac(row, i) = va(i) * vb(i);
          for (std::size_t k = 0; k < edges.size(); ++k) {
            const auto [i, j] = edges[k];
            jac(row, n_ + static_cast<int>(k)) = va(i) * vb(j) + va(j) * vb(i);
          }
        }
      }
      const Eigen::MatrixXd jjt = jac * jac.transpose();
      bool accepted = false;
      for (int tries = 0; tries < 12; ++tries) {
        Eigen::MatrixXd lhs = jjt;
        lhs.diagonal().array() += damping;
        const Eigen::VectorXd step = -jac.transpose() * lhs.ldlt().solve(res);
        Eigen::VectorXd trial = x + step.head(obj_.dimension());
        trial.head(n_).array() -= step(cols - 1);
        normalize(trial);
        const double ft = obj_.value(trial);
        if (ft < f) {
          const bool progress = ft < 0.9 * f;
          x = trial;
          f = ft;
          damping = std::max(damping / 10, 1e-15);
          accepted = true;
          stall = progress ? 0 : stall + 1;
          break;
        }
        damping *= 10;
      }
      if (!accepted || stall > 25) break;
    }
  }

  CorankResult evaluate(const Eigen::VectorXd& x) const {
    CorankResult res;
    res.matrix = obj_.matrix(x);
    const Eigen::VectorXd sv = singular_values_ascending(res.matrix);
    res.residual = sv.head(m_).squaredNorm();
    res.gap = m_ < sv.size() ? sv(m_) : std::numeric_limits<double>::infinity();
    res.success = res.residual < opts_.residual_tol && res.gap > opts_.gap_tol;
    return res;
  }

  MultiplicityObjective obj_;
  int n_;
  int m_;
  OracleOptions opts_;
};

}  // namespace

CorankResult find_corank(const Graph& g, int m, const OracleOptions& opts) {
  if (m < 1 || m > g.order()) throw GraphError("find_corank: corank out of range");
  if (m == g.order()) {
    // Only the zero matrix has corank n, so g must be edgeless.
    CorankResult res;
    res.matrix = Eigen::MatrixXd::Zero(g.order(), g.order());
    res.success = g.edge_count() == 0;
    res.gap = std::numeric_limits<double>::infinity();
    res.restart = 0;
    return res;
  }
  return Search(g, m, opts).run();
}

bool verify_corank(const Graph& g, const Eigen::MatrixXd& a, int m, const OracleOptions& opts) {
  const int n = g.order();
  if (a.rows() != n || a.cols() != n || m < 1 || m > n) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) return false;
      if (g.adjacent(i, j) ? std::abs(a(i, j)) < opts.pattern_floor : a(i, j) != 0) return false;
    }
  }
  const Eigen::VectorXd sv = singular_values_ascending(a);
  if (sv.head(m).squaredNorm() >= opts.residual_tol) return false;
  return m == n || sv(m) > opts.gap_tol;
}

int estimate_M(const Graph& g, int max_level, const OracleOptions& opts) {
  const int n = g.order();
  if (n == 0) return 0;
  int attained = 1;
  for (int m = 2; m <= std::min(max_level, n); ++m) {
    if (!find_corank(g, m, opts).success) break;
    attained = m;
  }
  return attained;
}

}  // namespace maxmult
