#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "maxmult/graph.hpp"

namespace maxmult {

/// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpq_class& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  QMatrix transpose() const;
  QMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_symmetric() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Symmetric rational matrix meant to live in S(G) for some graph.
using RationalMatrix = QMatrix;

/// Rank over Q by fraction-free (Bareiss) elimination on a row-scaled
/// integer copy.
int exact_rank(const QMatrix& a);
mpq_class determinant(const QMatrix& a);
/// Inverse by Gauss-Jordan; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& a);
QMatrix adjugate(const QMatrix& a);

/// True iff a is symmetric, off-diagonal nonzeros sit exactly on the edges
/// of g, and the size matches.
bool in_pattern(const QMatrix& a, const Graph& g);

/// Nonzero integers drawn uniformly from {1..range}, seeded explicitly.
class RationalDraw {
 public:
  explicit RationalDraw(std::uint64_t seed) : rng_(seed) {}
  mpq_class positive(long range);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace maxmult
