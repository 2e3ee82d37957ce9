#include "maxmult/rational.hpp"

#include <stdexcept>
#include <utility>

namespace maxmult {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

QMatrix QMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  QMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
  }
  return s;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const mpq_class& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

int exact_rank(const QMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  std::vector<std::vector<mpz_class>> z(static_cast<std::size_t>(m), std::vector<mpz_class>(static_cast<std::size_t>(n)));
  for (int i = 0; i < m; ++i) {
    mpz_class scale = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) z[i][j] = a(i, j).get_num() * (scale / a(i, j).get_den());
  }
  int rank = 0;
  mpz_class prev = 1;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r) {
      if (z[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(z[piv], z[rank]);
    for (int r = rank + 1; r < m; ++r) {
      for (int j = col + 1; j < n; ++j) {
        z[r][j] = (z[rank][col] * z[r][j] - z[r][col] * z[rank][j]) / prev;
      }
      z[r][col] = 0;
    }
    prev = z[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

// Row reduction of [a | rhs] to reduced echelon form; returns the
// determinant of a (zero when singular).
mpq_class gauss_jordan(QMatrix& a, QMatrix& rhs) {
  const int n = a.rows();
  mpq_class det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != col) {
      det = -det;
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs(piv, j), rhs(col, j));
    }
    const mpq_class p = a(col, col);
    det *= p;
    for (int j = 0; j < n; ++j) a(col, j) /= p;
    for (int j = 0; j < rhs.cols(); ++j) rhs(col, j) /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const mpq_class f = a(r, col);
      for (int j = 0; j < n; ++j) a(r, j) -= f * a(col, j);
      for (int j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(col, j);
    }
  }
  return det;
}

}  // namespace

mpq_class determinant(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square matrix");
  if (a.rows() == 0) return 1;
  QMatrix work = a;
  QMatrix none(a.rows(), 0);
  return gauss_jordan(work, none);
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square matrix");
  QMatrix work = a;
  QMatrix inv = QMatrix::identity(a.rows());
  if (a.rows() > 0 && gauss_jordan(work, inv) == 0) return std::nullopt;
  return inv;
}

QMatrix adjugate(const QMatrix& a) {
  const int n = a.rows();
  QMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows;
      std::vector<int> cols;
      for (int k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      const mpq_class minor = determinant(a.submatrix(rows, cols));
      adj(i, j) = (i + j) % 2 == 0 ? minor : mpq_class(-minor);
    }
  }
  return adj;
}

bool in_pattern(const QMatrix& a, const Graph& g) {
  if (a.rows() != g.order() || a.cols() != g.order() || !a.is_symmetric()) return false;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) {
      if ((a(i, j) != 0) != g.adjacent(i, j)) return false;
    }
  }
  return true;
}

mpq_class RationalDraw::positive(long range) {
  std::uniform_int_distribution<long> dist(1, range);
  return mpq_class(dist(rng_));
}

}  // namespace maxmult
