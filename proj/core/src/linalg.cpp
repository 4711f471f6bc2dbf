#include "ssp/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ssp {

namespace {

bool all_rational(const Matrix& m) {
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      if (!m.at(i, j).is_rational()) return false;
    }
  }
  return true;
}

// Integer Bareiss with column skipping; exact divisions throughout.
int bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Field Gauss-Jordan to reduced row echelon form. Returns pivot columns
// (0-indexed); `a` is modified in place.
std::vector<int> rref(std::vector<std::vector<Scalar>>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    Scalar inv = a[r][c].inverse();
    for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> to_vectors(const Matrix& m) {
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) a[i - 1][j - 1] = m.at(i, j);
  }
  return a;
}

}  // namespace

int rank_exact(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (all_rational(m)) {
    // scale each row to integers; rank is unchanged
    std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 1; i <= m.rows(); ++i) {
      mpz_class lcm = 1;
      for (int j = 1; j <= m.cols(); ++j)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                m.at(i, j).rational_part().get_den().get_mpz_t());
      for (int j = 1; j <= m.cols(); ++j) {
        Rational v = m.at(i, j).rational_part() * Rational(lcm);
        a[i - 1][j - 1] = v.get_num();
      }
    }
    return bareiss_rank(std::move(a));
  }
  auto a = to_vectors(m);
  return static_cast<int>(rref(a).size());
}

Scalar det_exact(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Scalar(1);
  auto a = to_vectors(m);
  bool negate = false;
  Scalar det(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (!a[i][k].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Scalar(0);
    if (pivot != k) {
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    det *= a[k][k];
    Scalar inv = a[k][k].inverse();
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      Scalar f = a[i][k] * inv;
      for (int j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  return negate ? -det : det;
}

std::vector<std::vector<Scalar>> nullspace_exact(const Matrix& m) {
  const int cols = m.cols();
  auto a = to_vectors(m);
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_approx(const Matrix& m, double eps) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) a[i - 1][j - 1] = m.at(i, j).to_double();
  }
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    double best = eps;
    for (int i = r; i < rows; ++i) {
      if (std::fabs(a[i][c]) > best) {
        best = std::fabs(a[i][c]);
        pivot = i;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      double f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Matrix dense_submatrix(const Matrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < cols.size(); ++j) {
      s.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = m.at(rows[i], cols[j]);
    }
  }
  return s;
}

}  // namespace ssp
