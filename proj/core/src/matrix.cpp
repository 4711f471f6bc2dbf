#include "ssp/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace ssp {

size_t Matrix::idx(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix index");
  return static_cast<size_t>(i - 1) * cols_ + (j - 1);
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 1; i <= a.rows_; ++i) {
    for (int k = 1; k <= a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix c(a.rows_, a.cols_);
  for (int i = 1; i <= a.rows_; ++i) {
    for (int j = 1; j <= a.cols_; ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  }
  return c;
}

bool in_pattern_S(const SymMatrix& a, const Graph& g) {
  if (a.order() != g.order()) throw std::invalid_argument("matrix/graph order mismatch");
  for (int i = 1; i <= g.order(); ++i) {
    for (int j = i + 1; j <= g.order(); ++j) {
      if (g.has_edge(i, j) == a.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool in_pattern_S0bar(const SymMatrix& x, const Graph& h) {
  if (x.order() != h.order()) throw std::invalid_argument("matrix/graph order mismatch");
  for (int i = 1; i <= h.order(); ++i) {
    if (!x.at(i, i).is_zero()) return false;
    for (int j = i + 1; j <= h.order(); ++j) {
      if (h.has_edge(i, j) && !x.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

Matrix commutator(const SymMatrix& a, const SymMatrix& x) {
  if (a.order() != x.order()) throw std::invalid_argument("commutator order mismatch");
  Matrix c = a.dense() * x.dense() - x.dense() * a.dense();
  for (int i = 1; i <= a.order(); ++i) {
    assert(c.at(i, i).is_zero());
    for (int j = i + 1; j <= a.order(); ++j) assert(c.at(i, j) == -c.at(j, i));
  }
  return c;
}

SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("hadamard order mismatch");
  SymMatrix h(a.order());
  for (int i = 1; i <= a.order(); ++i) {
    for (int j = i; j <= a.order(); ++j) h.set(i, j, a.at(i, j) * b.at(i, j));
  }
  return h;
}

long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  assert(lo <= hi);
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<long>(r % span);
}

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  // splitmix64 finalizer over the combined value
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SymMatrix sample_pattern_matrix(const Graph& g, uint64_t seed, long range) {
  if (range < 1) throw std::invalid_argument("sampling range must be >= 1");
  std::mt19937_64 rng(seed);
  SymMatrix a(g.order());
  for (int i = 1; i <= g.order(); ++i) a.set(i, i, Scalar(Rational(uniform_int(rng, -range, range))));
  for (int i = 1; i <= g.order(); ++i) {
    for (int j = i + 1; j <= g.order(); ++j) {
      if (!g.has_edge(i, j)) continue;
      long v;
      do {
        v = uniform_int(rng, -range, range);
      } while (v == 0);
      a.set(i, j, Scalar(Rational(v)));
    }
  }
  return a;
}

}  // namespace ssp
