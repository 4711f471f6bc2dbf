#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ssp/graph.hpp"
#include "ssp/scalar.hpp"

namespace ssp {

/// Dense matrix over Scalar, 0-indexed storage with 1-indexed accessors to
/// match the vertex labelling used throughout.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return data_[idx(i, j)]; }
  const Scalar& at(int i, int j) const { return data_[idx(i, j)]; }

  bool is_zero() const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t idx(int i, int j) const;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

/// Dense symmetric matrix; set() writes both mirror entries.
class SymMatrix {
 public:
  SymMatrix() : n_(0) {}
  explicit SymMatrix(int n) : n_(n), m_(n, n) {}

  int order() const { return n_; }
  const Scalar& at(int i, int j) const { return m_.at(i, j); }
  void set(int i, int j, const Scalar& v) {
    m_.at(i, j) = v;
    m_.at(j, i) = v;
  }

  const Matrix& dense() const { return m_; }
  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.m_ == b.m_; }

 private:
  int n_;
  Matrix m_;
};

/// Off-diagonal support equals E(g); diagonal unconstrained.
bool in_pattern_S(const SymMatrix& a, const Graph& g);

/// Zero diagonal and zero on E(h); entries off E(h) free (zero allowed).
bool in_pattern_S0bar(const SymMatrix& x, const Graph& h);

/// [A,X] = AX - XA. Skew-symmetry of the result is asserted.
Matrix commutator(const SymMatrix& a, const SymMatrix& x);

SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b);

/// Platform-stable uniform integer in [lo, hi] (rejection sampling over the
/// raw mt19937_64 stream; std::uniform_int_distribution is not portable).
long uniform_int(std::mt19937_64& rng, long lo, long hi);

uint64_t mix_seed(uint64_t seed, uint64_t index);

/// Random integer matrix in S(g): nonzero entries in [-range, range] on
/// edges, free diagonal. Deterministic for a fixed seed.
SymMatrix sample_pattern_matrix(const Graph& g, uint64_t seed, long range = 10);

}  // namespace ssp
