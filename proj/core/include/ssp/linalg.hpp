#pragma once

#include <vector>

#include "ssp/matrix.hpp"

namespace ssp {

/// Exact column rank. Rational matrices go through fraction-free Bareiss
/// elimination over the integers after clearing row denominators; matrices
/// with quadratic-extension entries fall back to field elimination. Pivoting
/// is first-nonzero, so results are deterministic.
int rank_exact(const Matrix& m);

/// Exact determinant of a square matrix (field elimination, pivot product).
Scalar det_exact(const Matrix& m);

/// Basis of the right nullspace; each vector has m.cols() entries and
/// satisfies M v = 0 exactly. Basis size is cols - rank.
std::vector<std::vector<Scalar>> nullspace_exact(const Matrix& m);

/// Floating-point rank with pivot threshold eps. Never certifying.
int rank_approx(const Matrix& m, double eps = 1e-9);

Matrix dense_submatrix(const Matrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols);

}  // namespace ssp
