#pragma once

#include <cstddef>

#include "elicit/common.hpp"

namespace elicit::linalg {

// Dense row-major k x k matrix, k <= 8 everywhere in this library.
struct Matrix {
  int n = 0;
  Vec a;  // n*n row-major

  Matrix() = default;
  explicit Matrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
  double& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  double at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

// Solves A x = b by Gaussian elimination with partial pivoting.
// Throws std::runtime_error on a (numerically) singular matrix.
Vec solve(Matrix A, Vec b);

Matrix inverse(const Matrix& A);

double inf_norm(const Matrix& A);

// ||A||_inf * ||A^-1||_inf; +inf when singular.
double condition_inf(const Matrix& A);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
Vec symmetric_eigenvalues(Matrix A);

double min_eigenvalue_symmetric_part(const Matrix& A);

}  // namespace elicit::linalg
