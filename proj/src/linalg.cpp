#include "elicit/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace elicit::linalg {

Vec solve(Matrix A, Vec b) {
  const int n = A.n;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(A.at(r, col)) > std::fabs(A.at(piv, col))) piv = r;
    }
    if (std::fabs(A.at(piv, col)) < 1e-300) {
      throw std::runtime_error("linalg::solve: singular matrix");
    }
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(A.at(piv, c), A.at(col, c));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = A.at(r, col) / A.at(col, col);
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) A.at(r, c) -= f * A.at(col, c);
      b[r] -= f * b[col];
    }
  }
  Vec x(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= A.at(r, c) * x[c];
    x[r] = s / A.at(r, r);
  }
  return x;
}

Matrix inverse(const Matrix& A) {
  const int n = A.n;
  Matrix inv(n);
  for (int col = 0; col < n; ++col) {
    Vec e(n, 0.0);
    e[col] = 1.0;
    Vec x = solve(A, e);
    for (int r = 0; r < n; ++r) inv.at(r, col) = x[r];
  }
  return inv;
}

double inf_norm(const Matrix& A) {
  double best = 0.0;
  for (int r = 0; r < A.n; ++r) {
    double s = 0.0;
    for (int c = 0; c < A.n; ++c) s += std::fabs(A.at(r, c));
    best = std::max(best, s);
  }
  return best;
}

double condition_inf(const Matrix& A) {
  try {
    return inf_norm(A) * inf_norm(inverse(A));
  } catch (const std::runtime_error&) {
    return kInf;
  }
}

Vec symmetric_eigenvalues(Matrix A) {
  const int n = A.n;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += A.at(p, q) * A.at(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A.at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        const double theta = (A.at(q, q) - A.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = A.at(i, p), aiq = A.at(i, q);
          A.at(i, p) = c * aip - s * aiq;
          A.at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = A.at(p, i), aqi = A.at(q, i);
          A.at(p, i) = c * api - s * aqi;
          A.at(q, i) = s * api + c * aqi;
        }
      }
    }
  }
  Vec eig(n);
  for (int i = 0; i < n; ++i) eig[i] = A.at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double min_eigenvalue_symmetric_part(const Matrix& A) {
  Matrix S(A.n);
  for (int r = 0; r < A.n; ++r)
    for (int c = 0; c < A.n; ++c) S.at(r, c) = 0.5 * (A.at(r, c) + A.at(c, r));
  return symmetric_eigenvalues(std::move(S)).front();
}

}  // namespace elicit::linalg
