#include "elicit/simplex.hpp"

#include <cmath>
#include <utility>

namespace elicit {
namespace {

constexpr double kEps = 1e-9;

// Dense tableau simplex with the classic lexicographic-ish pivot choice;
// phase 1 drives an artificial variable out of the basis.
struct Tableau {
  int m, n;
  std::vector<int> N, B;
  std::vector<Vec> D;

  Tableau(const std::vector<Vec>& A, const Vec& b, const Vec& c)
      : m(static_cast<int>(b.size())),
        n(static_cast<int>(c.size())),
        N(n + 1),
        B(m),
        D(m + 2, Vec(n + 2, 0.0)) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) D[i][j] = A[i][j];
    }
    for (int i = 0; i < m; ++i) {
      B[i] = n + i;
      D[i][n] = -1.0;
      D[i][n + 1] = b[i];
    }
    for (int j = 0; j < n; ++j) {
      N[j] = j;
      D[m][j] = -c[j];
    }
    N[n] = -1;
    D[m + 1][n] = 1.0;
  }

  void pivot(int r, int s) {
    Vec& a = D[r];
    const double inv = 1.0 / a[s];
    for (int i = 0; i < m + 2; ++i) {
      if (i != r && std::fabs(D[i][s]) > kEps) {
        const double binv = D[i][s] * inv;
        for (int j = 0; j < n + 2; ++j) D[i][j] -= binv * a[j];
        D[i][s] = a[s] * binv;
      }
    }
    for (int j = 0; j < n + 2; ++j) {
      if (j != s) D[r][j] *= inv;
    }
    for (int i = 0; i < m + 2; ++i) {
      if (i != r) D[i][s] *= -inv;
    }
    D[r][s] = inv;
    std::swap(B[r], N[s]);
  }

  bool run(int phase) {
    const int x = m + phase - 1;
    while (true) {
      int s = -1;
      for (int j = 0; j <= n; ++j) {
        if (N[j] == -phase) continue;
        if (s == -1 || std::pair(D[x][j], N[j]) < std::pair(D[x][s], N[s])) {
          s = j;
        }
      }
      if (D[x][s] >= -kEps) return true;
      int r = -1;
      for (int i = 0; i < m; ++i) {
        if (D[i][s] <= kEps) continue;
        if (r == -1 || std::pair(D[i][n + 1] / D[i][s], B[i]) <
                           std::pair(D[r][n + 1] / D[r][s], B[r])) {
          r = i;
        }
      }
      if (r == -1) return false;  // unbounded
      pivot(r, s);
    }
  }
};

}  // namespace

SimplexResult simplex_max(const std::vector<Vec>& A, const Vec& b,
                          const Vec& c) {
  SimplexResult res;
  Tableau t(A, b, c);
  int r = 0;
  for (int i = 1; i < t.m; ++i) {
    if (t.D[i][t.n + 1] < t.D[r][t.n + 1]) r = i;
  }
  if (t.m > 0 && t.D[r][t.n + 1] < -kEps) {
    t.pivot(r, t.n);
    if (!t.run(2) || t.D[t.m + 1][t.n + 1] < -kEps) {
      res.status = SimplexResult::Status::Infeasible;
      return res;
    }
    for (int i = 0; i < t.m; ++i) {
      if (t.B[i] == -1) {
        int s = 0;
        for (int j = 1; j <= t.n; ++j) {
          if (s == -1 || std::pair(t.D[i][j], t.N[j]) <
                             std::pair(t.D[i][s], t.N[s])) {
            s = j;
          }
        }
        t.pivot(i, s);
      }
    }
  }
  const bool bounded = t.run(1);
  res.x.assign(t.n, 0.0);
  for (int i = 0; i < t.m; ++i) {
    if (t.B[i] < t.n) res.x[t.B[i]] = t.D[i][t.n + 1];
  }
  if (!bounded) {
    res.status = SimplexResult::Status::Unbounded;
    res.value = kInf;
    return res;
  }
  res.status = SimplexResult::Status::Optimal;
  res.value = t.D[t.m][t.n + 1];
  return res;
}

SimplexResult simplex_max_free(const std::vector<Vec>& rows, const Vec& bounds,
                               const Vec& c) {
  const int k = static_cast<int>(c.size());
  std::vector<Vec> A(rows.size(), Vec(2 * k, 0.0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < k; ++j) {
      A[i][j] = rows[i][j];
      A[i][k + j] = -rows[i][j];
    }
  }
  Vec cc(2 * k, 0.0);
  for (int j = 0; j < k; ++j) {
    cc[j] = c[j];
    cc[k + j] = -c[j];
  }
  SimplexResult res = simplex_max(A, bounds, cc);
  if (res.status != SimplexResult::Status::Infeasible) {
    Vec z(k, 0.0);
    if (static_cast<int>(res.x.size()) == 2 * k) {
      for (int j = 0; j < k; ++j) z[j] = res.x[j] - res.x[k + j];
    }
    res.x = std::move(z);
  }
  return res;
}

}  // namespace elicit
