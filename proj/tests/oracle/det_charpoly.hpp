#pragma once
// det(xI - L) by Bareiss determinants at x = 0..n and Lagrange
// interpolation. Shares nothing with the library's elimination.

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace oracle {

inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Ascending integer coefficients of det(xI - L).
inline std::vector<mpz_class> charpoly_by_interpolation(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<long>> lap(n, std::vector<long>(n, 0));
  for (auto [u, v] : edges) {
    ++lap[u][u];
    ++lap[v][v];
    --lap[u][v];
    --lap[v][u];
  }
  std::vector<mpq_class> values(n + 1);
  for (int x = 0; x <= n; ++x) {
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = (i == j ? x : 0) - lap[i][j];
    values[x] = bareiss_det(m);
  }
  // Lagrange basis polynomials at nodes 0..n, accumulated in ascending form.
  std::vector<mpq_class> coeffs(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * j;
      }
      basis = std::move(next);
      denom *= (i - j);
    }
    for (int d = 0; d <= n; ++d) coeffs[d] += values[i] * basis[d] / denom;
  }
  std::vector<mpz_class> out(n + 1);
  for (int d = 0; d <= n; ++d) {
    coeffs[d].canonicalize();
    out[d] = coeffs[d].get_num();
  }
  return out;
}

}  // namespace oracle
