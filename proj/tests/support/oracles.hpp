#pragma once

// Brute-force reference implementations for tests. None of these call into
// the library's algorithms beyond reading semiring tables.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dimzero/semiring.hpp"

namespace oracle {

using BoolMatrix = std::vector<std::vector<bool>>;

/// Relation composition: (AB)[i][j] = OR_k A[i][k] AND B[k][j].
inline BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b, std::size_t inner, std::size_t cols) {
  BoolMatrix c(a.size(), std::vector<bool>(cols, false));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k)
        if (a[i][k] && b[k][j]) c[i][j] = true;
  return c;
}

/// Straight transcription of the axiom list, returning only a verdict.
inline bool is_idempotent_semiring(const dimzero::Table& add, const dimzero::Table& mul, std::size_t zero,
                                   std::size_t one) {
  const std::size_t n = add.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (add[a][a] != a || add[zero][a] != a || add[a][zero] != a) return false;
    if (mul[one][a] != a || mul[a][one] != a) return false;
    if (mul[zero][a] != zero || mul[a][zero] != zero) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) return false;
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) return false;
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) return false;
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) return false;
      }
    }
  }
  return true;
}

/// Gaussian elimination with exact division; independent of Bareiss.
inline mpq_class gauss_determinant(std::vector<std::vector<mpq_class>> a) {
  const std::size_t m = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < m; ++r) {
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Permutation expansion; only for m ≤ 8.
inline mpq_class leibniz_determinant(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t m = a.size();
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpq_class term = (inversions % 2) ? -1 : 1;
    for (std::size_t i = 0; i < m; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Random 0/1 upper-triangular table with unit diagonal.
inline std::vector<std::vector<bool>> random_unit_upper(std::mt19937& rng, std::size_t m) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<bool>> b(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    b[i][i] = true;
    for (std::size_t j = i + 1; j < m; ++j) b[i][j] = coin(rng);
  }
  return b;
}

}  // namespace oracle
