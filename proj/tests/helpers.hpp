#pragma once

// Shared test utilities. Oracles here are deliberately independent of the
// library internals: brute-force enumeration and plain loops only.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "coopinf/matrix.hpp"

namespace testutil {

using coopinf::Matrix;

// Random valid joint matrix: dimensions up to maxdim, mixed sparsity,
// entries in [0.1, 1], no zero row or column.
inline Matrix rand_valid(std::mt19937& rng, std::size_t maxdim = 8) {
  std::uniform_int_distribution<std::size_t> dim(1, maxdim);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> entry(0.1, 1.0);
  const double densities[] = {1.0, 0.8, 0.6};
  for (;;) {
    const std::size_t u = dim(rng), v = dim(rng);
    const double dens = densities[rng() % 3];
    Matrix m(u, v);
    for (std::size_t i = 0; i < u; ++i)
      for (std::size_t j = 0; j < v; ++j)
        if (unit(rng) < dens) m(i, j) = entry(rng);
    bool ok = true;
    for (std::size_t i = 0; i < u && ok; ++i) ok = m.row_sum(i) > 0.0;
    for (std::size_t j = 0; j < v && ok; ++j) ok = m.col_sum(j) > 0.0;
    if (ok) return m;
  }
}

inline Matrix rand_square(std::mt19937& rng, std::size_t n, double dens = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> entry(0.1, 1.0);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (unit(rng) < dens) m(i, j) = entry(rng);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = m.row_sum(i) > 0.0;
    for (std::size_t j = 0; j < n && ok; ++j) ok = m.col_sum(j) > 0.0;
    if (ok) return m;
  }
}

// Brute-force positive diagonal enumeration over all n! permutations.
struct BruteDiagonal {
  std::vector<std::size_t> sigma;
  double product;
};

inline std::vector<BruteDiagonal> brute_diagonals(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BruteDiagonal> out;
  do {
    double prod = 1.0;
    bool positive = true;
    for (std::size_t i = 0; i < n && positive; ++i) {
      if (m(i, perm[i]) <= 0.0)
        positive = false;
      else
        prod *= m(i, perm[i]);
    }
    if (positive) out.push_back({perm, prod});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(),
            [](const BruteDiagonal& a, const BruteDiagonal& b) { return a.sigma < b.sigma; });
  return out;
}

// Connected components of the bipartite support graph. Returns component
// ids for rows and columns (same numbering).
struct BipartiteComponents {
  std::vector<std::size_t> row_comp;
  std::vector<std::size_t> col_comp;
  std::size_t count = 0;
};

inline BipartiteComponents support_components(const Matrix& m) {
  const std::size_t u = m.rows(), v = m.cols();
  BipartiteComponents bc;
  bc.row_comp.assign(u, SIZE_MAX);
  bc.col_comp.assign(v, SIZE_MAX);
  for (std::size_t start = 0; start < u; ++start) {
    if (bc.row_comp[start] != SIZE_MAX) continue;
    const std::size_t id = bc.count++;
    std::vector<std::size_t> stack = {start};
    bc.row_comp[start] = id;
    while (!stack.empty()) {
      // Encode rows as i, columns as u + j.
      const std::size_t node = stack.back();
      stack.pop_back();
      if (node < u) {
        for (std::size_t j = 0; j < v; ++j)
          if (m(node, j) > 0.0 && bc.col_comp[j] == SIZE_MAX) {
            bc.col_comp[j] = id;
            stack.push_back(u + j);
          }
      } else {
        const std::size_t j = node - u;
        for (std::size_t i = 0; i < u; ++i)
          if (m(i, j) > 0.0 && bc.row_comp[i] == SIZE_MAX) {
            bc.row_comp[i] = id;
            stack.push_back(i);
          }
      }
    }
  }
  return bc;
}

inline bool doubly_stochastic(const Matrix& m, double tol) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (std::abs(m.row_sum(i) - 1.0) > tol || std::abs(m.col_sum(i) - 1.0) > tol) return false;
  for (double v : m.data())
    if (v < 0.0) return false;
  return true;
}

// Richardson extrapolation of the SK iterate: off-pattern entries decay
// like c/k, so 2*L(2k) - L(k) cancels the leading term and lands within
// about 1e-9 of the true limit at k around 2^14.
inline Matrix extrapolated_limit(const Matrix& l_k, const Matrix& l_2k) {
  Matrix out(l_k.rows(), l_k.cols());
  for (std::size_t t = 0; t < out.data().size(); ++t)
    out.data()[t] = 2.0 * l_2k.data()[t] - l_k.data()[t];
  return out;
}

}  // namespace testutil
