#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coopinf/matrix.hpp"
#include "coopinf/sinkhorn.hpp"

namespace coopinf {

struct CIResult {
  double ci = 0.0;
  // Set when the underlying Sinkhorn run hit max_iters before tol.
  bool low_confidence = false;
};

// Convex combination of permutation matrices: sum theta_i * P(perm_i).
struct BvnTerm {
  double theta = 0.0;
  std::vector<std::size_t> perm;  // perm[i] = column with the 1 in row i
};
struct BvNDecomposition {
  std::vector<BvnTerm> terms;
};

struct CIBounds {
  double ci = 0.0;
  double bound_uniform = 0.0;                  // 1/n
  std::optional<double> bound_diagonals;       // 1/d, absent when enumeration capped
  double bound_structural = 0.0;               // 1/(eta - 2n + tau + 1)
  std::size_t n = 0;
  std::size_t eta = 0;   // positive entries of the input
  std::size_t tau = 0;   // indecomposable components of the input
  std::optional<std::size_t> d;
  // Counts on M-bar; tighter intermediate bound when they differ.
  std::size_t eta_bar = 0;
  std::size_t tau_bar = 0;
  bool low_confidence = false;
};

// CI(M) = (1/v) * sum_ij L_ij * T_ij over the Sinkhorn limit pair.
double ci_of_pair(const StablePair& pair);
CIResult cooperative_index(const Matrix& m, const SinkhornOptions& opts = {});

// Exact CI plus the three structural lower bounds for a square matrix.
CIBounds ci_bounds(const Matrix& m, std::size_t diag_limit = 1000000,
                   const SinkhornOptions& opts = {});

// Greedy Birkhoff decomposition using bottleneck perfect matchings.
// ds_tol: doubly-stochastic validation slack; residual_tol: stop threshold.
BvNDecomposition bvn_decompose(const Matrix& dsm, double ds_tol = 1e-8,
                               double residual_tol = 1e-9);

Matrix bvn_reconstruct(const BvNDecomposition& dec, std::size_t n);

}  // namespace coopinf
