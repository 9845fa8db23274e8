#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coopinf/matrix.hpp"

namespace coopinf {

// Mutual fixed point of row/column normalization: col_normalize(L) = T and
// row_normalize(T) = L, with equal patterns.
struct StablePair {
  Matrix L;  // row normalized
  Matrix T;  // column normalized
};

struct SinkhornResult {
  StablePair limit;
  std::size_t iterations = 0;  // completed row+column sweeps
  double residual = 0.0;       // d(L^k, L^{k-1}) at stop
  bool converged = true;       // false when max_iters hit first
  std::vector<double> history;  // per-sweep residuals when requested
};

struct SinkhornOptions {
  double tol = kDefaultTol;
  std::size_t max_iters = kDefaultMaxIters;
  bool keep_history = false;
};

// Alternating row/column normalization from m (row first). Stops when the
// successive L-iterate distance drops to tol. MaxIters is reported via the
// converged flag, not an exception: the limit always exists, reaching it
// slowly is a diagnostic.
SinkhornResult sinkhorn(const Matrix& m, const SinkhornOptions& opts = {});

// Exactly k sweeps, no stopping test. Returns (L^k, T^k).
StablePair sinkhorn_sweeps(const Matrix& m, std::size_t k);

// Zeroes the entries outside the maximum partial pattern first, then runs
// sinkhorn on the result. Same limit, linear convergence.
SinkhornResult sinkhorn_on_pattern(const Matrix& m, const SinkhornOptions& opts = {});

// Diagonal factors with m(i,j) = x[i] * limit(i,j) * y[j] on the support,
// y normalized to 1 at the largest column index of each connected block.
// limit must be the sinkhorn limit of a total-support square m.
struct ScalingFactors {
  std::vector<double> x;
  std::vector<double> y;
};
ScalingFactors extract_scaling(const Matrix& m, const Matrix& limit,
                               double tol = 1e-6);

// Scalar Sinkhorn: scale rows to sums r and columns to sums c. May fail to
// converge on sparse patterns; reported via the converged flag.
SinkhornResult scalar_sinkhorn(const Matrix& m, const std::vector<double>& r,
                               const std::vector<double>& c,
                               const SinkhornOptions& opts = {});

// Entropic OT kernel exp(-lambda * cost); +inf cost entries map to exact 0.
Matrix entropic_kernel(const Matrix& cost, double lambda);

// Def-5 check: mutual normalization within tol and matching patterns.
bool verify_stable(const Matrix& p, const Matrix& q, double tol);

}  // namespace coopinf
