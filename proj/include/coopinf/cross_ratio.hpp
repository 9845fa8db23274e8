#pragma once

#include <cstddef>
#include <vector>

#include "coopinf/matrix.hpp"
#include "coopinf/pattern.hpp"
#include "coopinf/sinkhorn.hpp"

namespace coopinf {

// Cross ratios d_base / d_i over all positive diagonals, anchored at the
// lexicographically smallest one. Ratios are formed from log products.
struct CrossRatioProfile {
  std::vector<std::size_t> base_sigma;
  std::vector<Diagonal> diagonals;  // lexicographic by sigma
  std::vector<double> ratios;       // aligned with diagonals; ratios[0] = 1
  Pattern pattern;                  // union of the positive diagonals (= M-bar)
};

CrossRatioProfile cross_ratio_profile(const Matrix& m, std::size_t diag_limit = 1000000);

// Same positive-diagonal set and matching cross ratios within rel_tol
// (compared in log space).
bool cr_equivalent(const Matrix& a, const Matrix& b, double rel_tol = 1e-6,
                   std::size_t diag_limit = 1000000);

// m(i,j) = x[i] * l(i,j) * y[j]; a member of the Sinkhorn preimage of l.
Matrix preimage_member(const Matrix& l, const std::vector<double>& x,
                       const std::vector<double>& y, double ds_tol = 1e-8);

struct PreimageDistance {
  Matrix m2;       // X * l2 * Y with (X, Y) extracted from m1 = X * l1 * Y
  double c = 0.0;  // max_ij x_i * y_j
};

// Builds the nearby preimage member of l2 and checks
// d(m1, m2) <= c * d(l1, l2) + slack.
PreimageDistance verify_preimage_distance(const Matrix& l1, const Matrix& l2,
                                          const Matrix& m1,
                                          const SinkhornOptions& opts = {},
                                          double slack = 1e-6);

}  // namespace coopinf
