#pragma once

#include <cstddef>
#include <vector>

#include "coopinf/matrix.hpp"

namespace coopinf {

// One positive diagonal: a permutation sigma with sigma[i] = column picked
// in row i, the product of the picked entries, and its logarithm (products
// of many entries under/overflow; ratios are formed from the logs).
struct Diagonal {
  std::vector<std::size_t> sigma;
  double product = 0.0;
  double log_product = 0.0;
};

struct DiagonalSet {
  std::size_t n = 0;
  std::vector<Diagonal> diagonals;  // lexicographic by sigma
};

struct SupportClassification {
  Pattern on_diagonal;          // entries contained in >= 1 positive diagonal
  Pattern off_diagonal;         // positive entries in no positive diagonal
  Pattern max_partial_pattern;  // support of M-bar (== on_diagonal for squares)
};

// True iff the positivity bipartite graph has a perfect matching.
bool has_positive_diagonal(const Matrix& m);

// On/off-diagonal split of the support. Square matrices use the exact
// matching + strongly-connected-component decomposition; rectangular ones
// detect the limit support numerically (see rectangular_max_pattern).
SupportClassification classify_support(const Matrix& m);

// M-bar: entries outside the maximum partial pattern zeroed.
Matrix apply_max_pattern(const Matrix& m);

// Exhaustive positive-diagonal enumeration, lexicographic by sigma.
// Throws LimitExceeded when more than `limit` diagonals exist.
DiagonalSet enumerate_diagonals(const Matrix& m, std::size_t limit = 1000000);

// Number of fully indecomposable blocks of the square m, computed on the
// support of the given matrix (callers pass M or M-bar as appropriate).
std::size_t count_indecomposable_components(const Matrix& m);

// Limit-support detection for rectangular matrices: Sinkhorn iterates with
// a decay-ratio test on the entries, verified by re-running on the candidate
// pattern and checking stability. Exposed for cross-validation tests.
Pattern rectangular_max_pattern(const Matrix& m);

}  // namespace coopinf
