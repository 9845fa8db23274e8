#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "coopinf/matrix.hpp"

namespace coopinf {

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

// Augmenting-path maximum matching on the bipartite graph rows <-> cols
// with an edge wherever the pattern is set. Returns match[i] = column
// matched to row i, or kUnmatched.
std::vector<std::size_t> max_bipartite_matching(const Pattern& p);

// True when a matching saturates every row and every column (square only).
bool has_perfect_matching(const Pattern& p);

// Component ids (0-based, arbitrary order) of the strongly connected
// components of the digraph on rows with an edge i -> k whenever
// p(i, match[k]) is set. `match` must be a perfect matching of p.
std::vector<std::size_t> matching_component_ids(const Pattern& p,
                                                const std::vector<std::size_t>& match);

// Perfect matching of the positive entries of m maximizing the minimum
// matched entry. Empty vector when no perfect matching exists.
std::vector<std::size_t> bottleneck_perfect_matching(const Matrix& m);

}  // namespace coopinf
