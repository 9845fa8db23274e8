#pragma once

#include <cstddef>
#include <vector>

#include "coopinf/matrix.hpp"

namespace coopinf {

// One all-ones vector block of the witness, in original indices; a row
// vector (single row) or a column vector (single column).
struct WitnessBlock {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

struct StableWitness {
  Matrix a;  // binary, pattern contained in the input's
  Matrix p;  // row_normalize(a)
  Matrix q;  // col_normalize(a)
  // Permutations (position -> original index) that bring a into
  // block-diagonal form, blocks listed in the same order.
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
  std::vector<WitnessBlock> blocks;
};

// Inductive construction of a binary block-diagonal witness whose row and
// column normalizations form an exactly stable pair. Existence is
// guaranteed for every valid input.
StableWitness construct_stable_witness(const Matrix& m);

}  // namespace coopinf
