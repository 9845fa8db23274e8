#include "coopinf/stable_witness.hpp"

#include <algorithm>

namespace coopinf {

namespace {

using IndexList = std::vector<std::size_t>;

bool is_row_block(const WitnessBlock& b) { return b.rows.size() == 1; }
bool is_col_block(const WitnessBlock& b) { return b.cols.size() == 1; }

// Peels the last column (or row, transposed roles) off the submatrix
// m[rows, cols] and recurses, following the inductive existence proof.
// Invariant: the submatrix has no zero rows or columns.
void build(const Matrix& m, IndexList rows, IndexList cols,
           std::vector<WitnessBlock>& blocks) {
  if (rows.size() == 1) {
    // Every column's only candidate entry sits in this row, so the whole
    // strip is positive: one row vector block.
    blocks.push_back({rows, cols});
    return;
  }
  if (cols.size() == 1) {
    blocks.push_back({rows, cols});
    return;
  }

  const bool peel_col = cols.size() > rows.size();
  // Square case peels a row; wlog handled by swapping roles below.
  if (peel_col) {
    const std::size_t c = cols.back();
    IndexList rest(cols.begin(), cols.end() - 1);

    IndexList starved;  // rows supported only by column c
    IndexList kept;
    for (std::size_t r : rows) {
      bool any = false;
      for (std::size_t cc : rest)
        if (m(r, cc) > 0.0) {
          any = true;
          break;
        }
      (any ? kept : starved).push_back(r);
    }

    if (starved.empty()) {
      build(m, rows, rest, blocks);
      std::size_t t = rows.size();
      for (std::size_t r : rows)
        if (m(r, c) > 0.0) {
          t = r;
          break;
        }
      auto it = std::find_if(blocks.begin(), blocks.end(), [&](const WitnessBlock& b) {
        return std::find(b.rows.begin(), b.rows.end(), t) != b.rows.end();
      });
      if (is_row_block(*it)) {
        it->cols.push_back(c);
      } else {
        it->rows.erase(std::find(it->rows.begin(), it->rows.end(), t));
        blocks.push_back({{t}, {c}});
      }
    } else {
      build(m, kept, rest, blocks);
      blocks.push_back({starved, {c}});
    }
  } else {
    const std::size_t r = rows.back();
    IndexList rest(rows.begin(), rows.end() - 1);

    IndexList starved;  // columns supported only by row r
    IndexList kept;
    for (std::size_t c : cols) {
      bool any = false;
      for (std::size_t rr : rest)
        if (m(rr, c) > 0.0) {
          any = true;
          break;
        }
      (any ? kept : starved).push_back(c);
    }

    if (starved.empty()) {
      build(m, rest, cols, blocks);
      std::size_t t = cols.size();
      for (std::size_t c : cols)
        if (m(r, c) > 0.0) {
          t = c;
          break;
        }
      auto it = std::find_if(blocks.begin(), blocks.end(), [&](const WitnessBlock& b) {
        return std::find(b.cols.begin(), b.cols.end(), t) != b.cols.end();
      });
      if (is_col_block(*it)) {
        it->rows.push_back(r);
      } else {
        it->cols.erase(std::find(it->cols.begin(), it->cols.end(), t));
        blocks.push_back({{r}, {t}});
      }
    } else {
      build(m, rest, kept, blocks);
      blocks.push_back({{r}, starved});
    }
  }
}

}  // namespace

StableWitness construct_stable_witness(const Matrix& m) {
  validate_joint(m);
  IndexList rows(m.rows()), cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = j;

  StableWitness w;
  build(m, std::move(rows), std::move(cols), w.blocks);

  w.a = Matrix(m.rows(), m.cols());
  for (const auto& b : w.blocks) {
    for (std::size_t r : b.rows)
      for (std::size_t c : b.cols) w.a(r, c) = 1.0;
    w.row_perm.insert(w.row_perm.end(), b.rows.begin(), b.rows.end());
    w.col_perm.insert(w.col_perm.end(), b.cols.begin(), b.cols.end());
  }
  w.p = row_normalize(w.a);
  w.q = col_normalize(w.a);
  return w;
}

}  // namespace coopinf
