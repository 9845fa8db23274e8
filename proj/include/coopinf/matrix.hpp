#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "coopinf/errors.hpp"

namespace coopinf {

// Numeric tolerances shared across the library.
inline constexpr double kNormTol = 1e-12;     // "sums to 1" assertions
inline constexpr double kSupportEps = 1e-9;   // numeric support threshold
inline constexpr double kDefaultTol = 1e-10;  // Sinkhorn stopping tolerance
inline constexpr std::size_t kDefaultMaxIters = 100000;

// Dense row-major matrix of doubles. Plain storage: invariants of the
// joint-distribution domain (non-negative, no zero row/column) are checked
// by validate_joint() at API boundaries, not by the container.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double row_sum(std::size_t i) const;
  double col_sum(std::size_t j) const;

  Matrix transposed() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Boolean support mask. An entry is in the pattern iff it is exactly
// positive; structural zeros must be literal 0.0.
class Pattern {
 public:
  Pattern() = default;
  Pattern(std::size_t rows, std::size_t cols, bool fill = false)
      : rows_(rows), cols_(cols), mask_(rows * cols, fill ? 1 : 0) {}

  static Pattern of(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool at(std::size_t i, std::size_t j) const { return mask_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { mask_[i * cols_ + j] = v ? 1 : 0; }

  std::size_t count() const;

  // True when every positive entry of this pattern is also in `other`.
  bool subset_of(const Pattern& other) const;

  bool operator==(const Pattern& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<unsigned char> mask_;
};

// Throws NegativeEntry / ZeroRow / ZeroColumn when m is not a valid joint
// distribution matrix (also rejects non-finite entries via NegativeEntry).
void validate_joint(const Matrix& m);

Matrix row_normalize(const Matrix& m);
Matrix col_normalize(const Matrix& m);

// Maximum element-wise difference; throws DimensionMismatch.
double matrix_distance(const Matrix& a, const Matrix& b);

}  // namespace coopinf
