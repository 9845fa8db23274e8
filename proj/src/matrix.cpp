#include "coopinf/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace coopinf {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged initializer list");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

double Matrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
  return s;
}

double Matrix::col_sum(std::size_t j) const {
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Pattern Pattern::of(const Matrix& m) {
  Pattern p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p.set(i, j, m(i, j) > 0.0);
  return p;
}

std::size_t Pattern::count() const {
  return static_cast<std::size_t>(std::accumulate(mask_.begin(), mask_.end(), std::size_t{0}));
}

bool Pattern::subset_of(const Pattern& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("pattern dimension mismatch");
  for (std::size_t k = 0; k < mask_.size(); ++k)
    if (mask_[k] && !other.mask_[k]) return false;
  return true;
}

void validate_joint(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("empty matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v)) throw NegativeEntry("non-finite entry");
      if (v < 0.0) throw NegativeEntry("negative entry");
    }
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row_sum(i) == 0.0) throw ZeroRow("zero row " + std::to_string(i));
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.col_sum(j) == 0.0) throw ZeroColumn("zero column " + std::to_string(j));
}

Matrix row_normalize(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double s = m.row_sum(i);
    if (s == 0.0) throw ZeroRow("zero row " + std::to_string(i));
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) / s;
  }
  return out;
}

Matrix col_normalize(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const double s = m.col_sum(j);
    if (s == 0.0) throw ZeroColumn("zero column " + std::to_string(j));
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, j) / s;
  }
  return out;
}

double matrix_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix_distance on different dimensions");
  double d = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  return d;
}

}  // namespace coopinf
