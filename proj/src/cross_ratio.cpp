#include "coopinf/cross_ratio.hpp"

#include <cmath>

namespace coopinf {

CrossRatioProfile cross_ratio_profile(const Matrix& m, std::size_t diag_limit) {
  if (!m.square()) throw NotSquare("cross ratios are defined for square matrices");
  auto ds = enumerate_diagonals(m, diag_limit);
  if (ds.diagonals.empty()) throw NoPositiveDiagonal("no positive diagonal");

  CrossRatioProfile prof;
  prof.base_sigma = ds.diagonals.front().sigma;
  prof.pattern = Pattern(m.rows(), m.cols());
  const double log_base = ds.diagonals.front().log_product;
  prof.ratios.reserve(ds.diagonals.size());
  for (const auto& d : ds.diagonals) {
    prof.ratios.push_back(std::exp(log_base - d.log_product));
    for (std::size_t i = 0; i < d.sigma.size(); ++i) prof.pattern.set(i, d.sigma[i], true);
  }
  prof.diagonals = std::move(ds.diagonals);
  return prof;
}

bool cr_equivalent(const Matrix& a, const Matrix& b, double rel_tol, std::size_t diag_limit) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("cr_equivalent on different dimensions");
  auto pa = cross_ratio_profile(a, diag_limit);
  auto pb = cross_ratio_profile(b, diag_limit);
  // Equal diagonal sets <=> d_i^A != 0 <=> d_i^B != 0; both lists are
  // lexicographic so positional comparison suffices.
  if (pa.diagonals.size() != pb.diagonals.size()) return false;
  for (std::size_t k = 0; k < pa.diagonals.size(); ++k) {
    if (pa.diagonals[k].sigma != pb.diagonals[k].sigma) return false;
    const double la = pa.diagonals.front().log_product - pa.diagonals[k].log_product;
    const double lb = pb.diagonals.front().log_product - pb.diagonals[k].log_product;
    if (std::abs(la - lb) > rel_tol) return false;
  }
  return true;
}

Matrix preimage_member(const Matrix& l, const std::vector<double>& x,
                       const std::vector<double>& y, double ds_tol) {
  if (!l.square()) throw NotSquare("preimage_member needs a square matrix");
  const std::size_t n = l.rows();
  if (x.size() != n || y.size() != n)
    throw DimensionMismatch("scaling vector lengths must match the matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] <= 0.0 || y[i] <= 0.0) throw Error("scaling factors must be positive");
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(l.row_sum(i) - 1.0) > ds_tol || std::abs(l.col_sum(i) - 1.0) > ds_tol)
      throw NotDoublyStochastic("l is not doubly stochastic");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x[i] * l(i, j) * y[j];
  return m;
}

PreimageDistance verify_preimage_distance(const Matrix& l1, const Matrix& l2,
                                          const Matrix& m1, const SinkhornOptions& opts,
                                          double slack) {
  if (l1.rows() != l2.rows() || l1.cols() != l2.cols() || l1.rows() != m1.rows() ||
      l1.cols() != m1.cols())
    throw DimensionMismatch("verify_preimage_distance dimensions differ");
  auto res = sinkhorn(m1, opts);
  if (matrix_distance(res.limit.L, l1) > 10.0 * opts.tol + 1e-8)
    throw LimitMismatch("m1 does not map to l1 under SK iteration");

  auto factors = extract_scaling(m1, l1);
  PreimageDistance out;
  out.m2 = Matrix(l2.rows(), l2.cols());
  for (std::size_t i = 0; i < l2.rows(); ++i)
    for (std::size_t j = 0; j < l2.cols(); ++j) {
      out.m2(i, j) = factors.x[i] * l2(i, j) * factors.y[j];
      out.c = std::max(out.c, factors.x[i] * factors.y[j]);
    }
  if (matrix_distance(m1, out.m2) > out.c * matrix_distance(l1, l2) + slack)
    throw Error("preimage distance bound violated");
  return out;
}

}  // namespace coopinf
