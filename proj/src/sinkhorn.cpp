#include "coopinf/sinkhorn.hpp"

#include <cmath>
#include <numeric>
#include <queue>

#include "coopinf/pattern.hpp"

namespace coopinf {

SinkhornResult sinkhorn(const Matrix& m, const SinkhornOptions& opts) {
  validate_joint(m);
  if (opts.tol <= 0.0) throw Error("tolerance must be positive");
  // iterations = smallest k with d(L^k, L^{k+1}) <= tol; the returned limit
  // is the later iterate L^{k+1}.
  SinkhornResult res;
  Matrix L = row_normalize(m);
  for (std::size_t k = 1;; ++k) {
    Matrix next = row_normalize(col_normalize(L));
    res.residual = matrix_distance(next, L);
    L = std::move(next);
    if (opts.keep_history) res.history.push_back(res.residual);
    res.iterations = k;
    if (res.residual <= opts.tol || k >= opts.max_iters) break;
  }
  res.converged = res.residual <= opts.tol;
  res.limit.T = col_normalize(L);
  res.limit.L = std::move(L);
  return res;
}

StablePair sinkhorn_sweeps(const Matrix& m, std::size_t k) {
  validate_joint(m);
  if (k == 0) throw Error("need at least one sweep");
  Matrix L = row_normalize(m);
  for (std::size_t s = 1; s < k; ++s) L = row_normalize(col_normalize(L));
  return {L, col_normalize(L)};
}

SinkhornResult sinkhorn_on_pattern(const Matrix& m, const SinkhornOptions& opts) {
  return sinkhorn(apply_max_pattern(m), opts);
}

ScalingFactors extract_scaling(const Matrix& m, const Matrix& limit, double tol) {
  validate_joint(m);
  if (!m.square()) throw NotSquare("extract_scaling needs a square matrix");
  if (m.rows() != limit.rows() || m.cols() != limit.cols())
    throw DimensionMismatch("limit dimensions differ from m");
  // For a total-support m the limit shares its pattern; a mismatch means
  // off-diagonal entries were present.
  if (Pattern::of(m) != Pattern::of(limit))
    throw NoTotalSupport("extract_scaling needs total support");

  const std::size_t n = m.rows();
  std::vector<double> x(n, 0.0), y(n, 0.0);
  std::vector<char> row_done(n, 0), col_done(n, 0);

  // Propagate over the bipartite support graph, one connected block at a
  // time, anchoring the largest unassigned column at y = 1.
  for (std::size_t anchor = n; anchor-- > 0;) {
    if (col_done[anchor]) continue;
    y[anchor] = 1.0;
    col_done[anchor] = 1;
    std::queue<std::pair<bool, std::size_t>> bfs;  // (is_row, index)
    bfs.emplace(false, anchor);
    while (!bfs.empty()) {
      auto [is_row, idx] = bfs.front();
      bfs.pop();
      if (is_row) {
        for (std::size_t j = 0; j < n; ++j)
          if (m(idx, j) > 0.0 && !col_done[j]) {
            y[j] = m(idx, j) / (x[idx] * limit(idx, j));
            col_done[j] = 1;
            bfs.emplace(false, j);
          }
      } else {
        for (std::size_t i = 0; i < n; ++i)
          if (m(i, idx) > 0.0 && !row_done[i]) {
            x[i] = m(i, idx) / (limit(i, idx) * y[idx]);
            row_done[i] = 1;
            bfs.emplace(true, i);
          }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) > 0.0) {
        const double rec = x[i] * limit(i, j) * y[j];
        if (std::abs(rec - m(i, j)) > tol * std::max(1.0, std::abs(m(i, j))))
          throw InconsistentFactors("reconstruction residual above tolerance");
      }
  return {std::move(x), std::move(y)};
}

SinkhornResult scalar_sinkhorn(const Matrix& m, const std::vector<double>& r,
                               const std::vector<double>& c, const SinkhornOptions& opts) {
  validate_joint(m);
  if (r.size() != m.rows() || c.size() != m.cols())
    throw DimensionMismatch("marginal lengths must match matrix dimensions");
  for (double v : r)
    if (v <= 0.0) throw Error("row marginals must be positive");
  for (double v : c)
    if (v <= 0.0) throw Error("column marginals must be positive");
  const double mass_r = std::accumulate(r.begin(), r.end(), 0.0);
  const double mass_c = std::accumulate(c.begin(), c.end(), 0.0);
  if (std::abs(mass_r - mass_c) > kNormTol * std::max(1.0, mass_r))
    throw MassImbalance("sum of row and column marginals differ");

  auto scale_rows = [&](const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const double s = a.row_sum(i);
      if (s == 0.0) throw ZeroRow("zero row " + std::to_string(i));
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * r[i] / s;
    }
    return out;
  };
  auto scale_cols = [&](const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double s = a.col_sum(j);
      if (s == 0.0) throw ZeroColumn("zero column " + std::to_string(j));
      for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j) * c[j] / s;
    }
    return out;
  };

  SinkhornResult res;
  Matrix L = scale_rows(m);
  for (std::size_t k = 1;; ++k) {
    Matrix next = scale_rows(scale_cols(L));
    res.residual = matrix_distance(next, L);
    L = std::move(next);
    if (opts.keep_history) res.history.push_back(res.residual);
    res.iterations = k;
    if (res.residual <= opts.tol || k >= opts.max_iters) break;
  }
  res.converged = res.residual <= opts.tol;
  res.limit.T = scale_cols(L);
  res.limit.L = std::move(L);
  return res;
}

Matrix entropic_kernel(const Matrix& cost, double lambda) {
  if (lambda <= 0.0) throw Error("lambda must be positive");
  Matrix m(cost.rows(), cost.cols());
  for (std::size_t i = 0; i < cost.rows(); ++i)
    for (std::size_t j = 0; j < cost.cols(); ++j) {
      const double c = cost(i, j);
      if (std::isnan(c)) throw ParseError("NaN cost entry");
      m(i, j) = std::isinf(c) ? 0.0 : std::exp(-lambda * c);
    }
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.row_sum(i) == 0.0) throw AllForbiddenRow("row " + std::to_string(i) + " all forbidden");
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.col_sum(j) == 0.0)
      throw AllForbiddenColumn("column " + std::to_string(j) + " all forbidden");
  return m;
}

bool verify_stable(const Matrix& p, const Matrix& q, double tol) {
  if (p.rows() != q.rows() || p.cols() != q.cols())
    throw DimensionMismatch("stable pair dimensions differ");
  if (Pattern::of(p) != Pattern::of(q)) return false;
  return matrix_distance(col_normalize(p), q) <= tol &&
         matrix_distance(row_normalize(q), p) <= tol;
}

}  // namespace coopinf
