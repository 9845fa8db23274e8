#include "coopinf/cooperative.hpp"

#include <cmath>

#include "coopinf/matching.hpp"
#include "coopinf/pattern.hpp"

namespace coopinf {

double ci_of_pair(const StablePair& pair) {
  double s = 0.0;
  for (std::size_t k = 0; k < pair.L.data().size(); ++k)
    s += pair.L.data()[k] * pair.T.data()[k];
  return s / static_cast<double>(pair.L.cols());
}

CIResult cooperative_index(const Matrix& m, const SinkhornOptions& opts) {
  auto res = sinkhorn(m, opts);
  return {ci_of_pair(res.limit), !res.converged};
}

CIBounds ci_bounds(const Matrix& m, std::size_t diag_limit, const SinkhornOptions& opts) {
  validate_joint(m);
  if (!m.square()) throw NotSquare("ci_bounds needs a square matrix");
  if (!has_positive_diagonal(m)) throw NoPositiveDiagonal("no positive diagonal");

  CIBounds out;
  out.n = m.rows();
  auto ci = cooperative_index(m, opts);
  out.ci = ci.ci;
  out.low_confidence = ci.low_confidence;
  out.bound_uniform = 1.0 / static_cast<double>(out.n);

  for (double v : m.data())
    if (v > 0.0) ++out.eta;
  out.tau = count_indecomposable_components(m);

  Matrix mbar = apply_max_pattern(m);
  out.eta_bar = 0;
  for (double v : mbar.data())
    if (v > 0.0) ++out.eta_bar;
  out.tau_bar = count_indecomposable_components(mbar);

  out.bound_structural =
      1.0 / static_cast<double>(out.eta - 2 * out.n + out.tau + 1);

  try {
    auto ds = enumerate_diagonals(m, diag_limit);
    out.d = ds.diagonals.size();
    out.bound_diagonals = 1.0 / static_cast<double>(*out.d);
  } catch (const LimitExceeded&) {
    // diagonal bound skipped; the structural bound stands in
  }
  return out;
}

BvNDecomposition bvn_decompose(const Matrix& dsm, double ds_tol, double residual_tol) {
  if (!dsm.square()) throw NotSquare("bvn_decompose needs a square matrix");
  const std::size_t n = dsm.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(dsm.row_sum(i) - 1.0) > ds_tol || std::abs(dsm.col_sum(i) - 1.0) > ds_tol)
      throw NotDoublyStochastic("row/column sums not 1");
  for (double v : dsm.data())
    if (v < -ds_tol) throw NotDoublyStochastic("negative entry");

  // Brualdi: a doubly stochastic matrix has a BvN decomposition with at
  // most eta + tau - 2n + 1 terms; used as the loop guard.
  std::size_t eta = 0;
  for (double v : dsm.data())
    if (v > 0.0) ++eta;
  const std::size_t max_terms = eta + count_indecomposable_components(dsm) - 2 * n + 1;

  BvNDecomposition dec;
  Matrix residual = dsm;
  while (true) {
    double max_entry = 0.0;
    for (double v : residual.data()) max_entry = std::max(max_entry, v);
    if (max_entry <= residual_tol) break;
    if (dec.terms.size() >= max_terms)
      throw Error("BvN term count exceeded the Brualdi bound");
    auto match = bottleneck_perfect_matching(residual);
    if (match.empty()) throw NoPerfectMatching("residual support lost its perfect matching");
    double theta = residual(0, match[0]);
    for (std::size_t i = 1; i < n; ++i) theta = std::min(theta, residual(i, match[i]));
    // theta equals the bottleneck entry, so at least one matched entry
    // lands on exact zero per term.
    for (std::size_t i = 0; i < n; ++i) {
      double& v = residual(i, match[i]);
      v = std::max(0.0, v - theta);
    }
    dec.terms.push_back({theta, std::move(match)});
  }
  return dec;
}

Matrix bvn_reconstruct(const BvNDecomposition& dec, std::size_t n) {
  Matrix out(n, n);
  for (const auto& term : dec.terms)
    for (std::size_t i = 0; i < n; ++i) out(i, term.perm[i]) += term.theta;
  return out;
}

}  // namespace coopinf
