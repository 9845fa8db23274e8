#include "coopinf/pattern.hpp"

#include <cmath>

#include "coopinf/matching.hpp"
#include "coopinf/sinkhorn.hpp"

namespace coopinf {

namespace {

Pattern difference(const Pattern& a, const Pattern& b) {
  Pattern out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) && !b.at(i, j));
  return out;
}

// On-diagonal entries of a square support: (i, match[k]) lies in some
// perfect matching iff rows i and k share a strongly connected component
// of the matching digraph.
Pattern square_on_diagonal(const Pattern& p) {
  const std::size_t n = p.rows();
  Pattern on(n, n);
  auto match = max_bipartite_matching(p);
  for (std::size_t i = 0; i < n; ++i)
    if (match[i] == kUnmatched) return on;  // no positive diagonal at all
  auto comp = matching_component_ids(p, match);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (p.at(i, match[k]) && comp[i] == comp[k]) on.set(i, match[k], true);
  return on;
}

void enumerate_rec(const Matrix& m, std::size_t row, std::vector<std::size_t>& sigma,
                   std::vector<char>& used, double log_acc, std::size_t limit,
                   DiagonalSet& out) {
  const std::size_t n = m.rows();
  if (row == n) {
    if (out.diagonals.size() >= limit)
      throw LimitExceeded("diagonal enumeration limit hit", out.diagonals.size());
    Diagonal d;
    d.sigma = sigma;
    d.log_product = log_acc;
    d.product = std::exp(log_acc);
    out.diagonals.push_back(std::move(d));
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j] || m(row, j) <= 0.0) continue;
    used[j] = 1;
    sigma.push_back(j);
    enumerate_rec(m, row + 1, sigma, used, log_acc + std::log(m(row, j)), limit, out);
    sigma.pop_back();
    used[j] = 0;
  }
}

}  // namespace

bool has_positive_diagonal(const Matrix& m) {
  validate_joint(m);
  if (!m.square()) throw NotSquare("has_positive_diagonal needs a square matrix");
  return has_perfect_matching(Pattern::of(m));
}

Pattern rectangular_max_pattern(const Matrix& m) {
  validate_joint(m);
  // Entries outside the limit support decay like 1/k under SK iteration, so
  // a fixed threshold on the iterate is unreliable at any practical sweep
  // count. Instead: classify an entry as dying when it keeps shrinking
  // between sweep k and sweep 2k, then verify the candidate by running SK
  // on it (linear convergence) and checking the stable-pair law.
  auto pair = sinkhorn_sweeps(m, 64);
  Matrix prev = pair.L;
  std::size_t sweeps = 64;
  for (int round = 0; round < 16; ++round) {
    Matrix cur = prev;
    for (std::size_t s = 0; s < sweeps; ++s) cur = row_normalize(col_normalize(cur));
    sweeps *= 2;

    Pattern candidate(m.rows(), m.cols());
    double max_dropped = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const double a = prev(i, j), b = cur(i, j);
        const bool dying = b <= 1e-13 || b <= 0.75 * a + 1e-15;
        if (m(i, j) > 0.0 && !dying)
          candidate.set(i, j, true);
        else
          max_dropped = std::max(max_dropped, b);
      }
    prev = cur;

    Matrix mbar(m.rows(), m.cols());
    bool ok = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (candidate.at(i, j)) mbar(i, j) = m(i, j);
    for (std::size_t i = 0; i < m.rows() && ok; ++i) ok = mbar.row_sum(i) > 0.0;
    for (std::size_t j = 0; j < m.cols() && ok; ++j) ok = mbar.col_sum(j) > 0.0;
    if (!ok) continue;

    SinkhornOptions opts;
    opts.tol = 1e-12;
    opts.max_iters = 20000;
    auto res = sinkhorn(mbar, opts);
    if (!res.converged) continue;
    if (Pattern::of(res.limit.L) != candidate) continue;
    if (!verify_stable(res.limit.L, res.limit.T, 1e-9)) continue;
    // Guard against dropping a live entry: the candidate limit must agree
    // with the current iterate up to the mass still draining away.
    if (matrix_distance(res.limit.L, cur) > 3.0 * max_dropped + 1e-6) continue;
    return candidate;
  }
  throw Error("maximum partial pattern detection did not stabilize");
}

SupportClassification classify_support(const Matrix& m) {
  validate_joint(m);
  const Pattern p = Pattern::of(m);
  SupportClassification sc;
  if (m.square()) {
    sc.on_diagonal = square_on_diagonal(p);
    sc.max_partial_pattern = sc.on_diagonal;
  } else {
    sc.max_partial_pattern = rectangular_max_pattern(m);
    sc.on_diagonal = sc.max_partial_pattern;
  }
  sc.off_diagonal = difference(p, sc.on_diagonal);
  return sc;
}

Matrix apply_max_pattern(const Matrix& m) {
  auto sc = classify_support(m);
  if (sc.max_partial_pattern.count() == 0)
    throw NoPositiveDiagonal("matrix has no positive diagonal");
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sc.max_partial_pattern.at(i, j)) out(i, j) = m(i, j);
  return out;
}

DiagonalSet enumerate_diagonals(const Matrix& m, std::size_t limit) {
  validate_joint(m);
  if (!m.square()) throw NotSquare("enumerate_diagonals needs a square matrix");
  DiagonalSet out;
  out.n = m.rows();
  std::vector<std::size_t> sigma;
  sigma.reserve(m.rows());
  std::vector<char> used(m.cols(), 0);
  enumerate_rec(m, 0, sigma, used, 0.0, limit, out);
  return out;
}

std::size_t count_indecomposable_components(const Matrix& m) {
  validate_joint(m);
  if (!m.square()) throw NotSquare("count_indecomposable_components needs a square matrix");
  const Pattern p = Pattern::of(m);
  auto match = max_bipartite_matching(p);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (match[i] == kUnmatched)
      throw NoPositiveDiagonal("matrix has no positive diagonal");
  auto comp = matching_component_ids(p, match);
  std::size_t ncomp = 0;
  for (std::size_t c : comp) ncomp = std::max(ncomp, c + 1);
  return ncomp;
}

}  // namespace coopinf
