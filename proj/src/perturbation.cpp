#include "coopinf/perturbation.hpp"

#include <algorithm>
#include <cmath>

#include "coopinf/cooperative.hpp"
#include "coopinf/pattern.hpp"

namespace coopinf {

const char* to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::OffDiagonal: return "off_diagonal";
    case PerturbationKind::OnDiagonal: return "on_diagonal";
    case PerturbationKind::NewDiagonal: return "new_diagonal";
  }
  return "unknown";
}

Matrix perturb(const Matrix& m, std::size_t i, std::size_t j, double eps) {
  validate_joint(m);
  if (i >= m.rows() || j >= m.cols()) throw DimensionMismatch("perturbation index out of range");
  if (m(i, j) + eps < 0.0) throw NegativeResult("perturbed entry would be negative");
  Matrix out = m;
  out(i, j) += eps;
  if (out.row_sum(i) == 0.0 || out.col_sum(j) == 0.0)
    throw DegenerateResult("perturbation created a zero row or column");
  return out;
}

PerturbationKind classify_perturbation(const Matrix& m, std::size_t i, std::size_t j,
                                       double eps, std::size_t diag_limit) {
  Matrix after = perturb(m, i, j, eps);
  if (m.square()) {
    auto before_ds = enumerate_diagonals(m, diag_limit);
    auto after_ds = enumerate_diagonals(after, diag_limit);
    auto sigmas = [](const DiagonalSet& ds) {
      std::vector<std::vector<std::size_t>> out;
      out.reserve(ds.diagonals.size());
      for (const auto& d : ds.diagonals) out.push_back(d.sigma);
      return out;
    };
    auto sb = sigmas(before_ds), sa = sigmas(after_ds);
    if (sa.size() > sb.size() && std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()))
      return PerturbationKind::NewDiagonal;
    if (sa == sb) {
      for (const auto& d : after_ds.diagonals)
        if (d.sigma[i] == j) return PerturbationKind::OnDiagonal;
      return PerturbationKind::OffDiagonal;
    }
    return PerturbationKind::OnDiagonal;  // diagonals removed (eps hit zero)
  }
  // Rectangular: membership in the maximum partial pattern stands in for
  // diagonal membership.
  Pattern pb = rectangular_max_pattern(m);
  Pattern pa = rectangular_max_pattern(after);
  if (pa.at(i, j) && m(i, j) == 0.0) return PerturbationKind::NewDiagonal;
  if (!pa.at(i, j) && !pb.at(i, j)) return PerturbationKind::OffDiagonal;
  return PerturbationKind::OnDiagonal;
}

PerturbationReport sensitivity_report(const Matrix& m, std::size_t i, std::size_t j,
                                      double eps, const SinkhornOptions& opts) {
  Matrix after = perturb(m, i, j, eps);
  auto before_res = sinkhorn(m, opts);
  auto after_res = sinkhorn(after, opts);
  PerturbationReport rep;
  rep.row = i;
  rep.col = j;
  rep.epsilon = eps;
  rep.kind = classify_perturbation(m, i, j, eps);
  rep.input_distance = std::abs(eps);
  rep.limit_distance = matrix_distance(before_res.limit.L, after_res.limit.L);
  rep.ci_before = ci_of_pair(before_res.limit);
  rep.ci_after = ci_of_pair(after_res.limit);
  return rep;
}

std::vector<PerturbationReport> continuity_sweep(const Matrix& m, std::size_t i,
                                                 std::size_t j,
                                                 const std::vector<double>& eps_list,
                                                 const SinkhornOptions& opts) {
  std::vector<PerturbationReport> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) out.push_back(sensitivity_report(m, i, j, eps, opts));
  return out;
}

Alpha3Check alpha3_bound_check(const Matrix& a, double eps, const SinkhornOptions& opts) {
  validate_joint(a);
  static const Pattern expected = Pattern::of(Matrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  if (a.rows() != 3 || a.cols() != 3 || Pattern::of(a) != expected)
    throw WrongPattern("expected the two-diagonal 3x3 pattern");
  if (eps <= 0.0) throw Error("eps must be positive");

  auto res = sinkhorn(perturb(a, 0, 2, eps), opts);
  Alpha3Check check;
  check.alpha1 = res.limit.L(0, 0);
  check.alpha3 = res.limit.L(0, 2);
  const double a1_coef = a(2, 0) / (a(0, 0) * a(2, 2));
  check.bound = eps * a1_coef / 2.0;
  check.applies = check.alpha1 < 0.5;
  return check;
}

}  // namespace coopinf
