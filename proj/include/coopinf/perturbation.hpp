#pragma once

#include <cstddef>
#include <vector>

#include "coopinf/matrix.hpp"
#include "coopinf/sinkhorn.hpp"

namespace coopinf {

enum class PerturbationKind { OffDiagonal, OnDiagonal, NewDiagonal };

const char* to_string(PerturbationKind kind);

struct PerturbationReport {
  std::size_t row = 0;
  std::size_t col = 0;
  double epsilon = 0.0;
  PerturbationKind kind = PerturbationKind::OnDiagonal;
  double input_distance = 0.0;  // |epsilon|
  double limit_distance = 0.0;  // d(Phi(M), Phi(M^eps))
  double ci_before = 0.0;
  double ci_after = 0.0;
};

// Single-entry modification m(i,j) += eps. Multi-entry perturbations are
// compositions left to the caller.
Matrix perturb(const Matrix& m, std::size_t i, std::size_t j, double eps);

PerturbationKind classify_perturbation(const Matrix& m, std::size_t i, std::size_t j,
                                       double eps, std::size_t diag_limit = 1000000);

PerturbationReport sensitivity_report(const Matrix& m, std::size_t i, std::size_t j,
                                      double eps, const SinkhornOptions& opts = {});

std::vector<PerturbationReport> continuity_sweep(const Matrix& m, std::size_t i,
                                                 std::size_t j,
                                                 const std::vector<double>& eps_list,
                                                 const SinkhornOptions& opts = {});

// The two-diagonal 3x3 family [[+,+,0],[0,+,+],[+,0,+]] perturbed at (0,2):
// the new-diagonal coefficient alpha3 obeys
//   alpha3 = eps * A1 * alpha1^2 / (1 - alpha1) <= eps * A1 / 2
// with A1 = a31 / (a11 * a33), valid while alpha1 < 1/2.
struct Alpha3Check {
  double alpha1 = 0.0;
  double alpha3 = 0.0;
  double bound = 0.0;   // eps * A1 / 2
  bool applies = false; // alpha1 < 1/2, the regime where the bound holds
};

Alpha3Check alpha3_bound_check(const Matrix& a, double eps,
                               const SinkhornOptions& opts = {});

}  // namespace coopinf
