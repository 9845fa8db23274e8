#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coopinf/cross_ratio.hpp"
#include "coopinf/pattern.hpp"
#include "coopinf/perturbation.hpp"
#include "helpers.hpp"

using namespace coopinf;

namespace {

const Matrix kTwoDiag{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};

Matrix limit_of(const Matrix& m) {
  auto res = sinkhorn(m);
  REQUIRE(res.converged);
  return res.limit.L;
}

}  // namespace

TEST_CASE("perturb validates the result") {
  CHECK_THROWS_AS(perturb(kTwoDiag, 3, 0, 0.1), DimensionMismatch);
  CHECK_THROWS_AS(perturb(kTwoDiag, 0, 0, -2.0), NegativeResult);
  CHECK_THROWS_AS(perturb(Matrix{{1, 0}, {0, 1}}, 0, 0, -1.0), DegenerateResult);
  Matrix out = perturb(kTwoDiag, 0, 2, 0.5);
  CHECK(out(0, 2) == 0.5);
  CHECK(kTwoDiag(0, 2) == 0.0);  // input untouched
}

TEST_CASE("perturbation kinds on the two-diagonal matrix") {
  CHECK(classify_perturbation(kTwoDiag, 0, 0, 0.5) == PerturbationKind::OnDiagonal);
  CHECK(classify_perturbation(kTwoDiag, 0, 2, 0.5) == PerturbationKind::NewDiagonal);
  // (0,1) sits on the second diagonal, so growing it is on-diagonal.
  CHECK(classify_perturbation(kTwoDiag, 0, 1, 0.5) == PerturbationKind::OnDiagonal);
  // Off-diagonal: the middle column entries of the three-diagonal example.
  Matrix m{{1, 1, 1}, {0, 1, 0}, {1, 1, 1}};
  CHECK(classify_perturbation(m, 0, 1, 0.5) == PerturbationKind::OffDiagonal);
  CHECK(classify_perturbation(m, 2, 1, 100.0) == PerturbationKind::OffDiagonal);
}

TEST_CASE("off-diagonal perturbations leave the limit unchanged") {
  Matrix m{{1, 1, 1}, {0, 1, 0}, {1, 1, 1}};
  Matrix base = limit_of(apply_max_pattern(m));
  for (double eps : {0.1, 1.0, 100.0}) {
    auto rep = sensitivity_report(m, 0, 1, eps);
    CHECK(rep.kind == PerturbationKind::OffDiagonal);
    CHECK(rep.limit_distance <= 2e-5);  // slow 1/k tail of the dying entry
    // With the dying entries extrapolated away, agreement is sharp.
    Matrix pert = perturb(m, 0, 1, eps);
    auto lk = sinkhorn_sweeps(pert, 16384);
    auto l2k = sinkhorn_sweeps(pert, 32768);
    CHECK(matrix_distance(testutil::extrapolated_limit(lk.L, l2k.L), base) <= 1e-8);
  }
}

TEST_CASE("printed limits of the perturbed two-diagonal matrix") {
  // Base limit: both diagonals weighted 1/2.
  Matrix base = limit_of(kTwoDiag);
  CHECK(matrix_distance(base, Matrix{{0.5, 0.5, 0}, {0, 0.5, 0.5}, {0.5, 0, 0.5}}) <= 1e-6);

  auto e1 = sensitivity_report(kTwoDiag, 0, 0, 0.5);
  CHECK(e1.kind == PerturbationKind::OnDiagonal);
  CHECK(limit_of(perturb(kTwoDiag, 0, 0, 0.5))(0, 0) ==
        doctest::Approx(0.533737).epsilon(1e-4));
  CHECK(e1.limit_distance == doctest::Approx(0.033737).epsilon(1e-3));

  auto e2 = sensitivity_report(kTwoDiag, 0, 0, 0.1);
  CHECK(limit_of(perturb(kTwoDiag, 0, 0, 0.1))(0, 0) ==
        doctest::Approx(0.507942).epsilon(1e-4));
  CHECK(e2.limit_distance == doctest::Approx(0.007942).epsilon(1e-3));

  auto e3 = sensitivity_report(kTwoDiag, 0, 2, 0.1);
  CHECK(e3.kind == PerturbationKind::NewDiagonal);
  Matrix l3 = limit_of(perturb(kTwoDiag, 0, 2, 0.1));
  CHECK(matrix_distance(l3, Matrix{{0.478101, 0.478101, 0.043798},
                                   {0, 0.521899, 0.478101},
                                   {0.521899, 0, 0.478101}}) <= 1e-5);

  auto e4 = sensitivity_report(kTwoDiag, 0, 2, 0.5);
  Matrix l4 = limit_of(perturb(kTwoDiag, 0, 2, 0.5));
  CHECK(matrix_distance(l4, Matrix{{0.42265, 0.42265, 0.154701},
                                   {0, 0.57735, 0.42265},
                                   {0.57735, 0, 0.42265}}) <= 1e-5);
  CHECK(e4.limit_distance == doctest::Approx(0.154701).epsilon(1e-3));
}

TEST_CASE("limit distance vanishes with the perturbation size") {
  auto reports = continuity_sweep(kTwoDiag, 0, 0, {0.5, 0.1, 0.01, 0.001, 0.0001});
  for (std::size_t k = 1; k < reports.size(); ++k)
    CHECK(reports[k].limit_distance < reports[k - 1].limit_distance);
  CHECK(reports.back().limit_distance <= 1e-4);
  // CI moves continuously as well.
  for (const auto& r : reports) {
    CHECK(r.ci_before == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(r.ci_after > 0.5);
  }
}

TEST_CASE("new-diagonal coefficient obeys the eps * A1 / 2 bound") {
  // In-regime instance: alpha1 < 1/2 keeps the bound applicable.
  Matrix a{{2, 20, 0}, {0, 1, 1}, {1, 0, 5}};
  auto check = alpha3_bound_check(a, 0.5);
  CHECK(check.applies);
  CHECK(check.alpha1 == doctest::Approx(0.434482).epsilon(1e-4));
  CHECK(check.alpha3 == doctest::Approx(0.016690).epsilon(1e-3));
  CHECK(check.bound == doctest::Approx(0.025).epsilon(1e-12));
  CHECK(check.alpha3 <= check.bound);
  // The exact identity alpha3 * (1 - alpha1) / alpha1^2 = eps * A1.
  const double a1_coef = a(2, 0) / (a(0, 0) * a(2, 2));
  CHECK(check.alpha3 * (1.0 - check.alpha1) / (check.alpha1 * check.alpha1) ==
        doctest::Approx(0.5 * a1_coef).epsilon(1e-7));

  // Out of regime: alpha1 > 1/2, bound not claimed (applies = false).
  Matrix big{{10, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  auto out = alpha3_bound_check(big, 0.5);
  CHECK(!out.applies);
  CHECK(out.alpha3 > out.bound);  // demonstrates why the regime matters

  CHECK_THROWS_AS(alpha3_bound_check(Matrix{{1, 1}, {1, 1}}, 0.5), WrongPattern);
  CHECK_THROWS_AS(alpha3_bound_check(a, -0.5), Error);
}

TEST_CASE("sensitivity report fields are coherent") {
  std::mt19937 rng(61);
  for (int t = 0; t < 20; ++t) {
    Matrix m = testutil::rand_square(rng, 3);
    auto rep = sensitivity_report(m, t % 3, (t / 3) % 3, 0.05);
    CHECK(rep.input_distance == doctest::Approx(0.05));
    CHECK(rep.limit_distance >= 0.0);
    CHECK(rep.ci_before > 0.0);
    CHECK(rep.ci_after > 0.0);
    CHECK(rep.kind == PerturbationKind::OnDiagonal);  // fully positive 3x3
  }
}

TEST_CASE("vanishing perturbations leave the limit essentially unchanged") {
  std::mt19937 rng(62);
  std::uniform_int_distribution<std::size_t> dim(3, 5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = dim(rng);
    Matrix m = testutil::rand_square(rng, n);  // fully positive
    auto rep = sensitivity_report(m, t % n, (t / 3) % n, 1e-8);
    CHECK(rep.limit_distance < 1e-4);
  }
  // New-diagonal direction on the two-diagonal instance.
  auto nd = sensitivity_report(kTwoDiag, 0, 2, 1e-8);
  CHECK(nd.kind == PerturbationKind::NewDiagonal);
  CHECK(nd.limit_distance < 1e-4);
}

TEST_CASE("limit moves only when the profile or the pattern moves") {
  std::mt19937 rng(63);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = dim(rng);
    Matrix m = testutil::rand_square(rng, n);  // fully positive, on-diagonal
    const std::size_t i = t % n, j = (t / 2) % n;
    Matrix pert = perturb(m, i, j, 0.4);
    CHECK(!cr_equivalent(m, pert));  // some diagonal product changed
    CHECK(matrix_distance(limit_of(m), limit_of(pert)) > 1e-8);
  }
  // Same profile and same pattern (a diagonal scaling): same limit.
  std::uniform_real_distribution<double> fac(0.2, 5.0);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = dim(rng);
    Matrix m = testutil::rand_square(rng, n);
    Matrix scaled(n, n);
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = fac(rng);
    for (auto& v : y) v = fac(rng);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) scaled(a, b) = x[a] * m(a, b) * y[b];
    REQUIRE(cr_equivalent(m, scaled));
    CHECK(matrix_distance(limit_of(m), limit_of(scaled)) <= 1e-8);
  }
}

TEST_CASE("new-diagonal perturbations move the limit more than on-diagonal ones") {
  auto on = sensitivity_report(kTwoDiag, 0, 0, 0.1);
  auto fresh = sensitivity_report(kTwoDiag, 0, 2, 0.1);
  CHECK(on.kind == PerturbationKind::OnDiagonal);
  CHECK(fresh.kind == PerturbationKind::NewDiagonal);
  CHECK(fresh.limit_distance > on.limit_distance);
}
