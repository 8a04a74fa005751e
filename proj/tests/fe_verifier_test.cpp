#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace gz;
using testing_support::default_grid;
using testing_support::lpoly;
using testing_support::relative_error;

namespace {

FunctionFieldDescriptor mutated_elliptic() {
  return test_access::unchecked_function_field(5, lpoly({1, 3, 7}));
}

}  // namespace

TEST(CheckPoint, RationalsAtTwo) {
  const auto r = check_point(make_rationals(), 2.0, 1e-9);
  EXPECT_EQ(r.status, CheckStatus::ok);
  ASSERT_TRUE(r.lhs && r.rhs && r.residual);
  EXPECT_LT(relative_error(*r.lhs, std::numbers::pi / 6.0), 1e-12);
  EXPECT_LT(relative_error(*r.rhs, std::numbers::pi / 6.0), 1e-14);
  EXPECT_LE(*r.residual, 1e-10);
}

TEST(CheckPoint, GaussianAtTwo) {
  const auto r = check_point(make_quadratic(-1), 2.0, 1e-9);
  EXPECT_EQ(r.status, CheckStatus::ok);
  EXPECT_LE(*r.residual, 1e-9);
  const auto z2 = completed_zeta_value(make_quadratic(-1), 2.0);
  EXPECT_LT(relative_error(*r.rhs, 8.0 * z2), 1e-14);
}

TEST(CheckPoint, RationalFunctionFieldAtTwo) {
  const auto r = check_point(make_rational_function_field(5), 2.0, 1e-12);
  EXPECT_EQ(r.status, CheckStatus::ok);
  EXPECT_LE(*r.residual, 1e-13);
  // zeta(-1) = 125^{-1} zeta(2) in closed form
  EXPECT_LT(relative_error(*r.lhs, (125.0 / 96.0) / 125.0), 1e-14);
}

TEST(CheckPoint, GenusZeroIdentityOnRandomPoints) {
  // zeta(1 - s) = q^{1 - 2s} zeta(s) for F_q(T)
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> re(-3.0, 4.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  for (const std::int64_t q : {2, 3, 4, 5, 7, 9}) {
    const auto k = make_rational_function_field(q);
    for (int i = 0; i < 20; ++i) {
      const ComplexValue s(re(rng), im(rng));
      const auto r = check_point(k, s, 1e-12);
      if (r.status == CheckStatus::near_pole_skipped) continue;
      EXPECT_EQ(r.status, CheckStatus::ok) << q << " " << s;
    }
  }
}

TEST(CheckPoint, PoleProximityIsAStatus) {
  for (const ComplexValue s : {ComplexValue(1.0), ComplexValue(0.0), ComplexValue(1.0005, 0.0)}) {
    const auto r = check_point(make_rationals(), s, 1e-9);
    EXPECT_EQ(r.status, CheckStatus::near_pole_skipped);
    EXPECT_FALSE(r.lhs.has_value());
    EXPECT_FALSE(r.residual.has_value());
    EXPECT_LT(r.pole_distance, pole_exclusion_radius);
  }
  const double period = 2.0 * std::numbers::pi / std::log(3.0);
  EXPECT_EQ(check_point(make_rational_function_field(3), ComplexValue(0.0, period), 1e-9).status,
            CheckStatus::near_pole_skipped);
}

TEST(CheckPoint, ToleranceMustBePositive) {
  EXPECT_THROW(check_point(make_rationals(), 2.0, 0.0), DomainError);
  EXPECT_THROW(check_point(make_rationals(), 2.0, -1.0), DomainError);
}

TEST(CheckPoint, OkImpliesResidualWithinTolerance) {
  for (const double tol : {1e-6, 1e-12, 1e-15}) {
    const auto r = check_point(make_quadratic(5), ComplexValue(0.3, 4.0), tol);
    ASSERT_TRUE(r.residual.has_value());
    EXPECT_EQ(r.status == CheckStatus::ok, *r.residual <= tol);
  }
}

TEST(CheckPoint, InvolutionConsistency) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> re(-2.0, 3.0);
  std::uniform_real_distribution<double> im(-15.0, 15.0);
  std::vector<FieldDescriptor> fields;
  for (const auto& k : testing_support::number_field_fixtures()) fields.emplace_back(k);
  for (const auto& k : testing_support::function_field_fixtures()) fields.emplace_back(k);
  for (const auto& field : fields) {
    const double log_beta = covolume(field).log();
    for (int i = 0; i < 8; ++i) {
      const ComplexValue s(re(rng), im(rng));
      const auto forward = check_point(field, s, 1e-9);
      const auto backward = check_point(field, 1.0 - s, 1e-9);
      if (forward.status != CheckStatus::ok) continue;
      ASSERT_EQ(backward.status, CheckStatus::ok);
      // beta^{2s-1} beta^{1-2s} = 1
      EXPECT_NEAR(std::abs((2.0 * s - 1.0) * log_beta + (1.0 - 2.0 * s) * log_beta), 0.0, 1e-14);
      EXPECT_NEAR(*forward.residual, *backward.residual, 1e-12);
      EXPECT_NEAR(forward.pole_distance, backward.pole_distance, 1e-14);
    }
  }
}

TEST(RelativeResidual, FloorAndZeros) {
  EXPECT_EQ(relative_residual(0.0, 0.0), 0.0);
  EXPECT_EQ(relative_residual(1e-120, -1e-120), 0.0);
  EXPECT_DOUBLE_EQ(relative_residual(1.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(relative_residual(ComplexValue(0, 3), ComplexValue(0, 3)), 0.0);
}

TEST(Sweep, RationalsDefaultGrid) {
  const auto result = sweep(make_rationals(), default_grid(), 1e-9);
  EXPECT_EQ(result.reports.size(), 25u);
  EXPECT_EQ(result.summary.count_failed, 0u);
  EXPECT_EQ(result.summary.count_ok, 25u);
  EXPECT_LE(result.summary.max_residual, 1e-10);
  EXPECT_EQ(result.summary.field, "Q");
  EXPECT_EQ(result.summary.grid, "re=0.10000000000000001:0.90000000000000002:5,im=0:10:5");
}

TEST(Sweep, RowMajorOrder) {
  const auto result = sweep(make_rationals(), default_grid(), 1e-9);
  const auto nodes = default_grid().nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) EXPECT_EQ(result.reports[i].s, nodes[i]);
  EXPECT_LT(std::abs(nodes[1] - ComplexValue(0.1, 2.5)), 1e-15);
  EXPECT_LT(std::abs(nodes[5] - ComplexValue(0.3, 0.0)), 1e-15);
  EXPECT_EQ(nodes.back(), ComplexValue(0.9, 10.0));
}

TEST(Sweep, NeverFailsOnFixtures) {
  std::vector<FieldDescriptor> fields;
  for (const auto& k : testing_support::number_field_fixtures()) fields.emplace_back(k);
  for (const auto& k : testing_support::function_field_fixtures()) fields.emplace_back(k);
  for (const auto& field : fields) {
    const auto result = sweep(field, default_grid(), 1e-9);
    EXPECT_EQ(result.summary.count_failed, 0u) << format_field_spec(field);
    EXPECT_EQ(result.summary.count_ok + result.summary.count_skipped + result.summary.count_failed,
              result.reports.size());
  }
}

TEST(Sweep, GridThroughThePole) {
  const auto result = sweep(make_rationals(), Grid{0.0, 2.0, 5, 0.0, 0.0, 1}, 1e-9);
  ASSERT_EQ(result.reports.size(), 5u);
  EXPECT_EQ(result.reports[0].status, CheckStatus::near_pole_skipped);  // s = 0
  EXPECT_EQ(result.reports[2].status, CheckStatus::near_pole_skipped);  // s = 1
  EXPECT_EQ(result.reports[1].status, CheckStatus::ok);
  EXPECT_EQ(result.reports[4].status, CheckStatus::ok);  // 1 - s = -1 is not a pole of Z_Q
}

TEST(Sweep, TernaryFunctionFieldRealLine) {
  const auto result = sweep(make_rational_function_field(3), Grid{-2.0, 3.0, 11, 0.0, 0.0, 1}, 1e-12);
  EXPECT_EQ(result.summary.count_failed, 0u);
  EXPECT_EQ(result.summary.count_skipped, 2u);
  EXPECT_EQ(result.summary.count_ok, 9u);
  EXPECT_LE(result.summary.max_residual, 1e-12);
  for (const auto& r : result.reports)
    EXPECT_EQ(r.status == CheckStatus::near_pole_skipped, r.s == ComplexValue(0.0) || r.s == ComplexValue(1.0));
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  const auto one = sweep(make_quadratic(-3), Grid{-1.0, 2.0, 7, -5.0, 5.0, 6}, 1e-9, 1);
  const auto four = sweep(make_quadratic(-3), Grid{-1.0, 2.0, 7, -5.0, 5.0, 6}, 1e-9, 4);
  EXPECT_EQ(one.reports, four.reports);
  EXPECT_EQ(one.summary, four.summary);
}

TEST(Sweep, InvalidGrids) {
  EXPECT_THROW(sweep(make_rationals(), Grid{1.0, 0.0, 3, 0.0, 1.0, 3}, 1e-9), DomainError);
  EXPECT_THROW(sweep(make_rationals(), Grid{0.0, 1.0, 0, 0.0, 1.0, 3}, 1e-9), DomainError);
  EXPECT_THROW(sweep(make_rationals(), Grid{0.0, 1.0, 3, 2.0, 1.0, 3}, 1e-9), DomainError);
  EXPECT_THROW(sweep(make_rationals(), Grid{0.0, NAN, 3, 0.0, 1.0, 3}, 1e-9), DomainError);
  EXPECT_THROW(sweep(make_rationals(), default_grid(), 0.0), DomainError);
}

TEST(ExactCheck, Fixtures) {
  for (const auto& k : testing_support::function_field_fixtures()) {
    const auto result = exact_check_function_field(k);
    EXPECT_TRUE(result.holds) << format_field_spec(k);
    EXPECT_FALSE(result.witness.has_value());
  }
}

TEST(ExactCheck, MutationFlipsBothChecks) {
  const auto bad = mutated_elliptic();
  const auto exact = exact_check_function_field(bad);
  EXPECT_FALSE(exact.holds);
  EXPECT_EQ(exact.witness, 0u);
  const auto numeric = check_point(bad, 2.0, 1e-9);
  ASSERT_TRUE(numeric.residual.has_value());
  EXPECT_GT(*numeric.residual, 1e-6);
  EXPECT_EQ(numeric.status, CheckStatus::failed);
}

TEST(ExactCheck, EveryMutationAwayFromTheMiddleIsCaught) {
  // mutate each a_i, i != g, of the fixtures; symmetric positions pair up so
  // a single change always breaks the identity
  std::mt19937_64 rng(31);
  for (const auto& k : testing_support::function_field_fixtures()) {
    if (k.genus() == 0) continue;
    const auto& a = k.lpoly().coefficients();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == k.genus()) continue;
      auto changed = a;
      changed[i] += 1 + static_cast<long>(rng() % 5);
      const auto bad = test_access::unchecked_function_field(k.q(), LPolynomial(changed));
      EXPECT_FALSE(exact_check_function_field(bad).holds) << i;
      const auto numeric = check_point(bad, 2.0, 1e-9);
      ASSERT_TRUE(numeric.residual.has_value());
      EXPECT_GT(*numeric.residual, 1e-6) << format_field_spec(k) << " i = " << i;
    }
  }
}

TEST(ExactCheck, MiddleCoefficientIsFree) {
  // a_g is unconstrained by the symmetry: the mutated field still satisfies the equation
  const auto shifted = test_access::unchecked_function_field(5, lpoly({1, 4, 5}));
  EXPECT_TRUE(exact_check_function_field(shifted).holds);
  EXPECT_LE(*check_point(shifted, 2.0, 1e-9).residual, 1e-13);
}

TEST(EulerConsistency, ReferenceValues) {
  const auto q = euler_consistency_check(make_rationals(), 3.0, 100);
  EXPECT_TRUE(q.pass);
  EXPECT_LT(q.gap, 5.1e-5);
  EXPECT_NEAR(q.tail_bound, 4.0 * 5e-5, 1e-15);
  EXPECT_TRUE(euler_consistency_check(make_quadratic(-1), 2.0, 500).pass);
  EXPECT_TRUE(euler_consistency_check(make_rational_function_field(5), 2.0, 25).pass);
  EXPECT_NO_THROW(euler_consistency_check(make_rationals(), 1.01, 50));
}

TEST(EulerConsistency, Errors) {
  EXPECT_THROW(euler_consistency_check(make_rationals(), 1.0, 100), DomainError);
  EXPECT_THROW(euler_consistency_check(make_rationals(), ComplexValue(0.5, 2), 100), DomainError);
}
