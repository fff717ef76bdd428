// Copyright 2026 The mapenum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mapenum/asymptotics.hpp"
#include "mapenum/enumeration.hpp"
#include "mapenum/errors.hpp"

namespace mapenum {
namespace {

PreimageConstraint fin(std::vector<std::uint32_t> v) {
  return PreimageConstraint::finite(std::move(v));
}
const PreimageConstraint kAll = PreimageConstraint::all_nonnegative();
const double kSqrt2 = std::numbers::sqrt2;
const double kE = std::numbers::e;

std::vector<PreimageConstraint> admissible() {
  std::vector<PreimageConstraint> out;
  for (const auto& p : subsets_up_to(4)) {
    if (is_admissible(p)) out.push_back(p);
  }
  out.push_back(kAll);
  return out;
}

// log([z^n] series) for an exact coefficient.
double log_exact(const PreimageConstraint& p, FamilyKind fam, std::uint32_t n) {
  return log_of(count(p, fam, n).coefficient);
}

TEST(EvaluateE, MatchesDefinition) {
  EXPECT_DOUBLE_EQ(evaluate_e(kAll, 0.7), std::exp(0.7));
  EXPECT_DOUBLE_EQ(evaluate_e(fin({0, 3, 4}), 2.0), 1 + 8.0 / 6 + 16.0 / 24);
  EXPECT_DOUBLE_EQ(evaluate_e(fin({2}), 3.0), 4.5);
  EXPECT_DOUBLE_EQ(evaluate_e(fin({}), 3.0), 0.0);
}

TEST(SolveSingular, Examples) {
  auto s = solve_singular(kAll);
  EXPECT_NEAR(s.tau, 1.0, 1e-12);
  EXPECT_NEAR(s.rho, std::exp(-1.0), 1e-12);
  s = solve_singular(fin({0, 1, 2}));
  EXPECT_NEAR(s.tau, kSqrt2, 1e-12);
  EXPECT_NEAR(s.rho, kSqrt2 - 1, 1e-12);
  s = solve_singular(fin({0, 2}));
  EXPECT_NEAR(s.tau, kSqrt2, 1e-12);
  EXPECT_NEAR(s.rho, kSqrt2 / 2, 1e-12);
  EXPECT_FALSE(s.aperiodic);
  EXPECT_EQ(s.period, 2u);
}

TEST(SolveSingular, RejectsInadmissible) {
  for (const auto& p : {fin({0, 1}), fin({0}), fin({1, 2}), fin({2, 3})}) {
    EXPECT_THROW(solve_singular(p), ConstraintNotAdmissible) << p.to_string();
  }
}

TEST(SolveSingular, Invariants) {
  for (const auto& p : admissible()) {
    const auto s = solve_singular(p);
    const double e_prime = evaluate_e(shift(p, 1), s.tau);
    EXPECT_NEAR(s.e_tau, s.tau * e_prime, 1e-12 * s.e_tau) << p.to_string();
    EXPECT_NEAR(s.rho, s.tau / s.e_tau, 1e-15);
    EXPECT_NEAR(s.rho, 1.0 / s.e_m1_tau, 1e-12);
    EXPECT_GT(s.rho, 0.0);
    EXPECT_LT(s.rho, s.tau);
    EXPECT_EQ(s.aperiodic, classify(p).period == 1);
  }
}

TEST(SolveSingular, ExcessIsMonotoneOnBracket) {
  // f(t) = t e_P'(t) - (e_P(t) - 1), sampled on [0, 2 tau].
  for (const auto& p : admissible()) {
    const double tau = solve_singular(p).tau;
    double prev = -1;
    for (int i = 0; i <= 400; ++i) {
      const double t = 2 * tau * i / 400;
      const double f = t * evaluate_e(shift(p, 1), t) - (evaluate_e(p, t) - 1);
      EXPECT_GE(f, -1e-15);
      EXPECT_GE(f, prev - 1e-15) << p.to_string() << " t=" << t;
      prev = f;
    }
  }
}

TEST(SolveSingular, SubsetMonotonicity) {
  const auto ps = admissible();
  for (const auto& a : ps) {
    for (const auto& b : ps) {
      const bool subset =
          b.is_all() || (!a.is_all() && std::includes(b.elements().begin(), b.elements().end(),
                                                      a.elements().begin(), a.elements().end()));
      if (!subset) continue;
      EXPECT_GE(solve_singular(a).tau, solve_singular(b).tau - 2e-13)
          << a.to_string() << " in " << b.to_string();
    }
  }
}

TEST(TauSequence, Examples) {
  const auto s = solve_singular(kAll);
  const auto t = tau_sequence(s, 2);
  EXPECT_EQ(t[0], 0.0);
  EXPECT_NEAR(t[1], std::exp(-1.0), 1e-15);
  EXPECT_NEAR(t[2], std::exp(std::exp(-1.0) - 1), 1e-15);
  EXPECT_NEAR(t[2], 0.5314636, 1e-7);
  EXPECT_THROW(solve_singular(fin({0, 1})), ConstraintNotAdmissible);
}

TEST(TauSequence, IncreasingAndBounded) {
  for (const auto& p : admissible()) {
    const auto s = solve_singular(p);
    const auto t = tau_sequence(s, 10000);
    for (std::size_t k = 1; k < t.size(); ++k) {
      ASSERT_LT(t[k - 1], t[k]) << p.to_string() << " k=" << k;
      ASSERT_LT(t[k], s.tau);
    }
  }
}

TEST(TauSequence, ConvergesLikeOneOverK) {
  // tau - tau_k ~ 2 / (rho e_{P-2}(tau) k): the fixed point is parabolic.
  for (const auto& p : admissible()) {
    const auto s = solve_singular(p);
    const auto t = tau_sequence(s, 10000);
    const double predicted = 2.0 / (s.rho * s.e_m2_tau * 10000);
    EXPECT_NEAR((s.tau - t[10000]) / predicted, 1.0, 0.01) << p.to_string();
  }
}

TEST(TauSequence, MatchesBoundedTreeAtRho) {
  for (const auto& p : {kAll, fin({0, 1, 2}), fin({0, 3, 4})}) {
    const auto s = solve_singular(p);
    const auto t = tau_sequence(s, 20);
    for (std::uint32_t k = 1; k <= 20; ++k) {
      const FloatSeries b = family_series<double>(p, FamilyKind::bounded_tree(k - 1), 4000, s.rho);
      EXPECT_NEAR(evaluate(b, s.rho), t[k], 1e-10) << p.to_string() << " k=" << k;
    }
  }
}

TEST(CoefficientAsymptote, StirlingAtTwoHundred) {
  const auto s = solve_singular(kAll);
  const double diff =
      coefficient_asymptote(s, FamilyKind::function(), 200).log_value -
      log_exact(kAll, FamilyKind::function(), 200);
  EXPECT_LT(std::fabs(std::expm1(diff)), 1e-3);
}

TEST(CoefficientAsymptote, CayleyAtHundred) {
  const auto s = solve_singular(kAll);
  const double diff = coefficient_asymptote(s, FamilyKind::tree(), 100).log_value -
                      log_exact(kAll, FamilyKind::tree(), 100);
  EXPECT_LT(std::fabs(std::expm1(diff)), 1e-2);
}

TEST(CoefficientAsymptote, CyclicAtFifty) {
  const auto p = fin({0, 1, 2});
  const auto s = solve_singular(p);
  const double diff = coefficient_asymptote(s, FamilyKind::xi_cyclic(), 50).log_value -
                      log_exact(p, FamilyKind::xi_cyclic(), 50);
  EXPECT_LT(std::fabs(std::expm1(diff)), 0.1);
}

TEST(CoefficientAsymptote, PartialAndImageFamilies) {
  const auto p = fin({0, 3, 4});
  const auto s = solve_singular(p);
  for (auto fam : {FamilyKind::partial_function(), FamilyKind::xi_image(2),
                   FamilyKind::xi_partial_image(2)}) {
    const double diff = coefficient_asymptote(s, fam, 150).log_value - log_exact(p, fam, 150);
    EXPECT_LT(std::fabs(std::expm1(diff)), 0.1) << fam.name();
  }
  EXPECT_THROW(coefficient_asymptote(s, FamilyKind::connected(), 10), Error);
}

TEST(CoefficientAsymptote, LogSpaceAndOverflow) {
  const auto s = solve_singular(kAll);
  const auto a = coefficient_asymptote(s, FamilyKind::function(), 5000);
  EXPECT_TRUE(std::isfinite(a.log_value));
  EXPECT_THROW(a.value(), std::overflow_error);
  EXPECT_NO_THROW(coefficient_asymptote(s, FamilyKind::function(), 50).value());
  EXPECT_FALSE(a.unproven);
  EXPECT_TRUE(coefficient_asymptote(solve_singular(fin({0, 4})), FamilyKind::tree(), 9).unproven);
}

TEST(AverageCyclic, Constants) {
  EXPECT_NEAR(cyclic_constant(solve_singular(kAll)), std::sqrt(std::numbers::pi / 2), 1e-12);
  const auto s = solve_singular(fin({0, 1, 2}));
  const double c = std::sqrt(std::numbers::pi / (2 * (2 - kSqrt2)));
  EXPECT_NEAR(cyclic_constant(s), c, 1e-12);
  EXPECT_NEAR(average_cyclic_asymptote(s, 10000), 100 * c, 1e-9);
}

TEST(AverageCyclic, AgreesWithExactAtFourHundred) {
  const auto p = fin({0, 1, 2});
  const auto s = solve_singular(p);
  const double exact = approx_expected_statistic(p, Statistic::cyclic_points(), 400, s.rho)[400];
  EXPECT_NEAR(exact / average_cyclic_asymptote(s, 400), 1.0, 0.1);
}

TEST(KthImage, Examples) {
  const auto s = solve_singular(kAll);
  EXPECT_NEAR(kth_image_asymptote(s, 1000, 1), 1000 * (1 - std::exp(-1.0)), 1e-9);
  EXPECT_NEAR(kth_image_asymptote(s, 1000, 1) / 1000, 0.63212, 1e-5);
  EXPECT_NEAR(kth_image_asymptote(s, 1000, 2) / 1000, 0.46854, 1e-5);
  for (const auto& p : admissible()) {
    EXPECT_DOUBLE_EQ(kth_image_asymptote(solve_singular(p), 77, 0), 77.0);
  }
}

TEST(Coalescence, BaselineIsZero) {
  const auto s = solve_singular(kAll);
  for (std::uint32_t k = 1; k <= 30; ++k) EXPECT_EQ(coalescence_metric(s, k), 0.0);
}

TEST(Coalescence, FirstStep) {
  const auto s = solve_singular(fin({0, 1, 2}));
  const double want = std::log2(1 - (kSqrt2 - 1) / kSqrt2) - std::log2(1 - std::exp(-1.0));
  EXPECT_NEAR(coalescence_metric(s, 1), want, 1e-12);
}

TEST(Coalescence, ApproachesLimit) {
  // With tau - tau_k ~ 1/(c k), c = rho e_{P-2}(tau) / 2, the metric tends
  // to log2(c_all tau_all / (c_P tau_P)); the approach is O(log k / k).
  const auto s = solve_singular(fin({0, 1, 2}));
  const auto base = solve_singular(kAll);
  const double c = s.rho * s.e_m2_tau / 2, c_all = base.rho * base.e_m2_tau / 2;
  const double limit = std::log2(c_all * base.tau / (c * s.tau));
  EXPECT_NEAR(limit, std::log2(1 / (2 - kSqrt2)), 1e-12);
  double prev_gap = INFINITY;
  for (std::uint32_t k : {10u, 40u, 60u, 1000u, 10000u}) {
    const double gap = std::fabs(coalescence_metric(s, k) - limit);
    EXPECT_LT(gap, prev_gap) << k;
    prev_gap = gap;
  }
  EXPECT_LT(prev_gap, 2e-3);
}

}  // namespace
}  // namespace mapenum
