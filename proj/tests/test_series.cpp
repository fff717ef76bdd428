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
#include <random>

#include "mapenum/enumeration.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/series.hpp"

namespace mapenum {
namespace {

using Q = Rational;
using S = TruncatedSeries;

S ser(std::vector<Q> c) { return S(std::move(c)); }

S geometric(std::size_t order) { return S(std::vector<Q>(order + 1, Q(1))); }

PreimageConstraint fin(std::vector<std::uint32_t> v) {
  return PreimageConstraint::finite(std::move(v));
}

S random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<Q> c(order + 1);
  for (auto& x : c) x = Q(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  if (zero_constant) c[0] = 0;
  return S(std::move(c));
}

TEST(Mul, Examples) {
  EXPECT_EQ(mul(ser({1, 1, 0}), ser({1, -1, 0})), ser({1, 0, -1}));
  EXPECT_EQ(mul(geometric(5), ser({1, -1, 0, 0, 0, 0})), S::constant(1, 5));
  const S e = e_series<Q>(fin({0, 3, 4}), 4);
  EXPECT_EQ(mul(e, e), ser({1, 0, 0, Q(1, 3), Q(1, 12)}));
}

TEST(Mul, TruncatesToSmallerOrder) {
  const S a = geometric(7), b = geometric(3);
  EXPECT_EQ(mul(a, b).order(), 3u);
  EXPECT_EQ((a + b).order(), 3u);
}

TEST(MulInverse, Examples) {
  EXPECT_EQ(mul_inverse(ser({1, -1, 0, 0, 0})), geometric(4));
  EXPECT_EQ(mul_inverse(S::constant(2, 3)), S::constant(Q(1, 2), 3));
  const S one = S::constant(1, 3);
  EXPECT_EQ(mul_inverse(one - mul(S::variable(3), e_series<Q>(fin({0}), 3))), geometric(3));
  EXPECT_THROW(mul_inverse(ser({0, 1})), NonInvertibleSeries);
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(geometric(5), ser({0, 0, 1, 0, 0, 0})), ser({1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(compose(e_series<Q>(PreimageConstraint::all_nonnegative(), 4), S(4)), S::constant(1, 4));
  const S log_geo = ser({0, 1, Q(1, 2), Q(1, 3)});
  EXPECT_EQ(compose(log_geo, S::variable(3)), log_geo);
  EXPECT_THROW(compose(geometric(3), ser({1, 1, 0, 0})), CompositionRequiresZeroConstant);
}

TEST(Derivative, Examples) {
  const auto all = PreimageConstraint::all_nonnegative();
  EXPECT_EQ(derivative(e_series<Q>(all, 4)), e_series<Q>(all, 3));
  EXPECT_TRUE(derivative(S::constant(7, 4)).is_zero());
  EXPECT_EQ(derivative(ser({0, 0, 0, 1})), ser({0, 0, 3}));
  EXPECT_EQ(derivative(ser({0, 0, 0, 1})).order(), 2u);
}

TEST(ExpCompose, Examples) {
  const auto all = PreimageConstraint::all_nonnegative();
  EXPECT_EQ(exp_compose(all, S::variable(3)), ser({1, 1, Q(1, 2), Q(1, 6)}));
  const S g = ser({0, 2, Q(-1, 3), 5});
  EXPECT_EQ(exp_compose(fin({0, 1}), g), S::constant(1, 3) + g);
  EXPECT_EQ(exp_compose(fin({0, 2}), ser({0, 1, 1})), ser({1, 0, Q(1, 2)}));
}

TEST(ExpCompose, MatchesGenericComposition) {
  std::mt19937_64 rng(7);
  auto subsets = subsets_up_to(5);
  for (const auto& p : subsets) {
    const S g = random_series(rng, 10, true);
    EXPECT_EQ(exp_compose(p, g), compose(e_series<Q>(p, 10), g)) << p.to_string();
  }
  const S g = random_series(rng, 10, true);
  EXPECT_EQ(exp_compose(PreimageConstraint::all_nonnegative(), g),
            compose(e_series<Q>(PreimageConstraint::all_nonnegative(), 10), g));
}

TEST(LagrangeInvert, Examples) {
  EXPECT_EQ(lagrange_invert<Q>(PreimageConstraint::all_nonnegative(), 4),
            ser({0, 1, 1, Q(3, 2), Q(8, 3)}));
  EXPECT_EQ(lagrange_invert<Q>(fin({0, 1}), 5), ser({0, 1, 1, 1, 1, 1}));
  EXPECT_EQ(lagrange_invert<Q>(fin({0}), 5), ser({0, 1, 0, 0, 0, 0}));
  EXPECT_THROW(lagrange_invert<Q>(fin({1, 2}), 5), NonInvertibleEpsilon);
}

TEST(LogExp, AreInverse) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const S g = random_series(rng, 12, true);
    EXPECT_EQ(log_series(exp_series(g)), g);
  }
}

TEST(Power, MatchesRepeatedProduct) {
  const S e = e_series<Q>(fin({0, 2, 3}), 12);
  S acc = S::constant(1, 12);
  for (std::uint64_t k = 0; k <= 9; ++k) {
    EXPECT_EQ(power(e, k), acc) << k;
    acc = mul(acc, e);
  }
}

TEST(Properties, InverseIdentity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    S f = random_series(rng, 16, false);
    if (sgn(f[0]) == 0) f[0] = 3;
    EXPECT_EQ(mul(f, mul_inverse(f)), S::constant(1, 16));
  }
}

TEST(Properties, CompositionIsLinearAndMultiplicative) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const S f1 = random_series(rng, 12, false), f2 = random_series(rng, 12, false);
    const S g = random_series(rng, 12, true);
    const Q a(3, 7), b(-2);
    EXPECT_EQ(compose(f1 * a + f2 * b, g), compose(f1, g) * a + compose(f2, g) * b);
    EXPECT_EQ(compose(mul(f1, f2), g), mul(compose(f1, g), compose(f2, g)));
  }
}

TEST(Properties, LagrangeFixedPoint) {
  auto subsets = subsets_up_to(5);
  subsets.push_back(PreimageConstraint::all_nonnegative());
  for (const auto& p : subsets) {
    if (!p.contains(0)) continue;
    const S sigma = lagrange_invert<Q>(p, 20);
    EXPECT_TRUE((sigma - mul(S::variable(20), exp_compose(p, sigma))).is_zero()) << p.to_string();
  }
}

TEST(Scale, SubstitutionIsHomomorphism) {
  const double s = 0.37;
  const auto p = fin({0, 2, 3});
  const FloatSeries plain = family_series<double>(p, FamilyKind::function(), 30);
  const FloatSeries scaled = family_series<double>(p, FamilyKind::function(), 30, s);
  for (std::size_t n = 0; n <= 30; ++n) {
    EXPECT_NEAR(true_coefficient(scaled, n), plain[n], 1e-12 * std::max(1.0, std::fabs(plain[n])));
  }
  EXPECT_NEAR(evaluate(scaled, 0.2), evaluate(plain, 0.2), 1e-12);
  EXPECT_THROW(mul(plain, scaled), ScaleMismatch);
}

TEST(FloatBackend, AgreesWithExact) {
  const std::vector<FamilyKind> families = {
      FamilyKind::tree(),           FamilyKind::function(),    FamilyKind::partial_function(),
      FamilyKind::connected(),      FamilyKind::xi_cyclic(),   FamilyKind::xi_component(),
      FamilyKind::xi_image(3),      FamilyKind::xi_partial_image(2), FamilyKind::bounded_tree(4)};
  std::vector<PreimageConstraint> ps = {PreimageConstraint::all_nonnegative(), fin({0, 1, 2}),
                                        fin({0, 3, 4}), fin({0, 2}), fin({0, 1, 2, 3, 4})};
  for (const auto& p : ps) {
    for (const auto& fam : families) {
      const S exact = family_series<Q>(p, fam, 50);
      const FloatSeries approx = family_series<double>(p, fam, 50);
      for (std::size_t n = 0; n <= 50; ++n) {
        const double want = exact[n].get_d();
        EXPECT_NEAR(approx[n], want, 1e-9 * std::fabs(want))
            << p.to_string() << " " << fam.name() << " n=" << n;
      }
    }
  }
}

}  // namespace
}  // namespace mapenum
