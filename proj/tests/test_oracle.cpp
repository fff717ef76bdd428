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

#include "mapenum/errors.hpp"
#include "mapenum/oracle.hpp"
#include "mapenum/verify.hpp"

namespace mapenum {
namespace {

PreimageConstraint fin(std::vector<std::uint32_t> v) {
  return PreimageConstraint::finite(std::move(v));
}
const PreimageConstraint kAll = PreimageConstraint::all_nonnegative();

TEST(Enumerate, AllOnTwoPoints) {
  const auto s = enumerate(kAll, 2, 2);
  EXPECT_EQ(s.function_count, 4);
  EXPECT_EQ(s.total_cyclic_points, 6);
  EXPECT_EQ(s.total_components, 5);
  EXPECT_EQ(s.total_image_deficiency[1], 2);
  EXPECT_EQ(s.connected_count, 3);
  EXPECT_EQ(s.partial_function_count, 9);
  EXPECT_EQ(s.tree_count, 2);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate(fin({0, 2}), 2, 1).function_count, 2);
  const auto s = enumerate(kAll, 3, 0);
  EXPECT_EQ(s.function_count, 27);
  ASSERT_EQ(s.total_image_deficiency.size(), 1u);
  EXPECT_EQ(s.total_image_deficiency[0], 0);
  EXPECT_EQ(enumerate(kAll, 3, 1).partial_function_count, 64);
}

TEST(Enumerate, EmptyDomain) {
  const auto s = enumerate(fin({2}), 0, 3);
  EXPECT_EQ(s.function_count, 1);
  EXPECT_EQ(s.partial_function_count, 1);
  EXPECT_EQ(s.tree_count, 0);
  EXPECT_EQ(s.connected_count, 0);
}

TEST(Enumerate, Bounds) {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    BigInt nn, n1;
    mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
    mpz_ui_pow_ui(n1.get_mpz_t(), n + 1, n);
    for (const auto& p : subsets_up_to(3)) {
      const auto s = enumerate(p, n, n + 3);
      EXPECT_LE(s.function_count, nn);
      EXPECT_LE(s.partial_function_count, n1);
      EXPECT_EQ(s.total_image_deficiency[0], 0);
      for (std::uint32_t k = 1; k <= n + 3; ++k) {
        EXPECT_GE(s.total_image_deficiency[k], s.total_image_deficiency[k - 1]);
        if (k > n) {
          EXPECT_EQ(s.total_image_deficiency[k], s.total_image_deficiency[n]);
        }
      }
    }
  }
}

TEST(Enumerate, Permutations) {
  BigInt fact = 1;
  for (std::uint32_t n = 1; n <= 6; ++n) {
    fact *= n;
    for (const auto& p : {fin({0, 1}), fin({1})}) {
      const auto s = enumerate(p, n, 4);
      EXPECT_EQ(s.function_count, fact);
      EXPECT_EQ(s.total_cyclic_points, fact * n);
      for (const auto& d : s.total_image_deficiency) EXPECT_EQ(d, 0);
    }
  }
}

TEST(Enumerate, Cap) {
  EXPECT_THROW(enumerate(kAll, 9, 1), CapExceeded);
  EXPECT_THROW(enumerate_trees(kAll, 9), CapExceeded);
}

TEST(EnumerateTrees, Examples) {
  EXPECT_EQ(enumerate_trees(kAll, 3), 9);
  EXPECT_EQ(enumerate_trees(fin({0, 1}), 4), 24);
  EXPECT_EQ(enumerate_trees(fin({0, 1, 2}), 2), 2);
  EXPECT_EQ(enumerate_trees(kAll, 5), 625);
  EXPECT_EQ(enumerate_trees(kAll, 0), 0);
}

TEST(Verify, AllSubsetsUpToSix) {
  const auto result = verify_against_oracle(default_verify_constraints(), 6, 6);
  EXPECT_EQ(result.failures(), 0u);
  EXPECT_GT(result.checks.size(), 5000u);
  for (const auto& c : result.checks) {
    EXPECT_TRUE(c.pass()) << c.constraint.to_string() << " n=" << c.n << " " << c.quantity;
  }
}

TEST(Verify, SevenPointsForSelectedSets) {
  const auto result = verify_against_oracle({kAll, fin({0, 3, 4}), fin({0, 2}), fin({1, 2})}, 7, 4);
  EXPECT_TRUE(result.all_pass());
}

}  // namespace
}  // namespace mapenum
