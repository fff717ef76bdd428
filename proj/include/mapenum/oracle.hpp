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


#pragma once

#include <cstdint>
#include <vector>

#include "mapenum/constraint.hpp"
#include "mapenum/rational.hpp"

namespace mapenum {

/// Largest n the exhaustive enumerators accept.
inline constexpr std::uint32_t kOracleCap = 8;

/// Aggregates over every P-constrained (partial) function on [n], found by
/// exhaustive enumeration.
struct OracleSummary {
  std::uint32_t n = 0;
  PreimageConstraint constraint = PreimageConstraint::all_nonnegative();
  BigInt function_count;
  BigInt partial_function_count;
  BigInt tree_count;
  BigInt connected_count;
  BigInt total_cyclic_points;
  BigInt total_components;
  // Index k: sum over functions of n - |f^k([n])|, for k = 0..k_max.
  std::vector<BigInt> total_image_deficiency;
  // Same over partial functions; undefined points drop out of the image.
  std::vector<BigInt> total_partial_image_deficiency;
};

/// Visits all n^n functions and (n+1)^n partial functions, split across
/// threads by the value of f(0). A partial function must still give every
/// x in [n] a preimage count in P. Throws CapExceeded for n > kOracleCap.
OracleSummary enumerate(const PreimageConstraint& p, std::uint32_t n, std::uint32_t k_max);

/// Labeled rooted trees on [n] whose child counts all lie in P, counted by
/// trying every root and every parent map. Throws CapExceeded for n > kOracleCap.
BigInt enumerate_trees(const PreimageConstraint& p, std::uint32_t n);

}  // namespace mapenum
