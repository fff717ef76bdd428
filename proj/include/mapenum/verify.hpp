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
#include <string>
#include <vector>

#include "mapenum/constraint.hpp"
#include "mapenum/rational.hpp"

namespace mapenum {

/// One oracle-vs-series comparison.
struct VerifyCheck {
  PreimageConstraint constraint = PreimageConstraint::all_nonnegative();
  std::uint32_t n = 0;
  std::string quantity;  // e.g. "functions", "image-deficiency k=3"
  Rational oracle;
  Rational series;

  bool pass() const { return oracle == series; }
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Every nonempty subset of {0,...,4} followed by all of Z>=0.
std::vector<PreimageConstraint> default_verify_constraints();

/// Compares exhaustive counts for n = 0..n_max against the generating
/// functions: trees, functions, partial functions (both through count()
/// and through the series pipeline), connected functions, total cyclic
/// points, total components, total image deficiency over functions and
/// partial functions for k = 0..k_max, and the exact means returned by
/// expected_statistic. Constraints are checked concurrently when
/// `parallel` is set; the result order is fixed either way.
VerifyResult verify_against_oracle(const std::vector<PreimageConstraint>& constraints,
                                   std::uint32_t n_max, std::uint32_t k_max, bool parallel = true);

}  // namespace mapenum
