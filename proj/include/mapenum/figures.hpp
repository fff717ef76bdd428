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
#include <string_view>
#include <vector>

#include "mapenum/constraint.hpp"

namespace mapenum {

/// tree-counts, tree-counts-periodic, function-counts,
/// function-counts-periodic, partial-function-counts, overlay-034,
/// overlay-04, tau-k, coalescence, cyclic-vs-coalescence.
const std::vector<std::string>& figure_ids();

struct FigureOptions {
  std::uint32_t n_max = 60;
  std::uint32_t k_max = 64;
};

/// Subsets of {0,...,4} with 0 and an element >= 2, split by period.
std::vector<PreimageConstraint> aperiodic_figure_constraints();
std::vector<PreimageConstraint> periodic_figure_constraints();

/// The CSV for one figure: header row, one row per n (or k, or constraint),
/// 12 significant digits, "-inf" for log2 of zero. Throws Error for an
/// unknown id.
std::string figure_csv(std::string_view id, const FigureOptions& options);

/// 12 significant digits, "-inf"/"inf"/"nan" spelled out.
std::string format_number(double v);

}  // namespace mapenum
