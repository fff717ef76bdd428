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


#include "mapenum/verify.hpp"

#include <algorithm>
#include <future>

#include "mapenum/enumeration.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/oracle.hpp"

namespace mapenum {

namespace {

std::vector<VerifyCheck> verify_one(const PreimageConstraint& p, std::uint32_t n_max,
                                    std::uint32_t k_max) {
  std::vector<VerifyCheck> checks;
  auto add = [&](std::uint32_t n, std::string quantity, Rational oracle, Rational series) {
    checks.push_back({p, n, std::move(quantity), std::move(oracle), std::move(series)});
  };
  auto scaled = [](const TruncatedSeries& s, std::uint32_t n) {
    return Rational(s[n] * factorial(n));
  };

  const TruncatedSeries tree = family_series<Rational>(p, FamilyKind::tree(), n_max);
  const TruncatedSeries function = family_series<Rational>(p, FamilyKind::function(), n_max);
  const TruncatedSeries partial = family_series<Rational>(p, FamilyKind::partial_function(), n_max);
  const TruncatedSeries connected = family_series<Rational>(p, FamilyKind::connected(), n_max);
  const TruncatedSeries cyclic = family_series<Rational>(p, FamilyKind::xi_cyclic(), n_max);
  const TruncatedSeries components = family_series<Rational>(p, FamilyKind::xi_component(), n_max);
  std::vector<TruncatedSeries> image, partial_image;
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    image.push_back(family_series<Rational>(p, FamilyKind::xi_image(k), n_max));
    partial_image.push_back(family_series<Rational>(p, FamilyKind::xi_partial_image(k), n_max));
  }

  for (std::uint32_t n = 0; n <= n_max; ++n) {
    const OracleSummary o = enumerate(p, n, k_max);
    add(n, "trees", o.tree_count, count(p, FamilyKind::tree(), n).count);
    add(n, "trees (series)", o.tree_count, scaled(tree, n));
    add(n, "functions", o.function_count, count(p, FamilyKind::function(), n).count);
    add(n, "functions (series)", o.function_count, scaled(function, n));
    add(n, "partial functions", o.partial_function_count,
        count(p, FamilyKind::partial_function(), n).count);
    add(n, "partial functions (series)", o.partial_function_count, scaled(partial, n));
    add(n, "connected", o.connected_count, scaled(connected, n));
    add(n, "cyclic points", o.total_cyclic_points, scaled(cyclic, n));
    add(n, "components", o.total_components, scaled(components, n));
    for (std::uint32_t k = 0; k <= k_max; ++k) {
      add(n, "image deficiency k=" + std::to_string(k), o.total_image_deficiency[k],
          scaled(image[k], n));
      add(n, "partial image deficiency k=" + std::to_string(k),
          o.total_partial_image_deficiency[k], scaled(partial_image[k], n));
    }

    if (sgn(o.function_count) == 0) continue;
    const Rational fc(o.function_count);
    add(n, "mean cyclic points", Rational(o.total_cyclic_points) / fc,
        expected_statistic(p, Statistic::cyclic_points(), n));
    add(n, "mean components", Rational(o.total_components) / fc,
        expected_statistic(p, Statistic::components(), n));
    for (std::uint32_t k = 0; k <= k_max; ++k) {
      const Rational deficiency = Rational(o.total_image_deficiency[k]) / fc;
      add(n, "mean image size k=" + std::to_string(k), Rational(n) - deficiency,
          expected_statistic(p, Statistic::image_size(k), n));
    }
  }
  return checks;
}

}  // namespace

std::size_t VerifyResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.pass(); }));
}

std::vector<PreimageConstraint> default_verify_constraints() {
  std::vector<PreimageConstraint> out = subsets_up_to(4);
  out.push_back(PreimageConstraint::all_nonnegative());
  return out;
}

VerifyResult verify_against_oracle(const std::vector<PreimageConstraint>& constraints,
                                   std::uint32_t n_max, std::uint32_t k_max, bool parallel) {
  if (n_max > kOracleCap) {
    throw CapExceeded("verification enumerates exhaustively and is capped at n = " +
                      std::to_string(kOracleCap));
  }
  VerifyResult result;
  if (!parallel) {
    for (const auto& p : constraints) {
      auto checks = verify_one(p, n_max, k_max);
      result.checks.insert(result.checks.end(), checks.begin(), checks.end());
    }
    return result;
  }
  std::vector<std::future<std::vector<VerifyCheck>>> jobs;
  for (const auto& p : constraints) {
    jobs.push_back(std::async(std::launch::async, verify_one, p, n_max, k_max));
  }
  for (auto& job : jobs) {
    auto checks = job.get();
    result.checks.insert(result.checks.end(), checks.begin(), checks.end());
  }
  return result;
}

}  // namespace mapenum
