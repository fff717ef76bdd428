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


#include "mapenum/report.hpp"

#include <cmath>

namespace mapenum {

nlohmann::json to_json(const CountReport& report) {
  nlohmann::json j = {
      {"constraint", report.constraint.to_string()},
      {"family", report.family.name()},
      {"n", report.n},
      {"count", to_string(report.count)},
      {"coefficient", to_string(report.coefficient)},
  };
  if (report.family.tag == FamilyKind::Tag::BoundedTree) j["h"] = report.family.param;
  if (report.family.tag == FamilyKind::Tag::XiImage ||
      report.family.tag == FamilyKind::Tag::XiPartialImage) {
    j["k"] = report.family.param;
  }
  if (report.average) j["average"] = to_string(*report.average);
  return j;
}

nlohmann::json to_json(const TruncatedSeries& series) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : series.coefficients()) out.push_back(to_string(c));
  return out;
}

nlohmann::json to_json(const FloatSeries& series) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t n = 0; n <= series.order(); ++n) {
    const double v = true_coefficient(series, n);
    if (std::isfinite(v)) {
      out.push_back(v);
    } else {
      out.push_back(nullptr);
    }
  }
  return out;
}

nlohmann::json to_json(const SingularData& s, const std::vector<double>& tau_k) {
  return {
      {"constraint", s.constraint.to_string()},
      {"tau", s.tau},
      {"rho", s.rho},
      {"e_tau", s.e_tau},
      {"e_m1_tau", s.e_m1_tau},
      {"e_m2_tau", s.e_m2_tau},
      {"period", s.period},
      {"aperiodic", s.aperiodic},
      {"unproven", !s.aperiodic},
      {"cyclic_constant", cyclic_constant(s)},
      {"tau_k", tau_k},
  };
}

nlohmann::json to_json(const OracleSummary& summary) {
  auto strings = [](const std::vector<BigInt>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
  };
  return {
      {"n", summary.n},
      {"constraint", summary.constraint.to_string()},
      {"function_count", to_string(summary.function_count)},
      {"partial_function_count", to_string(summary.partial_function_count)},
      {"tree_count", to_string(summary.tree_count)},
      {"connected_count", to_string(summary.connected_count)},
      {"total_cyclic_points", to_string(summary.total_cyclic_points)},
      {"total_components", to_string(summary.total_components)},
      {"total_image_deficiency", strings(summary.total_image_deficiency)},
      {"total_partial_image_deficiency", strings(summary.total_partial_image_deficiency)},
  };
}

}  // namespace mapenum
