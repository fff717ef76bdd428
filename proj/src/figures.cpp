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


#include "mapenum/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numbers>

#include "mapenum/asymptotics.hpp"
#include "mapenum/enumeration.hpp"
#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

using Column = std::vector<double>;

std::vector<PreimageConstraint> admissible_subsets(bool want_aperiodic) {
  std::vector<PreimageConstraint> out;
  for (const auto& p : subsets_up_to(4)) {
    if (!is_admissible(p)) continue;
    if ((classify(p).period == 1) == want_aperiodic) out.push_back(p);
  }
  return out;
}

std::vector<PreimageConstraint> all_admissible_subsets() {
  std::vector<PreimageConstraint> out;
  for (const auto& p : subsets_up_to(4)) {
    if (is_admissible(p)) out.push_back(p);
  }
  return out;
}

std::string header_cell(const std::string& name) {
  return name.find(',') == std::string::npos ? name : "\"" + name + "\"";
}

// Evaluates one column per constraint concurrently; columns keep the order
// of `constraints`.
std::vector<Column> columns(const std::vector<PreimageConstraint>& constraints,
                            const std::function<Column(const PreimageConstraint&)>& make) {
  std::vector<std::future<Column>> jobs;
  for (const auto& p : constraints) jobs.push_back(std::async(std::launch::async, make, p));
  std::vector<Column> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

// Rows are labelled first..first+rows-1 under `index`.
std::string table(const std::string& index, std::uint32_t first, std::size_t rows,
                  const std::vector<std::string>& names, const std::vector<Column>& cols) {
  std::string out = index;
  for (const auto& name : names) out += "," + header_cell(name);
  out += "\n";
  for (std::size_t r = 0; r < rows; ++r) {
    out += std::to_string(first + r);
    for (const auto& col : cols) out += "," + format_number(col[r]);
    out += "\n";
  }
  return out;
}

std::vector<std::string> names_of(const std::vector<PreimageConstraint>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string count_figure(const std::vector<PreimageConstraint>& ps, FamilyKind family,
                         std::uint32_t n_max) {
  auto cols = columns(ps, [&](const PreimageConstraint& p) {
    const auto counts = count_sequence(p, family, n_max);
    Column c;
    for (std::uint32_t n = 1; n <= n_max; ++n) c.push_back(log2_of(counts[n]));
    return c;
  });
  return table("n", 1, n_max, names_of(ps), cols);
}

std::string overlay_figure(const PreimageConstraint& p, std::uint32_t n_max) {
  const SingularData s = solve_singular(p);
  const auto trees = count_sequence(p, FamilyKind::tree(), n_max);
  const auto functions = count_sequence(p, FamilyKind::function(), n_max);
  std::vector<Column> cols(4);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    // log2(n! * estimate of [z^n])
    const double log2_fact = std::lgamma(n + 1.0) / std::numbers::ln2;
    cols[0].push_back(log2_of(trees[n]));
    cols[1].push_back(coefficient_asymptote(s, FamilyKind::tree(), n).log_value / std::numbers::ln2 +
                      log2_fact);
    cols[2].push_back(log2_of(functions[n]));
    cols[3].push_back(
        coefficient_asymptote(s, FamilyKind::function(), n).log_value / std::numbers::ln2 +
        log2_fact);
  }
  return table("n", 1, n_max, {"tree_exact", "tree_asymptote", "function_exact", "function_asymptote"},
               cols);
}

std::string tau_k_figure(std::uint32_t k_max) {
  auto ps = aperiodic_figure_constraints();
  ps.push_back(PreimageConstraint::all_nonnegative());
  auto cols = columns(ps, [&](const PreimageConstraint& p) {
    Column c = log2_image_ratio(solve_singular(p), k_max);
    c.erase(c.begin());
    return c;
  });
  return table("k", 1, k_max, names_of(ps), cols);
}

std::string coalescence_figure(std::uint32_t k_max) {
  const auto ps = aperiodic_figure_constraints();
  const Column base = log2_image_ratio(solve_singular(PreimageConstraint::all_nonnegative()), k_max);
  auto cols = columns(ps, [&](const PreimageConstraint& p) {
    const Column own = log2_image_ratio(solve_singular(p), k_max);
    Column c;
    for (std::uint32_t k = 1; k <= k_max; ++k) c.push_back(own[k] - base[k]);
    return c;
  });
  return table("k", 1, k_max, names_of(ps), cols);
}

std::string cyclic_vs_coalescence_figure(std::uint32_t k_max) {
  std::string out = "constraint,cyclic_constant,coalescence\n";
  for (const auto& p : aperiodic_figure_constraints()) {
    const SingularData s = solve_singular(p);
    out += header_cell(p.to_string()) + "," + format_number(cyclic_constant(s)) + "," +
           format_number(coalescence_metric(s, k_max)) + "\n";
  }
  return out;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {
      "tree-counts",  "tree-counts-periodic", "function-counts", "function-counts-periodic",
      "partial-function-counts", "overlay-034", "overlay-04", "tau-k", "coalescence",
      "cyclic-vs-coalescence"};
  return ids;
}

std::vector<PreimageConstraint> aperiodic_figure_constraints() { return admissible_subsets(true); }

std::vector<PreimageConstraint> periodic_figure_constraints() { return admissible_subsets(false); }

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string figure_csv(std::string_view id, const FigureOptions& options) {
  const std::uint32_t n_max = options.n_max;
  const std::uint32_t k_max = options.k_max;
  if (id == "tree-counts") return count_figure(aperiodic_figure_constraints(), FamilyKind::tree(), n_max);
  if (id == "tree-counts-periodic") {
    return count_figure(periodic_figure_constraints(), FamilyKind::tree(), n_max);
  }
  if (id == "function-counts") {
    return count_figure(aperiodic_figure_constraints(), FamilyKind::function(), n_max);
  }
  if (id == "function-counts-periodic") {
    return count_figure(periodic_figure_constraints(), FamilyKind::function(), n_max);
  }
  if (id == "partial-function-counts") {
    return count_figure(all_admissible_subsets(), FamilyKind::partial_function(), n_max);
  }
  if (id == "overlay-034") return overlay_figure(PreimageConstraint::finite({0, 3, 4}), n_max);
  if (id == "overlay-04") return overlay_figure(PreimageConstraint::finite({0, 4}), n_max);
  if (id == "tau-k") return tau_k_figure(k_max);
  if (id == "coalescence") return coalescence_figure(k_max);
  if (id == "cyclic-vs-coalescence") return cyclic_vs_coalescence_figure(k_max);
  throw Error("unknown figure id '" + std::string(id) + "'");
}

}  // namespace mapenum
