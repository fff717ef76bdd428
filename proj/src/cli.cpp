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


#include "mapenum/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "mapenum/asymptotics.hpp"
#include "mapenum/enumeration.hpp"
#include "mapenum/errors.hpp"
#include "mapenum/figures.hpp"
#include "mapenum/report.hpp"
#include "mapenum/verify.hpp"

namespace mapenum {

namespace {

struct Options {
  std::string constraint;
  std::string family;
  std::string stat;
  std::string backend = "exact";
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t order = 20;
  std::optional<std::uint32_t> n_max;
  std::optional<std::uint32_t> k_max;
  double tol = 1e-13;
  std::vector<std::string> ids;
  std::string out_dir = ".";
};

int do_count(const Options& o, std::ostream& out) {
  const auto p = PreimageConstraint::parse(o.constraint);
  out << to_json(count(p, parse_family(o.family, o.k), o.n)).dump(2) << "\n";
  return 0;
}

int do_series(const Options& o, std::ostream& out) {
  const auto p = PreimageConstraint::parse(o.constraint);
  const FamilyKind family = parse_family(o.family, o.k);
  nlohmann::json j = {{"constraint", p.to_string()},
                      {"family", family.name()},
                      {"order", o.order},
                      {"backend", o.backend}};
  if (o.backend == "exact") {
    j["coefficients"] = to_json(family_series<Rational>(p, family, o.order));
  } else {
    // Rescale by rho where it exists so large orders stay in range.
    const double scale = is_admissible(p) ? solve_singular(p).rho : 1.0;
    j["scale"] = scale;
    j["coefficients"] = to_json(family_series<double>(p, family, o.order, scale));
  }
  out << j.dump(2) << "\n";
  return 0;
}

int do_stat(const Options& o, std::ostream& out) {
  const auto p = PreimageConstraint::parse(o.constraint);
  const Statistic stat = parse_statistic(o.stat, o.k);
  const Rational value = expected_statistic(p, stat, o.n);
  nlohmann::json j = {{"constraint", p.to_string()},
                      {"stat", stat.name()},
                      {"n", o.n},
                      {"value", to_string(value)},
                      {"decimal", value.get_d()}};
  if (stat.tag == Statistic::Tag::ImageDeficiency || stat.tag == Statistic::Tag::ImageSize) {
    j["k"] = o.k;
  }
  out << j.dump(2) << "\n";
  return 0;
}

int do_asym(const Options& o, std::ostream& out, std::ostream& err) {
  const auto p = PreimageConstraint::parse(o.constraint);
  const SingularData s = solve_singular(p, o.tol);
  if (!s.aperiodic) {
    err << "warning: constraint " << p.to_string() << " has period " << s.period
        << "; the asymptotic estimates are unproven for it\n";
  }
  out << to_json(s, tau_sequence(s, o.k_max.value_or(20))).dump(2) << "\n";
  return 0;
}

int do_figures(const Options& o, std::ostream& out) {
  FigureOptions fo;
  if (o.n_max) fo.n_max = *o.n_max;
  if (o.k_max) fo.k_max = *o.k_max;
  const std::vector<std::string> ids = o.ids.empty() ? figure_ids() : o.ids;
  for (const auto& id : ids) {
    if (std::find(figure_ids().begin(), figure_ids().end(), id) == figure_ids().end()) {
      throw Error("unknown figure id '" + id + "'");
    }
  }
  std::filesystem::create_directories(o.out_dir);
  nlohmann::json written = nlohmann::json::array();
  for (const auto& id : ids) {
    const auto path = std::filesystem::path(o.out_dir) / (id + ".csv");
    std::ofstream file(path, std::ios::binary);
    file << figure_csv(id, fo);
    if (!file) throw Error("cannot write " + path.string());
    written.push_back(path.string());
  }
  out << nlohmann::json{{"written", written}}.dump(2) << "\n";
  return 0;
}

int do_verify(const Options& o, std::ostream& out) {
  const std::uint32_t n_max = o.n_max.value_or(6);
  const std::uint32_t k_max = o.k_max.value_or(6);
  const auto constraints = default_verify_constraints();
  const VerifyResult result = verify_against_oracle(constraints, n_max, k_max);

  out << std::left << std::setw(12) << "constraint" << std::setw(8) << "checks" << "result\n";
  for (const auto& p : constraints) {
    std::size_t total = 0, failed = 0;
    for (const auto& c : result.checks) {
      if (!(c.constraint == p)) continue;
      ++total;
      if (!c.pass()) ++failed;
    }
    out << std::setw(12) << p.to_string() << std::setw(8) << total
        << (failed ? "FAIL (" + std::to_string(failed) + ")" : std::string("pass")) << "\n";
  }
  for (const auto& c : result.checks) {
    if (c.pass()) continue;
    out << "mismatch: P=" << c.constraint.to_string() << " n=" << c.n << " " << c.quantity
        << ": oracle " << to_string(c.oracle) << ", series " << to_string(c.series) << "\n";
  }
  out << result.checks.size() - result.failures() << "/" << result.checks.size()
      << " checks passed\n";
  return result.all_pass() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and asymptotic enumeration of preimage-constrained mappings", "mapenum"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> families = {"tree", "bounded-tree", "function", "partial-function",
                                             "connected", "xi-image", "xi-partial-image",
                                             "xi-cyclic", "xi-component"};

  auto* count_cmd = app.add_subcommand("count", "exact count for one family and size");
  count_cmd->add_option("--constraint", o.constraint, "'all' or a list like 0,3,4")->required();
  count_cmd->add_option("--family", o.family)->required()->check(CLI::IsMember(families));
  count_cmd->add_option("--n", o.n)->required();
  count_cmd->add_option("--k,--height", o.k, "k for xi-image families, h for bounded-tree");

  auto* series_cmd = app.add_subcommand("series", "generating-function coefficients");
  series_cmd->add_option("--constraint", o.constraint)->required();
  series_cmd->add_option("--family", o.family)->required()->check(CLI::IsMember(families));
  series_cmd->add_option("--order", o.order);
  series_cmd->add_option("--backend", o.backend)->check(CLI::IsMember({"exact", "float"}));
  series_cmd->add_option("--k,--height", o.k);

  auto* stat_cmd = app.add_subcommand("stat", "exact mean of a statistic");
  stat_cmd->add_option("--constraint", o.constraint)->required();
  stat_cmd->add_option("--stat", o.stat)
      ->required()
      ->check(CLI::IsMember({"image-deficiency", "image-size", "cyclic-points", "components"}));
  stat_cmd->add_option("--k", o.k);
  stat_cmd->add_option("--n", o.n)->required();

  auto* asym_cmd = app.add_subcommand("asym", "singularity constants and tau_k");
  asym_cmd->add_option("--constraint", o.constraint)->required();
  asym_cmd->add_option("--k-max", o.k_max);
  asym_cmd->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

  auto* figures_cmd = app.add_subcommand("figures", "write figure datasets as CSV");
  figures_cmd->add_option("--id", o.ids, "figure id; repeatable, default all");
  figures_cmd->add_option("--n-max", o.n_max);
  figures_cmd->add_option("--k-max", o.k_max);
  figures_cmd->add_option("--out", o.out_dir);

  auto* verify_cmd = app.add_subcommand("verify", "compare series against exhaustive enumeration");
  verify_cmd->add_option("--n-max", o.n_max);
  verify_cmd->add_option("--k-max", o.k_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (count_cmd->parsed()) return do_count(o, out);
    if (series_cmd->parsed()) return do_series(o, out);
    if (stat_cmd->parsed()) return do_stat(o, out);
    if (asym_cmd->parsed()) return do_asym(o, out, err);
    if (figures_cmd->parsed()) return do_figures(o, out);
    if (verify_cmd->parsed()) return do_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mapenum
