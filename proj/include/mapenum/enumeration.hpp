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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapenum/constraint.hpp"
#include "mapenum/rational.hpp"
#include "mapenum/series.hpp"

namespace mapenum {

/// Generating-function families for P-constrained trees and mappings.
/// The Xi families sum a statistic over all constrained functions on [n].
struct FamilyKind {
  enum class Tag {
    Tree,
    BoundedTree,      // height <= param
    Function,
    PartialFunction,
    Connected,
    XiImage,          // points outside f^param([n])
    XiPartialImage,   // same, over partial functions
    XiCyclic,
    XiComponent,
  };

  Tag tag = Tag::Tree;
  std::uint32_t param = 0;

  static FamilyKind tree() { return {Tag::Tree, 0}; }
  static FamilyKind bounded_tree(std::uint32_t h) { return {Tag::BoundedTree, h}; }
  static FamilyKind function() { return {Tag::Function, 0}; }
  static FamilyKind partial_function() { return {Tag::PartialFunction, 0}; }
  static FamilyKind connected() { return {Tag::Connected, 0}; }
  static FamilyKind xi_image(std::uint32_t k) { return {Tag::XiImage, k}; }
  static FamilyKind xi_partial_image(std::uint32_t k) { return {Tag::XiPartialImage, k}; }
  static FamilyKind xi_cyclic() { return {Tag::XiCyclic, 0}; }
  static FamilyKind xi_component() { return {Tag::XiComponent, 0}; }

  /// Tree, BoundedTree, Function, PartialFunction and Connected count
  /// objects; the Xi families sum a statistic.
  bool is_counting() const;

  /// "tree", "bounded-tree", "function", "partial-function", "connected",
  /// "xi-image", "xi-partial-image", "xi-cyclic", "xi-component".
  std::string name() const;

  friend bool operator==(const FamilyKind&, const FamilyKind&) = default;
};

/// Parses a family name; `param` supplies h or k where the family needs one.
FamilyKind parse_family(std::string_view name, std::uint32_t param = 0);

/// The named generating function modulo z^(order+1). For double series a
/// rescaling factor may be passed (see series.hpp); exact series use 1.
/// When 0 is not in P every tree family is zero and F is 1/(1-z) or 1
/// depending on whether 1 is in P.
template <typename R>
Series<R> family_series(const PreimageConstraint& p, FamilyKind family, std::size_t order,
                        R scale = R(1));

extern template Series<Rational> family_series(const PreimageConstraint&, FamilyKind, std::size_t,
                                               Rational);
extern template Series<double> family_series(const PreimageConstraint&, FamilyKind, std::size_t,
                                             double);

/// Exact coefficient [z^n] and its n!-scaled integer for one family.
struct CountReport {
  std::uint32_t n = 0;
  FamilyKind family;
  PreimageConstraint constraint = PreimageConstraint::all_nonnegative();
  Rational coefficient;
  // n! * coefficient: the number of objects for counting families, the
  // summed statistic for Xi families.
  BigInt count;
  // Xi families only: coefficient / [z^n] F^P, when that is nonzero.
  std::optional<Rational> average;
};

/// Tree, Function and PartialFunction use the one-shot power formulas
///   [z^n] T = (1/n) [z^(n-1)] e_P^n,  [z^n] F = [z^n] e_P^n,
///   [z^n] P = [z^n] e_P^n e^z;
/// every other family goes through family_series.
CountReport count(const PreimageConstraint& p, FamilyKind family, std::uint32_t n);

/// Counts for n = 0..n_max of a counting family in one pass.
std::vector<BigInt> count_sequence(const PreimageConstraint& p, FamilyKind family,
                                   std::uint32_t n_max);

struct Statistic {
  enum class Tag { ImageDeficiency, ImageSize, CyclicPoints, Components };
  Tag tag = Tag::ImageSize;
  std::uint32_t k = 0;

  static Statistic image_deficiency(std::uint32_t k) { return {Tag::ImageDeficiency, k}; }
  static Statistic image_size(std::uint32_t k) { return {Tag::ImageSize, k}; }
  static Statistic cyclic_points() { return {Tag::CyclicPoints, 0}; }
  static Statistic components() { return {Tag::Components, 0}; }

  std::string name() const;
};

Statistic parse_statistic(std::string_view name, std::uint32_t k = 0);

/// Exact mean of the statistic over all P-constrained functions on [n].
/// Throws NoFunctionsOfThisSize when there are none.
Rational expected_statistic(const PreimageConstraint& p, Statistic stat, std::uint32_t n);

/// Double-precision means for n = 0..n_max from one rescaled series
/// pipeline; entries with no constrained functions are NaN. `scale` should
/// be close to the radius of convergence of F^P to keep values in range.
std::vector<double> approx_expected_statistic(const PreimageConstraint& p, Statistic stat,
                                              std::uint32_t n_max, double scale = 1.0);

}  // namespace mapenum
