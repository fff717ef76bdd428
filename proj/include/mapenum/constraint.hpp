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

#include "mapenum/rational.hpp"

namespace mapenum {

/// The set P of allowed preimage sizes: |f^{-1}(x)| must lie in P for every
/// point x. Either an explicit finite set or all of Z>=0.
class PreimageConstraint {
 public:
  enum class Kind { Finite, AllNonnegative };

  /// Sorts and deduplicates `elements`. Empty sets are allowed here because
  /// shifting can produce them; `classify` and the parser reject them.
  static PreimageConstraint finite(std::vector<std::uint32_t> elements);
  static PreimageConstraint all_nonnegative();

  /// Accepts "all" or a comma-separated list of nonnegative integers.
  /// Throws InvalidConstraint on anything else, including the empty list.
  static PreimageConstraint parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_all() const noexcept { return kind_ == Kind::AllNonnegative; }
  bool empty() const noexcept { return kind_ == Kind::Finite && elements_.empty(); }

  /// Sorted, strictly increasing; empty for AllNonnegative.
  const std::vector<std::uint32_t>& elements() const noexcept { return elements_; }

  bool contains(std::uint64_t n) const noexcept;

  /// Largest element; only meaningful for a nonempty finite set.
  std::uint32_t max_element() const;

  /// Inverse of `parse`: "all" or "0,3,4" ("" for the empty set).
  std::string to_string() const;

  friend bool operator==(const PreimageConstraint&, const PreimageConstraint&) = default;

 private:
  PreimageConstraint(Kind kind, std::vector<std::uint32_t> elements)
      : kind_(kind), elements_(std::move(elements)) {}

  Kind kind_ = Kind::Finite;
  std::vector<std::uint32_t> elements_;
};

/// P - i = {n - i : n in P} with negatives dropped.
PreimageConstraint shift(const PreimageConstraint& p, std::uint32_t i);

enum class Admissibility { ForcesPermutation, Admissible, AdmissibleAperiodic };

struct AdmissibilityClass {
  Admissibility tag;
  // gcd of the nonzero elements; 1 for AllNonnegative and for P = {0}.
  std::uint32_t period;
};

/// Throws InvalidConstraint for the empty finite set.
AdmissibilityClass classify(const PreimageConstraint& p);

/// 0 in P and P - 2 nonempty: the hypotheses the singular analysis needs.
bool is_admissible(const PreimageConstraint& p);

/// Every subset of {0, ..., max} (nonempty), ordered lexicographically by
/// element list.
std::vector<PreimageConstraint> subsets_up_to(std::uint32_t max);

/// Coefficients of e_P(z) = sum_{n in P} z^n / n! for degrees 0..order.
std::vector<Rational> e_coefficients(const PreimageConstraint& p, std::size_t order);

/// Lexicographic order on element lists, with "all" after every finite set.
bool constraint_less(const PreimageConstraint& a, const PreimageConstraint& b);

}  // namespace mapenum
