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

#include "mapenum/constraint.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

PreimageConstraint PreimageConstraint::finite(std::vector<std::uint32_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return PreimageConstraint(Kind::Finite, std::move(elements));
}

PreimageConstraint PreimageConstraint::all_nonnegative() {
  return PreimageConstraint(Kind::AllNonnegative, {});
}

PreimageConstraint PreimageConstraint::parse(std::string_view text) {
  text = trim(text);
  if (text == "all") return all_nonnegative();
  if (text.empty()) throw InvalidConstraint("empty constraint; expected 'all' or a list like 0,3,4");

  std::vector<std::uint32_t> elements;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    std::uint32_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw InvalidConstraint("bad constraint element '" + std::string(token) +
                              "'; expected a nonnegative integer");
    }
    elements.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return finite(std::move(elements));
}

bool PreimageConstraint::contains(std::uint64_t n) const noexcept {
  if (is_all()) return true;
  return std::binary_search(elements_.begin(), elements_.end(), n,
                            [](auto a, auto b) { return static_cast<std::uint64_t>(a) < b; });
}

std::uint32_t PreimageConstraint::max_element() const {
  if (is_all() || elements_.empty()) throw InvalidConstraint("max_element of " + to_string());
  return elements_.back();
}

std::string PreimageConstraint::to_string() const {
  if (is_all()) return "all";
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

PreimageConstraint shift(const PreimageConstraint& p, std::uint32_t i) {
  if (p.is_all()) return p;
  std::vector<std::uint32_t> shifted;
  for (auto n : p.elements()) {
    if (n >= i) shifted.push_back(n - i);
  }
  return PreimageConstraint::finite(std::move(shifted));
}

AdmissibilityClass classify(const PreimageConstraint& p) {
  if (p.empty()) throw InvalidConstraint("the empty constraint admits no functions");
  if (p.is_all()) return {Admissibility::AdmissibleAperiodic, 1};

  std::uint32_t period = 0;
  for (auto n : p.elements()) period = std::gcd(period, n);
  if (period == 0) period = 1;  // P = {0}

  if (!p.contains(0) || p.max_element() <= 1) return {Admissibility::ForcesPermutation, period};
  if (period == 1) return {Admissibility::AdmissibleAperiodic, period};
  return {Admissibility::Admissible, period};
}

bool is_admissible(const PreimageConstraint& p) {
  return !p.empty() && p.contains(0) && !shift(p, 2).empty();
}

std::vector<PreimageConstraint> subsets_up_to(std::uint32_t max) {
  std::vector<PreimageConstraint> out;
  for (std::uint32_t mask = 1; mask < (1u << (max + 1)); ++mask) {
    std::vector<std::uint32_t> elements;
    for (std::uint32_t i = 0; i <= max; ++i) {
      if (mask & (1u << i)) elements.push_back(i);
    }
    out.push_back(PreimageConstraint::finite(std::move(elements)));
  }
  std::sort(out.begin(), out.end(), constraint_less);
  return out;
}

std::vector<Rational> e_coefficients(const PreimageConstraint& p, std::size_t order) {
  std::vector<Rational> out(order + 1);
  BigInt fact = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    if (p.contains(n)) out[n] = Rational(BigInt(1), fact);
  }
  return out;
}

bool constraint_less(const PreimageConstraint& a, const PreimageConstraint& b) {
  if (a.is_all() != b.is_all()) return b.is_all();
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                      b.elements().begin(), b.elements().end());
}

}  // namespace mapenum
