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


#include "mapenum/oracle.hpp"

#include <array>
#include <bit>
#include <future>
#include <numeric>
#include <string>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

using Digits = std::array<std::uint8_t, kOracleCap>;

void check_cap(std::uint32_t n) {
  if (n > kOracleCap) {
    throw CapExceeded("exhaustive enumeration is capped at n = " + std::to_string(kOracleCap) +
                      ", got " + std::to_string(n));
  }
}

// Calls visit(d) for every d in [base]^len with d[0] fixed to `first`.
template <typename Visit>
void for_each_digits(std::uint32_t len, std::uint32_t base, std::uint8_t first, Visit&& visit) {
  Digits d{};
  d[0] = first;
  while (true) {
    visit(d);
    std::uint32_t i = 1;
    while (i < len && ++d[i] == base) d[i++] = 0;
    if (i >= len) return;
  }
}

struct Tally {
  std::uint64_t functions = 0;
  std::uint64_t partials = 0;
  std::uint64_t connected = 0;
  std::uint64_t cyclic = 0;
  std::uint64_t components = 0;
  std::vector<std::uint64_t> deficiency;
  std::vector<std::uint64_t> partial_deficiency;

  explicit Tally(std::uint32_t k_max) : deficiency(k_max + 1), partial_deficiency(k_max + 1) {}

  void merge(const Tally& o) {
    functions += o.functions;
    partials += o.partials;
    connected += o.connected;
    cyclic += o.cyclic;
    components += o.components;
    for (std::size_t k = 0; k < deficiency.size(); ++k) {
      deficiency[k] += o.deficiency[k];
      partial_deficiency[k] += o.partial_deficiency[k];
    }
  }
};

// Value n marks "undefined" in a partial function.
bool satisfies(const Digits& f, std::uint32_t n, const std::vector<bool>& allowed) {
  std::array<std::uint32_t, kOracleCap + 1> preimages{};
  for (std::uint32_t x = 0; x < n; ++x) ++preimages[f[x]];
  for (std::uint32_t y = 0; y < n; ++y) {
    if (!allowed[preimages[y]]) return false;
  }
  return true;
}

// Adds n - |f^k([n])| for k = 0..k_max; sets stop changing once the image
// stabilizes.
void add_deficiencies(const Digits& f, std::uint32_t n, std::vector<std::uint64_t>& out) {
  std::uint32_t image = (1u << n) - 1;
  for (std::size_t k = 1; k < out.size(); ++k) {
    std::uint32_t next = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
      if ((image >> x & 1u) && f[x] < n) next |= 1u << f[x];
    }
    const bool stable = next == image;
    image = next;
    const std::uint64_t missing = n - static_cast<std::uint32_t>(std::popcount(image));
    if (stable) {
      for (; k < out.size(); ++k) out[k] += missing;
      return;
    }
    out[k] += missing;
  }
}

std::uint32_t cyclic_points(const Digits& f, std::uint32_t n) {
  std::uint32_t cyclic = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (cyclic >> x & 1u) continue;
    std::uint32_t y = x;
    for (std::uint32_t i = 0; i < n; ++i) y = f[y];
    std::uint32_t z = y;
    do {
      cyclic |= 1u << z;
      z = f[z];
    } while (z != y);
  }
  return static_cast<std::uint32_t>(std::popcount(cyclic));
}

std::uint32_t component_count(const Digits& f, std::uint32_t n) {
  std::array<std::uint32_t, kOracleCap> parent{};
  std::iota(parent.begin(), parent.begin() + n, 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint32_t components = n;
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t a = find(x), b = find(f[x]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

Tally tally_slice(std::uint32_t n, std::uint32_t k_max, std::uint8_t first,
                  const std::vector<bool>& allowed) {
  Tally t(k_max);
  if (first < n) {
    for_each_digits(n, n, first, [&](const Digits& f) {
      if (!satisfies(f, n, allowed)) return;
      ++t.functions;
      add_deficiencies(f, n, t.deficiency);
      t.cyclic += cyclic_points(f, n);
      const std::uint32_t c = component_count(f, n);
      t.components += c;
      if (c == 1) ++t.connected;
    });
  }
  for_each_digits(n, n + 1, first, [&](const Digits& f) {
    if (!satisfies(f, n, allowed)) return;
    ++t.partials;
    add_deficiencies(f, n, t.partial_deficiency);
  });
  return t;
}

std::vector<bool> allowed_counts(const PreimageConstraint& p, std::uint32_t n) {
  std::vector<bool> allowed(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) allowed[i] = p.contains(i);
  return allowed;
}

BigInt big(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

OracleSummary enumerate(const PreimageConstraint& p, std::uint32_t n, std::uint32_t k_max) {
  check_cap(n);
  OracleSummary s;
  s.n = n;
  s.constraint = p;
  s.tree_count = enumerate_trees(p, n);
  s.total_image_deficiency.assign(k_max + 1, 0);
  s.total_partial_image_deficiency.assign(k_max + 1, 0);
  if (n == 0) {
    // The empty function is vacuously constrained, has no components and
    // is not connected.
    s.function_count = 1;
    s.partial_function_count = 1;
    return s;
  }

  const std::vector<bool> allowed = allowed_counts(p, n);
  std::vector<std::future<Tally>> slices;
  for (std::uint32_t first = 0; first <= n; ++first) {
    slices.push_back(std::async(std::launch::async, tally_slice, n, k_max,
                                static_cast<std::uint8_t>(first), std::cref(allowed)));
  }
  Tally total(k_max);
  for (auto& slice : slices) total.merge(slice.get());

  s.function_count = big(total.functions);
  s.partial_function_count = big(total.partials);
  s.connected_count = big(total.connected);
  s.total_cyclic_points = big(total.cyclic);
  s.total_components = big(total.components);
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    s.total_image_deficiency[k] = big(total.deficiency[k]);
    s.total_partial_image_deficiency[k] = big(total.partial_deficiency[k]);
  }
  return s;
}

BigInt enumerate_trees(const PreimageConstraint& p, std::uint32_t n) {
  check_cap(n);
  if (n == 0) return 0;
  const std::vector<bool> allowed = allowed_counts(p, n);

  auto count_root = [&](std::uint32_t root) {
    std::uint64_t trees = 0;
    // Parent maps on the n - 1 non-root vertices, enumerated as digits.
    std::array<std::uint32_t, kOracleCap> others{};
    std::uint32_t m = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (v != root) others[m++] = v;
    }
    std::array<std::uint32_t, kOracleCap> digit{};
    while (true) {
      std::array<std::uint32_t, kOracleCap> parent{};
      std::array<std::uint32_t, kOracleCap + 1> children{};
      for (std::uint32_t i = 0; i < m; ++i) {
        parent[others[i]] = digit[i];
        ++children[digit[i]];
      }
      bool ok = true;
      for (std::uint32_t v = 0; v < n && ok; ++v) ok = allowed[children[v]];
      for (std::uint32_t i = 0; i < m && ok; ++i) {
        std::uint32_t v = others[i];
        std::uint32_t steps = 0;
        while (v != root && steps++ < n) v = parent[v];
        ok = v == root;
      }
      if (ok) ++trees;

      std::uint32_t i = 0;
      while (i < m && ++digit[i] == n) digit[i++] = 0;
      if (i >= m) break;
    }
    return trees;
  };

  std::vector<std::future<std::uint64_t>> roots;
  for (std::uint32_t r = 0; r < n; ++r) roots.push_back(std::async(std::launch::async, count_root, r));
  std::uint64_t total = 0;
  for (auto& r : roots) total += r.get();
  return big(total);
}

}  // namespace mapenum
