// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCON_CANONICAL_HPP_
#define MCON_CANONICAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcon/matroid.hpp"

namespace mcon {

inline constexpr int kMaxCanonicalSize = 12;

// Basis indicator over the r-subsets of {0..n-1} taken in increasing mask
// order, minimized lexicographically over relabelings of the ground set.
struct CanonicalForm {
  int n = 0;
  int r = 0;
  std::vector<std::uint8_t> bits;  // one entry (0 or 1) per r-subset

  // "cf1:n<n>-r<r>-<hex>", bits packed most significant first.
  std::string to_string() const;
  // Throws InputError on malformed text or a non-matroid basis family.
  static CanonicalForm parse(std::string_view text);
  Matroid decode() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a,
                                          const CanonicalForm& b);
};

// Throws CapacityError for n > 12.
CanonicalForm canonical_form(const Matroid& m);

bool are_isomorphic(const Matroid& a, const Matroid& b);

// Backtracking search; result[e] is the element of b matched to e of a.
// Works up to n = 24.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);

// Element e of m becomes element perm[e] of the result.
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

// Per-element isomorphism invariants used to prune both searches.
std::vector<std::vector<int>> element_invariants(const Matroid& m);

}  // namespace mcon

#endif  // MCON_CANONICAL_HPP_
