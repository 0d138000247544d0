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

// Rank-table kernels shared by the library's translation units.

#ifndef MCON_SRC_INTERNAL_HPP_
#define MCON_SRC_INTERNAL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mcon/element_set.hpp"
#include "mcon/matroid.hpp"

namespace mcon::detail {

// Packs the bits of mask selected by kept into the low bits (pext).
inline std::uint64_t compress(std::uint64_t mask, std::uint64_t kept) {
  std::uint64_t out = 0;
  int pos = 0;
  for (std::uint64_t k = kept; k != 0; k &= k - 1, ++pos) {
    if ((mask & k & (~k + 1)) != 0) out |= bit(pos);
  }
  return out;
}

// Inverse of compress (pdep).
inline std::uint64_t expand(std::uint64_t packed, std::uint64_t kept) {
  std::uint64_t out = 0;
  int pos = 0;
  for (std::uint64_t k = kept; k != 0; k &= k - 1, ++pos) {
    if ((packed >> pos) & 1U) out |= k & (~k + 1);
  }
  return out;
}

// Rank table of M \ deleted / contracted, relabeled onto the survivors.
std::vector<std::uint8_t> minor_table(std::span<const std::uint8_t> table, int n,
                                      std::uint64_t deleted,
                                      std::uint64_t contracted);

Matroid minor(const Matroid& m, std::uint64_t deleted, std::uint64_t contracted);

// Rank table from an independence indicator over all 2^n masks.
std::vector<std::uint8_t> table_from_independent(int n,
                                                 const std::vector<std::uint8_t>& indep);

inline int corank_in(std::span<const std::uint8_t> table, int n,
                     std::uint64_t x) {
  const std::uint64_t all = full_mask(n);
  return popcount(x) + table[all & ~x] - table[all];
}

inline bool is_circuit_mask(std::span<const std::uint8_t> table,
                            std::uint64_t x) {
  const int s = popcount(x);
  if (s == 0 || table[x] != s - 1) return false;
  for (std::uint64_t b = x; b != 0; b &= b - 1) {
    if (table[x ^ (b & (~b + 1))] != s - 1) return false;
  }
  return true;
}

inline bool is_cocircuit_mask(std::span<const std::uint8_t> table, int n,
                              std::uint64_t x) {
  const int s = popcount(x);
  if (s == 0 || corank_in(table, n, x) != s - 1) return false;
  for (std::uint64_t b = x; b != 0; b &= b - 1) {
    if (corank_in(table, n, x ^ (b & (~b + 1))) != s - 1) return false;
  }
  return true;
}

// True iff the minor (M / contracted) | kept is Tutte level-connected.
// kept and contracted are disjoint masks over the table's ground set.
bool minor_is_k_connected(std::span<const std::uint8_t> table, std::uint64_t kept,
                          std::uint64_t contracted, int level);

// Lowest-mask side X of a k-separation of (M / contracted) | kept, or 0.
// Sides never contain the highest kept element.
std::uint64_t minor_k_separation(std::span<const std::uint8_t> table,
                                 std::uint64_t kept, std::uint64_t contracted,
                                 int k, int min_side);

bool is_simple_table(std::span<const std::uint8_t> table, int n);

}  // namespace mcon::detail

#endif  // MCON_SRC_INTERNAL_HPP_
