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

#include "mcon/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "internal.hpp"
#include "mcon/coverage.hpp"
#include "mcon/error.hpp"

namespace mcon {
namespace detail {

namespace {

std::uint64_t top_bit(std::uint64_t mask) {
  return mask == 0 ? 0 : std::uint64_t{1} << (63 - std::countl_zero(mask));
}

}  // namespace

bool minor_is_k_connected(std::span<const std::uint8_t> table, std::uint64_t kept,
                          std::uint64_t contracted, int level) {
  const int n = popcount(kept);
  const int cap = level - 1;
  if (cap <= 0 || n < 2) return true;
  const int base = table[kept | contracted] + table[contracted];
  auto violates = [&](std::uint64_t x) {
    const int sx = popcount(x);
    const int bound = std::min({sx, n - sx, cap});
    const int lam = table[x | contracted] + table[(kept & ~x) | contracted] - base;
    return lam < bound;
  };
  // Loops, coloops, parallel and series pairs are the common failures.
  for (std::uint64_t a = kept; a != 0; a &= a - 1) {
    const std::uint64_t ea = a & (~a + 1);
    if (violates(ea)) return false;
  }
  if (cap >= 2 && n >= 4) {
    for (std::uint64_t a = kept; a != 0; a &= a - 1) {
      const std::uint64_t ea = a & (~a + 1);
      for (std::uint64_t b = a & (a - 1); b != 0; b &= b - 1) {
        if (violates(ea | (b & (~b + 1)))) return false;
      }
    }
    if (n < 6 && cap == 2) return true;  // every side of size >= 2 was tried
  }
  const std::uint64_t low = kept & ~top_bit(kept);
  bool ok = true;
  for_each_submask(low, [&](std::uint64_t x) {
    if (ok && x != 0 && violates(x)) ok = false;
  });
  return ok;
}

std::uint64_t minor_k_separation(std::span<const std::uint8_t> table,
                                 std::uint64_t kept, std::uint64_t contracted,
                                 int k, int min_side) {
  const int n = popcount(kept);
  if (n < 2 * min_side || n < 2) return 0;
  const int base = table[kept | contracted] + table[contracted];
  const std::uint64_t low = kept & ~top_bit(kept);
  std::uint64_t found = 0;
  for_each_submask(low, [&](std::uint64_t x) {
    if (found != 0 || x == 0) return;
    const int sx = popcount(x);
    if (std::min(sx, n - sx) < min_side) return;
    const int lam = table[x | contracted] + table[(kept & ~x) | contracted] - base;
    if (lam <= k - 1) found = x;
  });
  return found;
}

bool is_simple_table(std::span<const std::uint8_t> table, int n) {
  for (int e = 0; e < n; ++e) {
    if (table[bit(e)] == 0) return false;
    for (int f = e + 1; f < n; ++f) {
      if (table[bit(e) | bit(f)] == 1) return false;
    }
  }
  return true;
}

}  // namespace detail

namespace {

void require_level(int level) {
  if (level < 2) {
    throw InputError("connectivity level must be at least 2; got " +
                     std::to_string(level));
  }
}

// True iff some proper subset S with |S| >= min_size gives a level-connected
// restriction. Non-simple restrictions are skipped for level 3 and |S| >= 4.
bool has_proper_connected_restriction(const Matroid& m, int level, int min_size) {
  const auto table = m.rank_table();
  const int n = m.size();
  std::uint64_t loops = 0;
  std::vector<std::uint64_t> parallel_pairs;
  for (int e = 0; e < n; ++e) {
    if (table[bit(e)] == 0) loops |= bit(e);
  }
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      if (((loops >> e) & 1U) == 0 && ((loops >> f) & 1U) == 0 &&
          table[bit(e) | bit(f)] == 1) {
        parallel_pairs.push_back(bit(e) | bit(f));
      }
    }
  }
  const bool prune = level == 3;
  for (int s = std::max(min_size, 0); s < n; ++s) {
    bool found = false;
    detail::for_each_combination(n, s, [&](std::uint64_t x) {
      if (found) return;
      if (prune && s >= 4) {
        if ((x & loops) != 0) return;
        for (std::uint64_t p : parallel_pairs) {
          if ((x & p) == p) return;
        }
      }
      if (detail::minor_is_k_connected(table, x, 0, level)) found = true;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace

int lambda(const Matroid& m, const ElementSet& x) {
  note_op(Op::kLambda);
  if (x.ground_size() != m.size()) {
    throw InputError("element set ground size does not match the matroid");
  }
  return m.rank_of(x.bits()) + m.rank_of(full_mask(m.size()) & ~x.bits()) - m.rank();
}

std::optional<SeparationWitness> find_k_separation(const Matroid& m, int k,
                                                   bool require_nonminimal) {
  note_op(Op::kFindKSeparation);
  if (k < 1) throw InputError("separation order must be at least 1");
  const auto table = m.rank_table();
  const int n = m.size();
  const std::uint64_t x = detail::minor_k_separation(
      table, full_mask(n), 0, k, require_nonminimal ? k + 1 : k);
  if (x == 0) return std::nullopt;
  SeparationWitness w;
  w.side = ElementSet(n, x);
  w.order = k;
  w.lambda_value = table[x] + table[full_mask(n) & ~x] - m.rank();
  w.nonminimal = std::min(popcount(x), n - popcount(x)) >= k + 1;
  return w;
}

bool is_k_connected(const Matroid& m, int level) {
  note_op(Op::kIsKConnected);
  require_level(level);
  return detail::minor_is_k_connected(m.rank_table(), full_mask(m.size()), 0, level);
}

bool is_minimally_k_connected(const Matroid& m, int level) {
  note_op(Op::kIsMinimallyKConnected);
  require_level(level);
  const auto table = m.rank_table();
  const std::uint64_t all = full_mask(m.size());
  if (!detail::minor_is_k_connected(table, all, 0, level)) return false;
  for (int e = 0; e < m.size(); ++e) {
    if (detail::minor_is_k_connected(table, all & ~bit(e), 0, level)) return false;
  }
  return true;
}

bool is_super_minimally_k_connected(const Matroid& m, int k) {
  note_op(Op::kIsSuperMinimallyKConnected);
  require_level(k);
  const auto table = m.rank_table();
  if (!detail::minor_is_k_connected(table, full_mask(m.size()), 0, k)) return false;
  return !has_proper_connected_restriction(m, k, 2 * k - 2);
}

bool is_simple(const Matroid& m) {
  return detail::is_simple_table(m.rank_table(), m.size());
}

bool is_brittle(const Matroid& m) {
  note_op(Op::kIsBrittle);
  if (!is_simple(m)) {
    throw InputError("brittleness is defined for simple matroids only");
  }
  const auto table = m.rank_table();
  if (m.size() >= 4 &&
      detail::minor_is_k_connected(table, full_mask(m.size()), 0, 3)) {
    return false;
  }
  return !has_proper_connected_restriction(m, 3, 4);
}

std::vector<ElementSet> triangles(const Matroid& m) {
  note_op(Op::kTriangles);
  auto all = circuits(m, 3);
  std::erase_if(all, [](const ElementSet& c) { return c.count() != 3; });
  return all;
}

std::vector<ElementSet> triads(const Matroid& m) {
  note_op(Op::kTriads);
  auto all = cocircuits(m, 3);
  std::erase_if(all, [](const ElementSet& c) { return c.count() != 3; });
  return all;
}

ElementSet essential_elements(const Matroid& m) {
  note_op(Op::kEssentialElements);
  const auto table = m.rank_table();
  const int n = m.size();
  const std::uint64_t all = full_mask(n);
  if (!detail::minor_is_k_connected(table, all, 0, 3)) {
    throw InputError("essential elements are defined for 3-connected matroids only");
  }
  std::uint64_t out = 0;
  for (int e = 0; e < n; ++e) {
    const std::uint64_t rest = all & ~bit(e);
    if (!detail::minor_is_k_connected(table, rest, 0, 3) &&
        !detail::minor_is_k_connected(table, rest, bit(e), 3)) {
      out |= bit(e);
    }
  }
  return ElementSet(n, out);
}

int elements_in_triads(const Matroid& m) {
  note_op(Op::kElementsInTriads);
  std::uint64_t covered = 0;
  for (const auto& t : triads(m)) covered |= t.bits();
  return popcount(covered);
}

PropertyFlags compute_flags(const Matroid& m) {
  PropertyFlags f;
  const auto table = m.rank_table();
  const int n = m.size();
  const std::uint64_t all = full_mask(n);
  f.is_3connected = detail::minor_is_k_connected(table, all, 0, 3);
  if (f.is_3connected) {
    f.is_min_3connected = true;
    for (int e = 0; e < n && f.is_min_3connected; ++e) {
      if (detail::minor_is_k_connected(table, all & ~bit(e), 0, 3)) {
        f.is_min_3connected = false;
      }
    }
  }
  const bool simple = detail::is_simple_table(table, n);
  if (f.is_3connected || simple) {
    // One scan decides both sm3c and brittleness.
    const bool proper = has_proper_connected_restriction(m, 3, 4);
    f.is_sm_3connected = f.is_3connected && !proper;
    f.is_brittle = simple && !proper && !(n >= 4 && f.is_3connected);
  }
  f.triangle_count = static_cast<int>(triangles(m).size());
  const auto tri = triads(m);
  f.triad_count = static_cast<int>(tri.size());
  std::uint64_t covered = 0;
  for (const auto& t : tri) covered |= t.bits();
  f.elements_in_triads = popcount(covered);
  if (f.is_3connected) f.essential_count = essential_elements(m).count();
  return f;
}

}  // namespace mcon
