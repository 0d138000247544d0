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

#include "mcon/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "mcon/coverage.hpp"
#include "mcon/error.hpp"

namespace mcon {

struct Matroid::Cache {
  std::once_flag table_once;
  std::vector<std::uint8_t> table;
  std::once_flag bases_once;
  std::vector<std::uint64_t> bases;
};

namespace {

int modular_inverse(int a, int p) {
  int result = 1;
  for (int i = 0; i < p - 2; ++i) result = (result * a) % p;
  return result;
}

int linear_rank(const LinearRep& rep, std::uint64_t mask) {
  const int p = rep.field;
  std::vector<std::vector<int>> cols;
  for (std::uint64_t b = mask; b != 0; b &= b - 1) {
    const int e = std::countr_zero(b);
    std::vector<int> col(rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) col[i] = rep.rows[i][e];
    cols.push_back(std::move(col));
  }
  // Gaussian elimination on the selected columns (treated as rows).
  const int height = static_cast<int>(rep.rows.size());
  int rank = 0;
  for (int pivot_row = 0; pivot_row < height && rank < static_cast<int>(cols.size());
       ++pivot_row) {
    int found = -1;
    for (int c = rank; c < static_cast<int>(cols.size()); ++c) {
      if (cols[c][pivot_row] != 0) {
        found = c;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(cols[rank], cols[found]);
    const int inv = modular_inverse(cols[rank][pivot_row], p);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
      if (c == rank || cols[c][pivot_row] == 0) continue;
      const int factor = (cols[c][pivot_row] * inv) % p;
      for (int i = 0; i < height; ++i) {
        cols[c][i] = ((cols[c][i] - factor * cols[rank][i]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

int graphic_rank(const GraphicRep& rep, std::uint64_t mask) {
  std::vector<int> parent(rep.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int rank = 0;
  for (std::uint64_t b = mask; b != 0; b &= b - 1) {
    const auto [u, v] = rep.edges[std::countr_zero(b)];
    const int ru = find(u);
    const int rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      ++rank;
    }
  }
  return rank;
}

// Rank table from a basis family: mark independent sets by downward
// propagation, then take the largest independent subset size.
std::vector<std::uint8_t> table_from_bases(int n,
                                           const std::vector<std::uint64_t>& bases) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint8_t> indep(size, 0);
  for (std::uint64_t b : bases) indep[b] = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t bi = bit(i);
    for (std::uint64_t x = 0; x < size; ++x) {
      if ((x & bi) != 0 && indep[x] != 0) indep[x ^ bi] = 1;
    }
  }
  std::vector<std::uint8_t> table(size, 0);
  for (std::uint64_t x = 1; x < size; ++x) {
    const int c = popcount(x);
    if (indep[x] != 0) {
      table[x] = static_cast<std::uint8_t>(c);
      continue;
    }
    int best = 0;
    for (std::uint64_t b = x; b != 0; b &= b - 1) {
      best = std::max<int>(best, table[x ^ (b & (~b + 1))]);
      if (best == c - 1) break;
    }
    table[x] = static_cast<std::uint8_t>(best);
  }
  return table;
}

std::vector<std::uint64_t> bases_from_table(int n,
                                            std::span<const std::uint8_t> table) {
  const int r = table[full_mask(n)];
  std::vector<std::uint64_t> out;
  detail::for_each_combination(n, r, [&](std::uint64_t x) {
    if (table[x] == r) out.push_back(x);
  });
  return out;
}

void require_size(int n) {
  if (n < 0) throw InputError("negative ground set size");
  if (n > kMaxGroundSize) {
    throw CapacityError("ground set size " + std::to_string(n) +
                        " exceeds 64");
  }
}

}  // namespace

Matroid::Matroid() : Matroid(0, 0, BasesRep{0, {0}}, {}) {}

Matroid::Matroid(int n, int r, Representation rep, std::string name)
    : n_(n),
      r_(r),
      rep_(std::move(rep)),
      name_(std::move(name)),
      cache_(std::make_shared<Cache>()) {}

Matroid Matroid::from_bases(int n, const std::vector<ElementSet>& bases,
                            std::string name) {
  std::vector<std::uint64_t> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    if (b.ground_size() != n) {
      throw InputError("basis " + b.to_string() + " not over ground set of size " +
                       std::to_string(n));
    }
    masks.push_back(b.bits());
  }
  return from_basis_masks(n, std::move(masks), std::move(name));
}

Matroid Matroid::from_basis_masks(int n, std::vector<std::uint64_t> bases,
                                  std::string name) {
  require_size(n);
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (!validate_basis_masks(bases, n)) {
    throw InputError("family is not the basis family of a matroid");
  }
  return detail::matroid_from_bases_unchecked(n, std::move(bases),
                                              std::move(name));
}

Matroid Matroid::linear(int field, int n, std::vector<std::vector<int>> rows,
                        std::string name) {
  require_size(n);
  if (field != 2 && field != 3 && field != 5 && field != 7) {
    throw InputError("field must be one of 2, 3, 5, 7; got " +
                     std::to_string(field));
  }
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError("matrix row has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (int v : row) {
      if (v < 0 || v >= field) {
        throw InputError("matrix entry " + std::to_string(v) +
                         " is not a residue mod " + std::to_string(field));
      }
    }
  }
  LinearRep rep{field, std::move(rows)};
  const int r = linear_rank(rep, full_mask(n));
  return Matroid(n, r, std::move(rep), std::move(name));
}

Matroid Matroid::graphic(int vertices, std::vector<std::pair<int, int>> edges,
                         std::string name) {
  const int n = static_cast<int>(edges.size());
  require_size(n);
  if (vertices < 0) throw InputError("negative vertex count");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw InputError("edge endpoint outside [0, " + std::to_string(vertices) +
                       ")");
    }
  }
  GraphicRep rep{vertices, std::move(edges)};
  const int r = graphic_rank(rep, full_mask(n));
  return Matroid(n, r, std::move(rep), std::move(name));
}

Matroid Matroid::uniform_rep(int rank, int n, std::string name) {
  require_size(n);
  if (rank < 0 || rank > n) {
    throw InputError("uniform matroid needs 0 <= r <= n; got r=" +
                     std::to_string(rank) + ", n=" + std::to_string(n));
  }
  return Matroid(n, rank, UniformRep{rank}, std::move(name));
}

Matroid Matroid::with_name(std::string name) const {
  Matroid copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

int Matroid::rank_direct(std::uint64_t mask) const {
  return std::visit(
      [&](const auto& rep) -> int {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, BasesRep>) {
          int best = 0;
          for (std::uint64_t b : rep.bases) {
            best = std::max(best, popcount(b & mask));
            if (best == rep.rank) break;
          }
          return best;
        } else if constexpr (std::is_same_v<T, LinearRep>) {
          return linear_rank(rep, mask);
        } else if constexpr (std::is_same_v<T, GraphicRep>) {
          return graphic_rank(rep, mask);
        } else {
          return std::min(popcount(mask), rep.rank);
        }
      },
      rep_);
}

int Matroid::rank_of(std::uint64_t mask) const {
  if (n_ <= kMaxSearchSize) return rank_table()[mask];
  return rank_direct(mask);
}

std::span<const std::uint8_t> Matroid::rank_table() const {
  if (n_ > kMaxSearchSize) {
    throw CapacityError("rank table needs n <= 24; got n=" + std::to_string(n_));
  }
  std::call_once(cache_->table_once, [&] {
    const std::uint64_t size = std::uint64_t{1} << n_;
    if (const auto* rep = std::get_if<BasesRep>(&rep_)) {
      cache_->table = table_from_bases(n_, rep->bases);
    } else if (const auto* u = std::get_if<UniformRep>(&rep_)) {
      cache_->table.resize(size);
      for (std::uint64_t x = 0; x < size; ++x) {
        cache_->table[x] = static_cast<std::uint8_t>(std::min(popcount(x), u->rank));
      }
    } else {
      cache_->table.resize(size);
      for (std::uint64_t x = 0; x < size; ++x) {
        cache_->table[x] = static_cast<std::uint8_t>(rank_direct(x));
      }
    }
  });
  return cache_->table;
}

const std::vector<std::uint64_t>& Matroid::basis_masks() const {
  if (const auto* rep = std::get_if<BasesRep>(&rep_)) return rep->bases;
  std::call_once(cache_->bases_once, [&] {
    if (const auto* u = std::get_if<UniformRep>(&rep_)) {
      detail::for_each_combination(n_, u->rank, [&](std::uint64_t x) {
        cache_->bases.push_back(x);
      });
      return;
    }
    if (n_ > kMaxSearchSize) {
      throw CapacityError("basis enumeration needs n <= 24 for this representation");
    }
    cache_->bases = bases_from_table(n_, rank_table());
  });
  return cache_->bases;
}

std::vector<ElementSet> Matroid::bases() const {
  std::vector<ElementSet> out;
  for (std::uint64_t b : basis_masks()) out.emplace_back(n_, b);
  return out;
}

bool operator==(const Matroid& a, const Matroid& b) {
  if (a.n_ != b.n_ || a.r_ != b.r_) return false;
  return a.basis_masks() == b.basis_masks();
}

namespace detail {

Matroid matroid_from_table(int n, std::vector<std::uint8_t> table) {
  const int r = table[full_mask(n)];
  BasesRep rep{r, bases_from_table(n, table)};
  Matroid m(n, r, std::move(rep), {});
  std::call_once(m.cache_->table_once,
                 [&] { m.cache_->table = std::move(table); });
  return m;
}

Matroid matroid_from_bases_unchecked(int n, std::vector<std::uint64_t> bases,
                                     std::string name) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = bases.empty() ? 0 : popcount(bases.front());
  return Matroid(n, r, BasesRep{r, std::move(bases)}, std::move(name));
}

}  // namespace detail

// ---- basis-exchange validation ---------------------------------------------

namespace {

bool shape_ok(std::span<const std::uint64_t> family, int n) {
  if (family.empty()) return false;
  const int r = popcount(family.front());
  for (std::uint64_t b : family) {
    if ((b & ~full_mask(n)) != 0 || popcount(b) != r) return false;
  }
  return true;
}

// For small ground sets: the largest-independent-subset function of the
// down-closure is a matroid rank function iff it is locally submodular.
bool exchange_via_table(std::span<const std::uint64_t> family, int n) {
  std::vector<std::uint64_t> bases(family.begin(), family.end());
  const auto table = table_from_bases(n, bases);
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < size; ++x) {
    const std::uint64_t outside = full_mask(n) & ~x;
    for (std::uint64_t a = outside; a != 0; a &= a - 1) {
      const std::uint64_t xa = x | (a & (~a + 1));
      for (std::uint64_t b = a & (a - 1); b != 0; b &= b - 1) {
        const std::uint64_t xb = x | (b & (~b + 1));
        if (table[xa] + table[xb] < table[xa | xb] + table[x]) return false;
      }
    }
  }
  return true;
}

bool exchange_pairwise(std::span<const std::uint64_t> family) {
  std::unordered_set<std::uint64_t> members(family.begin(), family.end());
  for (std::uint64_t a : family) {
    for (std::uint64_t b : family) {
      for (std::uint64_t ra = a & ~b; ra != 0; ra &= ra - 1) {
        const std::uint64_t x = ra & (~ra + 1);
        bool found = false;
        for (std::uint64_t rb = b & ~a; rb != 0; rb &= rb - 1) {
          const std::uint64_t y = rb & (~rb + 1);
          if (members.count((a ^ x) | y) != 0) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool validate_basis_masks(std::span<const std::uint64_t> family, int n) {
  note_op(Op::kValidateBases);
  if (n < 0 || n > kMaxGroundSize || !shape_ok(family, n)) return false;
  std::vector<std::uint64_t> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (n <= 20) return exchange_via_table(sorted, n);
  return exchange_pairwise(sorted);
}

bool validate_bases(std::span<const ElementSet> family, int n) {
  std::vector<std::uint64_t> masks;
  masks.reserve(family.size());
  for (const auto& b : family) {
    if (b.ground_size() != n) return false;
    masks.push_back(b.bits());
  }
  return validate_basis_masks(masks, n);
}

}  // namespace mcon
