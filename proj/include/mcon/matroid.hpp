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

#ifndef MCON_MATROID_HPP_
#define MCON_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcon/element_set.hpp"

namespace mcon {

// Explicit basis family. Bases are kept sorted by mask value.
struct BasesRep {
  int rank = 0;
  std::vector<std::uint64_t> bases;
};

// r x n matrix over GF(p); the matroid is the column matroid.
struct LinearRep {
  int field = 2;
  std::vector<std::vector<int>> rows;
};

// Multigraph; edge i is element i. Self-loops and parallel edges allowed.
struct GraphicRep {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

struct UniformRep {
  int rank = 0;
};

using Representation = std::variant<BasesRep, LinearRep, GraphicRep, UniformRep>;

// Tracks element identity through deletions, contractions and si/co.
struct ElementMap {
  std::vector<std::optional<int>> forward;
  std::string description;
};

class Matroid;

namespace detail {
// Builds a BasesRep matroid from a complete rank table. The table is
// trusted: callers derive it from another matroid's table.
Matroid matroid_from_table(int n, std::vector<std::uint8_t> table);
// Builds a BasesRep matroid without checking the exchange axiom.
Matroid matroid_from_bases_unchecked(int n, std::vector<std::uint64_t> bases,
                                     std::string name = {});
}  // namespace detail

// An immutable matroid on the ground set {0, ..., n-1}. Copies share the
// lazily built rank table, which is safe to read from many threads.
class Matroid {
 public:
  // The empty matroid.
  Matroid();

  static Matroid from_bases(int n, const std::vector<ElementSet>& bases,
                            std::string name = {});
  static Matroid from_basis_masks(int n, std::vector<std::uint64_t> bases,
                                  std::string name = {});
  static Matroid linear(int field, int n, std::vector<std::vector<int>> rows,
                        std::string name = {});
  static Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges,
                         std::string name = {});
  static Matroid uniform_rep(int rank, int n, std::string name = {});

  int size() const { return n_; }
  int rank() const { return r_; }
  ElementSet ground() const { return ElementSet::full(n_); }
  const std::string& name() const { return name_; }
  Matroid with_name(std::string name) const;
  const Representation& representation() const { return rep_; }

  // Rank of a raw mask. No bounds checks; use mcon::rank for checked access.
  int rank_of(std::uint64_t mask) const;

  // Full rank table indexed by mask. Throws CapacityError for n > 24.
  std::span<const std::uint8_t> rank_table() const;
  bool has_table_capacity() const { return n_ <= kMaxSearchSize; }

  // Basis masks in increasing order.
  const std::vector<std::uint64_t>& basis_masks() const;
  std::vector<ElementSet> bases() const;

  // Labeled equality: same ground set size and the same basis family.
  friend bool operator==(const Matroid& a, const Matroid& b);

 private:
  struct Cache;
  friend Matroid detail::matroid_from_table(int n,
                                            std::vector<std::uint8_t> table);
  friend Matroid detail::matroid_from_bases_unchecked(
      int n, std::vector<std::uint64_t> bases, std::string name);

  Matroid(int n, int r, Representation rep, std::string name);
  int rank_direct(std::uint64_t mask) const;

  int n_ = 0;
  int r_ = 0;
  Representation rep_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

// ---- rank-based queries ---------------------------------------------------

int rank(const Matroid& m, const ElementSet& x);
// |X| + r(E - X) - r(M)
int corank(const Matroid& m, const ElementSet& x);
ElementSet closure(const Matroid& m, const ElementSet& x);
ElementSet coclosure(const Matroid& m, const ElementSet& x);

// ---- duality and minors -----------------------------------------------------

Matroid dual(const Matroid& m);

// Minors relabel the surviving elements in increasing order; minor_map
// describes that relabeling.
Matroid delete_elements(const Matroid& m, const ElementSet& x);
Matroid contract_elements(const Matroid& m, const ElementSet& x);
Matroid restrict_to(const Matroid& m, const ElementSet& x);
ElementMap minor_map(const ElementSet& removed, std::string description);

// ---- circuits ---------------------------------------------------------------

// All circuits of size <= max_size, ordered by (size, mask).
std::vector<ElementSet> circuits(const Matroid& m, int max_size);
std::vector<ElementSet> cocircuits(const Matroid& m, int max_size);
ElementSet fundamental_circuit(const Matroid& m, const ElementSet& basis,
                               int e);

// ---- simplification ---------------------------------------------------------

struct Reduction {
  Matroid matroid;
  ElementMap map;
};

// Deletes loops and all but the lowest-indexed element of each parallel
// class.
Reduction simplify(const Matroid& m);
// Contracts coloops and all but the lowest-indexed element of each series
// class.
Reduction cosimplify(const Matroid& m);

struct ElementPartition {
  std::vector<ElementSet> classes;  // ordered by lowest element
  ElementSet singular;              // loops (parallel) or coloops (series)
};

ElementPartition parallel_classes(const Matroid& m);
ElementPartition series_classes(const Matroid& m);

// ---- sums and relaxation ----------------------------------------------------

// Elements of m2 follow those of m1.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);
// Ground set is (E1 - p1) followed by (E2 - p2), each in increasing order.
Matroid two_sum(const Matroid& m1, const Matroid& m2, int p1, int p2);
Matroid relax_circuit_hyperplane(const Matroid& m, const ElementSet& x);

bool validate_bases(std::span<const ElementSet> family, int n);
bool validate_basis_masks(std::span<const std::uint64_t> family, int n);

}  // namespace mcon

#endif  // MCON_MATROID_HPP_
