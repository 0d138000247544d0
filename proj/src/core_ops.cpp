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

#include <algorithm>

#include "internal.hpp"
#include "mcon/coverage.hpp"
#include "mcon/error.hpp"
#include "mcon/matroid.hpp"

namespace mcon {
namespace detail {

std::vector<std::uint8_t> minor_table(std::span<const std::uint8_t> table, int n,
                                      std::uint64_t deleted,
                                      std::uint64_t contracted) {
  const std::uint64_t kept = full_mask(n) & ~deleted & ~contracted;
  const int base = table[contracted];
  std::vector<std::uint8_t> out(std::uint64_t{1} << popcount(kept));
  std::size_t i = 0;
  for_each_submask(kept, [&](std::uint64_t sub) {
    out[i++] = static_cast<std::uint8_t>(table[sub | contracted] - base);
  });
  return out;
}

Matroid minor(const Matroid& m, std::uint64_t deleted, std::uint64_t contracted) {
  const int n = m.size();
  if ((deleted & contracted) != 0) {
    throw InputError("deleted and contracted sets overlap");
  }
  if (n <= kMaxSearchSize) {
    return matroid_from_table(
        n - popcount(deleted | contracted),
        minor_table(m.rank_table(), n, deleted, contracted));
  }
  const std::uint64_t kept = full_mask(n) & ~deleted & ~contracted;
  const int n2 = popcount(kept);
  if (const auto* u = std::get_if<UniformRep>(&m.representation())) {
    // Contracting c elements of U_{r,n} gives U_{r-c,n-c} (floored at 0);
    // deleting d of the rest leaves rank min(r', n').
    const int after_contract = std::max(0, u->rank - popcount(contracted));
    return Matroid::uniform_rep(std::min(after_contract, n2), n2);
  }
  if (std::holds_alternative<BasesRep>(m.representation())) {
    // Bases of the minor: B - C for bases B meeting D minimally and
    // containing a basis of C, i.e. maximizing |B & C| then minimizing |B & D|.
    int best_c = -1;
    int best_d = n + 1;
    for (std::uint64_t b : m.basis_masks()) {
      const int c = popcount(b & contracted);
      const int d = popcount(b & deleted);
      if (c > best_c || (c == best_c && d < best_d)) {
        best_c = c;
        best_d = d;
      }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t b : m.basis_masks()) {
      if (popcount(b & contracted) == best_c && popcount(b & deleted) == best_d) {
        out.push_back(compress(b & kept, kept));
      }
    }
    return matroid_from_bases_unchecked(n2, std::move(out));
  }
  throw CapacityError("minors of this representation need n <= 24");
}

std::vector<std::uint8_t> table_from_independent(
    int n, const std::vector<std::uint8_t>& indep) {
  const std::uint64_t size = std::uint64_t{1} << n;
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

}  // namespace detail

namespace {

void require_ground(const Matroid& m, const ElementSet& x) {
  if (x.ground_size() != m.size()) {
    throw InputError("element set over ground size " +
                     std::to_string(x.ground_size()) + " used with a matroid on " +
                     std::to_string(m.size()) + " elements");
  }
}

void require_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) {
    throw InputError("element " + std::to_string(e) + " outside ground set of size " +
                     std::to_string(m.size()));
  }
}

int corank_raw(const Matroid& m, std::uint64_t x) {
  const std::uint64_t all = full_mask(m.size());
  return popcount(x) + m.rank_of(all & ~x) - m.rank();
}

bool circuit_raw(const Matroid& m, std::uint64_t x) {
  const int s = popcount(x);
  if (s == 0 || m.rank_of(x) != s - 1) return false;
  for (std::uint64_t b = x; b != 0; b &= b - 1) {
    if (m.rank_of(x ^ (b & (~b + 1))) != s - 1) return false;
  }
  return true;
}

bool cocircuit_raw(const Matroid& m, std::uint64_t x) {
  const int s = popcount(x);
  if (s == 0 || corank_raw(m, x) != s - 1) return false;
  for (std::uint64_t b = x; b != 0; b &= b - 1) {
    if (corank_raw(m, x ^ (b & (~b + 1))) != s - 1) return false;
  }
  return true;
}

// Groups elements into classes of the relation "pair is a 2-circuit"
// (or 2-cocircuit when dual is set); singular elements are loops/coloops.
ElementPartition pair_classes(const Matroid& m, bool use_dual) {
  const int n = m.size();
  auto r = [&](std::uint64_t x) {
    return use_dual ? corank_raw(m, x) : m.rank_of(x);
  };
  ElementPartition out;
  std::uint64_t singular = 0;
  std::uint64_t assigned = 0;
  for (int e = 0; e < n; ++e) {
    if (r(bit(e)) == 0) singular |= bit(e);
  }
  assigned = singular;
  for (int e = 0; e < n; ++e) {
    if ((assigned & bit(e)) != 0) continue;
    std::uint64_t cls = bit(e);
    for (int f = e + 1; f < n; ++f) {
      if ((assigned & bit(f)) == 0 && r(bit(e) | bit(f)) == 1) cls |= bit(f);
    }
    assigned |= cls;
    out.classes.emplace_back(n, cls);
  }
  out.singular = ElementSet(n, singular);
  return out;
}

std::uint64_t non_representatives(const ElementPartition& p) {
  std::uint64_t out = p.singular.bits();
  for (const auto& cls : p.classes) {
    out |= cls.bits() & ~bit(cls.lowest());
  }
  return out;
}

}  // namespace

int rank(const Matroid& m, const ElementSet& x) {
  note_op(Op::kRank);
  require_ground(m, x);
  return m.rank_of(x.bits());
}

int corank(const Matroid& m, const ElementSet& x) {
  note_op(Op::kCorank);
  require_ground(m, x);
  return corank_raw(m, x.bits());
}

ElementSet closure(const Matroid& m, const ElementSet& x) {
  note_op(Op::kClosure);
  require_ground(m, x);
  const int rx = m.rank_of(x.bits());
  std::uint64_t out = x.bits();
  for (int e = 0; e < m.size(); ++e) {
    if ((out & bit(e)) == 0 && m.rank_of(x.bits() | bit(e)) == rx) out |= bit(e);
  }
  return ElementSet(m.size(), out);
}

ElementSet coclosure(const Matroid& m, const ElementSet& x) {
  note_op(Op::kCoclosure);
  require_ground(m, x);
  const std::uint64_t rest = full_mask(m.size()) & ~x.bits();
  const int r_rest = m.rank_of(rest);
  std::uint64_t out = x.bits();
  // e is in cl*(X) iff e is a coloop of M | (E - X).
  for (std::uint64_t b = rest; b != 0; b &= b - 1) {
    const std::uint64_t e = b & (~b + 1);
    if (m.rank_of(rest ^ e) < r_rest) out |= e;
  }
  return ElementSet(m.size(), out);
}

Matroid dual(const Matroid& m) {
  note_op(Op::kDual);
  const int n = m.size();
  if (const auto* u = std::get_if<UniformRep>(&m.representation())) {
    return Matroid::uniform_rep(n - u->rank, n);
  }
  std::vector<std::uint64_t> bases;
  bases.reserve(m.basis_masks().size());
  for (std::uint64_t b : m.basis_masks()) bases.push_back(full_mask(n) & ~b);
  return detail::matroid_from_bases_unchecked(n, std::move(bases));
}

Matroid delete_elements(const Matroid& m, const ElementSet& x) {
  note_op(Op::kDelete);
  require_ground(m, x);
  return detail::minor(m, x.bits(), 0);
}

Matroid contract_elements(const Matroid& m, const ElementSet& x) {
  note_op(Op::kContract);
  require_ground(m, x);
  return detail::minor(m, 0, x.bits());
}

Matroid restrict_to(const Matroid& m, const ElementSet& x) {
  note_op(Op::kRestrict);
  require_ground(m, x);
  return detail::minor(m, full_mask(m.size()) & ~x.bits(), 0);
}

ElementMap minor_map(const ElementSet& removed, std::string description) {
  ElementMap map;
  map.description = std::move(description);
  int next = 0;
  for (int e = 0; e < removed.ground_size(); ++e) {
    if (removed.contains(e)) {
      map.forward.emplace_back(std::nullopt);
    } else {
      map.forward.emplace_back(next++);
    }
  }
  return map;
}

std::vector<ElementSet> circuits(const Matroid& m, int max_size) {
  note_op(Op::kCircuits);
  const int n = m.size();
  if (max_size > n) max_size = n;
  std::vector<ElementSet> out;
  for (int s = 1; s <= max_size; ++s) {
    detail::for_each_combination(n, s, [&](std::uint64_t x) {
      if (circuit_raw(m, x)) out.emplace_back(n, x);
    });
  }
  return out;
}

std::vector<ElementSet> cocircuits(const Matroid& m, int max_size) {
  note_op(Op::kCocircuits);
  const int n = m.size();
  if (max_size > n) max_size = n;
  std::vector<ElementSet> out;
  for (int s = 1; s <= max_size; ++s) {
    detail::for_each_combination(n, s, [&](std::uint64_t x) {
      if (cocircuit_raw(m, x)) out.emplace_back(n, x);
    });
  }
  return out;
}

ElementSet fundamental_circuit(const Matroid& m, const ElementSet& basis, int e) {
  note_op(Op::kFundamentalCircuit);
  require_ground(m, basis);
  require_element(m, e);
  const std::uint64_t b = basis.bits();
  if (popcount(b) != m.rank() || m.rank_of(b) != m.rank()) {
    throw InputError(basis.to_string() + " is not a basis");
  }
  if ((b & bit(e)) != 0) {
    throw InputError("element " + std::to_string(e) + " lies in the basis");
  }
  std::uint64_t out = bit(e);
  for (std::uint64_t rest = b; rest != 0; rest &= rest - 1) {
    const std::uint64_t f = rest & (~rest + 1);
    if (m.rank_of((b ^ f) | bit(e)) == m.rank()) out |= f;
  }
  return ElementSet(m.size(), out);
}

ElementPartition parallel_classes(const Matroid& m) {
  note_op(Op::kParallelClasses);
  return pair_classes(m, false);
}

ElementPartition series_classes(const Matroid& m) {
  note_op(Op::kSeriesClasses);
  return pair_classes(m, true);
}

Reduction simplify(const Matroid& m) {
  note_op(Op::kSimplify);
  const std::uint64_t removed = non_representatives(pair_classes(m, false));
  return {detail::minor(m, removed, 0),
          minor_map(ElementSet(m.size(), removed), "parallel class representative")};
}

Reduction cosimplify(const Matroid& m) {
  note_op(Op::kCosimplify);
  const std::uint64_t removed = non_representatives(pair_classes(m, true));
  return {detail::minor(m, 0, removed),
          minor_map(ElementSet(m.size(), removed), "series class representative")};
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  note_op(Op::kDirectSum);
  const int n1 = m1.size();
  const int n = n1 + m2.size();
  if (n > kMaxGroundSize) {
    throw CapacityError("direct sum would have " + std::to_string(n) +
                        " elements; limit is 64");
  }
  std::vector<std::uint64_t> bases;
  bases.reserve(m1.basis_masks().size() * m2.basis_masks().size());
  for (std::uint64_t b1 : m1.basis_masks()) {
    for (std::uint64_t b2 : m2.basis_masks()) bases.push_back(b1 | (b2 << n1));
  }
  return detail::matroid_from_bases_unchecked(n, std::move(bases));
}

Matroid two_sum(const Matroid& m1, const Matroid& m2, int p1, int p2) {
  note_op(Op::kTwoSum);
  require_element(m1, p1);
  require_element(m2, p2);
  const int n1 = m1.size();
  const int n2 = m2.size();
  if (n1 < 3 || n2 < 3) {
    throw InputError("2-sum needs both parts to have at least three elements");
  }
  auto loop_or_coloop = [](const Matroid& m, int p) {
    return m.rank_of(bit(p)) == 0 ||
           m.rank_of(full_mask(m.size()) & ~bit(p)) < m.rank();
  };
  if (loop_or_coloop(m1, p1) || loop_or_coloop(m2, p2)) {
    throw InputError("2-sum basepoint is a loop or coloop");
  }
  const int n = n1 + n2 - 2;
  if (n > kMaxSearchSize) {
    throw CapacityError("2-sum needs at most 24 elements in the result");
  }
  const std::uint64_t kept1 = full_mask(n1) & ~bit(p1);
  const std::uint64_t kept2 = full_mask(n2) & ~bit(p2);
  auto place1 = [&](std::uint64_t c) { return detail::compress(c & kept1, kept1); };
  auto place2 = [&](std::uint64_t c) {
    return detail::compress(c & kept2, kept2) << (n1 - 1);
  };

  std::vector<std::uint64_t> through1;
  std::vector<std::uint64_t> through2;
  std::vector<std::uint64_t> family;
  auto collect = [](const Matroid& m, int p, auto place, std::vector<std::uint64_t>& through,
                    std::vector<std::uint64_t>& family) {
    const auto table = m.rank_table();
    const std::uint64_t size = std::uint64_t{1} << m.size();
    for (std::uint64_t x = 1; x < size; ++x) {
      if (!detail::is_circuit_mask(table, x)) continue;
      if ((x & bit(p)) != 0) {
        through.push_back(place(x));
      } else {
        family.push_back(place(x));
      }
    }
  };
  collect(m1, p1, place1, through1, family);
  collect(m2, p2, place2, through2, family);
  for (std::uint64_t c1 : through1) {
    for (std::uint64_t c2 : through2) family.push_back(c1 | c2);
  }

  // Independent sets are those containing no member of the circuit family.
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint8_t> dependent(size, 0);
  for (std::uint64_t c : family) dependent[c] = 1;
  for (int i = 0; i < n; ++i) {
    for (std::uint64_t x = 0; x < size; ++x) {
      if ((x & bit(i)) == 0 && dependent[x] != 0) dependent[x | bit(i)] = 1;
    }
  }
  for (auto& d : dependent) d = d != 0 ? 0 : 1;
  return detail::matroid_from_table(n, detail::table_from_independent(n, dependent));
}

Matroid relax_circuit_hyperplane(const Matroid& m, const ElementSet& x) {
  note_op(Op::kRelaxCircuitHyperplane);
  require_ground(m, x);
  const std::uint64_t xs = x.bits();
  if (!circuit_raw(m, xs)) {
    throw InputError(x.to_string() + " is not a circuit");
  }
  const int rx = m.rank_of(xs);
  bool closed = rx == m.rank() - 1;
  for (int e = 0; closed && e < m.size(); ++e) {
    if ((xs & bit(e)) == 0 && m.rank_of(xs | bit(e)) == rx) closed = false;
  }
  if (!closed) {
    throw InputError(x.to_string() + " is not a hyperplane");
  }
  std::vector<std::uint64_t> bases = m.basis_masks();
  bases.push_back(xs);
  return detail::matroid_from_bases_unchecked(m.size(), std::move(bases), m.name());
}

}  // namespace mcon
