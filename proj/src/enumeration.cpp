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

#include "mcon/enumeration.hpp"

#include <algorithm>
#include <string>

#include "internal.hpp"
#include "mcon/coverage.hpp"
#include "mcon/error.hpp"
#include "mcon/parallel.hpp"

namespace mcon {
namespace {

std::vector<std::uint64_t> closure_table(std::span<const std::uint8_t> table, int n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> cl(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint64_t c = x;
    for (int e = 0; e < n; ++e) {
      if ((x & bit(e)) == 0 && table[x | bit(e)] == table[x]) c |= bit(e);
    }
    cl[x] = c;
  }
  return cl;
}

std::vector<std::uint64_t> flat_masks(const Matroid& m) {
  const auto table = m.rank_table();
  const auto cl = closure_table(table, m.size());
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < cl.size(); ++x) {
    if (cl[x] == x) out.push_back(x);
  }
  std::stable_sort(out.begin(), out.end(), [&](std::uint64_t a, std::uint64_t b) {
    return table[a] < table[b];
  });
  return out;
}

void require_at_most(const Matroid& m, int limit, const char* what) {
  if (m.size() > limit) {
    throw CapacityError(std::string(what) + " needs n <= " + std::to_string(limit) +
                        "; got n=" + std::to_string(m.size()));
  }
}

// Enumerates linear subclasses of hyperplanes: on every coline the number of
// chosen hyperplanes through it is 0, 1, or all of them.
class SubclassSearch {
 public:
  SubclassSearch(std::vector<std::uint64_t> hyperplanes,
                 const std::vector<std::uint64_t>& colines)
      : hyperplanes_(std::move(hyperplanes)) {
    through_.resize(hyperplanes_.size());
    for (std::size_t c = 0; c < colines.size(); ++c) {
      for (std::size_t h = 0; h < hyperplanes_.size(); ++h) {
        if ((colines[c] & ~hyperplanes_[h]) == 0) through_[h].push_back(c);
      }
    }
    included_.assign(colines.size(), 0);
    excluded_.assign(colines.size(), 0);
    chosen_.assign(hyperplanes_.size(), false);
  }

  template <class F>
  void run(F&& emit) {
    search(0, emit);
  }

 private:
  template <class F>
  void search(std::size_t h, F& emit) {
    if (h == hyperplanes_.size()) {
      emit(chosen_);
      return;
    }
    for (int take = 0; take < 2; ++take) {
      bool ok = true;
      for (std::size_t c : through_[h]) {
        (take != 0 ? included_ : excluded_)[c]++;
        if (included_[c] >= 2 && excluded_[c] >= 1) ok = false;
      }
      chosen_[h] = take != 0;
      if (ok) search(h + 1, emit);
      for (std::size_t c : through_[h]) (take != 0 ? included_ : excluded_)[c]--;
    }
    chosen_[h] = false;
  }

  std::vector<std::uint64_t> hyperplanes_;
  std::vector<std::vector<std::size_t>> through_;
  std::vector<int> included_;
  std::vector<int> excluded_;
  std::vector<bool> chosen_;
};

bool exchange_holds(const std::vector<std::uint64_t>& members,
                    const std::vector<std::uint8_t>& in_family) {
  for (std::uint64_t a : members) {
    for (std::uint64_t b : members) {
      if (a == b) continue;
      for (std::uint64_t x = a & ~b; x != 0; x &= x - 1) {
        const std::uint64_t drop = x & (~x + 1);
        bool found = false;
        for (std::uint64_t y = b & ~a; y != 0; y &= y - 1) {
          if (in_family[(a ^ drop) | (y & (~y + 1))] != 0) {
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

std::vector<ElementSet> flats(const Matroid& m) {
  note_op(Op::kFlats);
  require_at_most(m, kMaxFlatsSize, "flat enumeration");
  std::vector<ElementSet> out;
  for (std::uint64_t f : flat_masks(m)) out.emplace_back(m.size(), f);
  return out;
}

bool is_modular_cut(const Matroid& m, const ModularCut& cut) {
  require_at_most(m, kMaxFlatsSize, "modular cut validation");
  const auto table = m.rank_table();
  const auto cl = closure_table(table, m.size());
  std::vector<std::uint8_t> member(cl.size(), 0);
  for (const auto& f : cut.flats) {
    if (f.ground_size() != m.size() || cl[f.bits()] != f.bits()) return false;
    member[f.bits()] = 1;
  }
  if (cut.flats.empty()) return true;
  const auto all = flat_masks(m);
  for (const auto& f : cut.flats) {
    for (std::uint64_t g : all) {
      if ((f.bits() & ~g) == 0 && member[g] == 0) return false;
    }
  }
  for (const auto& f1 : cut.flats) {
    for (const auto& f2 : cut.flats) {
      const std::uint64_t a = f1.bits();
      const std::uint64_t b = f2.bits();
      if (table[a] + table[b] == table[a | b] + table[a & b] && member[a & b] == 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<ModularCut> modular_cuts(const Matroid& m) {
  note_op(Op::kModularCuts);
  require_at_most(m, kMaxEnumerationSize, "modular cut enumeration");
  const auto table = m.rank_table();
  const int r = m.rank();
  const int n = m.size();
  const auto all = flat_masks(m);
  std::vector<std::uint64_t> hyperplanes;
  std::vector<std::uint64_t> colines;
  for (std::uint64_t f : all) {
    if (table[f] == r - 1) hyperplanes.push_back(f);
    if (table[f] == r - 2) colines.push_back(f);
  }
  std::vector<ModularCut> out;
  out.emplace_back();  // coloop extension
  SubclassSearch search(hyperplanes, colines);
  search.run([&](const std::vector<bool>& chosen) {
    ModularCut cut;
    for (std::uint64_t f : all) {
      bool in = true;
      for (std::size_t h = 0; h < hyperplanes.size() && in; ++h) {
        if ((f & ~hyperplanes[h]) == 0 && !chosen[h]) in = false;
      }
      if (in) cut.flats.emplace_back(n, f);
    }
    std::sort(cut.flats.begin(), cut.flats.end());
    out.push_back(std::move(cut));
  });
  return out;
}

Matroid extend(const Matroid& m, const ModularCut& cut) {
  note_op(Op::kExtend);
  if (!is_modular_cut(m, cut)) throw InputError("not a modular cut of the matroid");
  const int n = m.size();
  const auto table = m.rank_table();
  const auto cl = closure_table(table, n);
  std::vector<std::uint8_t> member(cl.size(), 0);
  for (const auto& f : cut.flats) member[f.bits()] = 1;
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint8_t> ext(size * 2);
  for (std::uint64_t x = 0; x < size; ++x) {
    ext[x] = table[x];
    ext[x | size] = static_cast<std::uint8_t>(table[x] + (member[cl[x]] != 0 ? 0 : 1));
  }
  return detail::matroid_from_table(n + 1, std::move(ext));
}

std::vector<std::vector<CanonicalForm>> enumerate_matroids(int n_max, int threads) {
  note_op(Op::kEnumerateMatroids);
  if (n_max < 0) throw InputError("n_max must be non-negative");
  if (n_max > kMaxEnumerationSize) {
    throw CapacityError("enumeration is limited to 8 elements; got " +
                        std::to_string(n_max));
  }
  std::vector<std::vector<CanonicalForm>> levels;
  levels.push_back({canonical_form(Matroid())});
  for (int size = 1; size <= n_max; ++size) {
    const auto& parents = levels.back();
    std::vector<std::vector<CanonicalForm>> slots(parents.size());
    parallel_for(parents.size(), threads, [&](std::size_t i) {
      const Matroid parent = parents[i].decode();
      auto& children = slots[i];
      for (const auto& cut : modular_cuts(parent)) {
        children.push_back(canonical_form(extend(parent, cut)));
      }
      std::sort(children.begin(), children.end());
      children.erase(std::unique(children.begin(), children.end()), children.end());
    });
    std::vector<CanonicalForm> level;
    for (auto& s : slots) {
      level.insert(level.end(), std::make_move_iterator(s.begin()),
                   std::make_move_iterator(s.end()));
    }
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<CanonicalForm> naive_enumerate(int n) {
  note_op(Op::kNaiveEnumerate);
  if (n < 0) throw InputError("size must be non-negative");
  if (n > kMaxNaiveSize) {
    throw CapacityError("naive enumeration is limited to 6 elements; got " +
                        std::to_string(n));
  }
  std::vector<CanonicalForm> out;
  std::vector<std::uint8_t> in_family(std::size_t{1} << n, 0);
  for (int r = 0; r <= n; ++r) {
    std::vector<std::uint64_t> subsets;
    detail::for_each_combination(n, r, [&](std::uint64_t x) { subsets.push_back(x); });
    // Up to relabeling some basis is {0..r-1}, the first subset.
    const std::size_t rest = subsets.size() - 1;
    std::vector<std::uint64_t> members;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << rest); ++f) {
      members.clear();
      members.push_back(subsets[0]);
      for (std::size_t i = 0; i < rest; ++i) {
        if ((f >> i) & 1U) members.push_back(subsets[i + 1]);
      }
      for (std::uint64_t b : members) in_family[b] = 1;
      if (exchange_holds(members, in_family)) {
        out.push_back(canonical_form(detail::matroid_from_bases_unchecked(n, members)));
      }
      for (std::uint64_t b : members) in_family[b] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mcon
