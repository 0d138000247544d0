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
#include <bit>
#include <map>

#include "internal.hpp"
#include "mcon/canonical.hpp"
#include "mcon/coverage.hpp"
#include "mcon/error.hpp"

namespace mcon {
namespace {

class IsoSearch {
 public:
  IsoSearch(const Matroid& a, const Matroid& b)
      : a_(a), b_(b), n_(a.size()), ta_(a.rank_table()), tb_(b.rank_table()) {}

  std::optional<std::vector<int>> run() {
    const auto ia = element_invariants(a_);
    const auto ib = element_invariants(b_);
    std::map<std::vector<int>, int> ids;
    std::map<std::vector<int>, int> count_a;
    std::map<std::vector<int>, int> count_b;
    for (const auto& v : ia) ++count_a[v];
    for (const auto& v : ib) ++count_b[v];
    if (count_a != count_b) return std::nullopt;
    for (const auto& [v, c] : count_a) ids.emplace(v, static_cast<int>(ids.size()));
    class_a_.resize(n_);
    class_b_.resize(n_);
    for (int e = 0; e < n_; ++e) {
      class_a_[e] = ids.at(ia[e]);
      class_b_[e] = ids.at(ib[e]);
    }
    // Most constrained elements first.
    order_.resize(n_);
    for (int e = 0; e < n_; ++e) order_[e] = e;
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return count_a.at(ia[x]) < count_a.at(ia[y]);
    });
    map_.assign(n_, -1);
    if (search(0, 0, 0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(int depth, int ea, int eb, std::uint64_t ma, std::uint64_t mb) {
    if (ta_[ma | bit(ea)] != tb_[mb | bit(eb)]) return false;
    for (int i = 0; i < depth; ++i) {
      const int xa = order_[i];
      const std::uint64_t pa = bit(ea) | bit(xa);
      const std::uint64_t pb = bit(eb) | bit(map_[xa]);
      if (ta_[pa] != tb_[pb]) return false;
      for (int j = i + 1; j < depth; ++j) {
        const int ya = order_[j];
        if (ta_[pa | bit(ya)] != tb_[pb | bit(map_[ya])]) return false;
      }
    }
    return true;
  }

  bool leaf_ok() const {
    for (std::uint64_t basis : a_.basis_masks()) {
      std::uint64_t image = 0;
      for (std::uint64_t x = basis; x != 0; x &= x - 1) {
        image |= bit(map_[std::countr_zero(x)]);
      }
      if (tb_[image] != b_.rank()) return false;
    }
    return true;
  }

  bool search(int depth, std::uint64_t ma, std::uint64_t mb) {
    if (depth == n_) return leaf_ok();
    const int ea = order_[depth];
    for (int eb = 0; eb < n_; ++eb) {
      if ((mb & bit(eb)) != 0 || class_b_[eb] != class_a_[ea]) continue;
      if (!consistent(depth, ea, eb, ma, mb)) continue;
      map_[ea] = eb;
      if (search(depth + 1, ma | bit(ea), mb | bit(eb))) return true;
      map_[ea] = -1;
    }
    return false;
  }

  const Matroid& a_;
  const Matroid& b_;
  int n_;
  std::span<const std::uint8_t> ta_;
  std::span<const std::uint8_t> tb_;
  std::vector<int> class_a_;
  std::vector<int> class_b_;
  std::vector<int> order_;
  std::vector<int> map_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() > kMaxSearchSize || b.size() > kMaxSearchSize) {
    throw CapacityError("isomorphism search needs n <= 24");
  }
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.basis_masks().size() != b.basis_masks().size()) {
    return std::nullopt;
  }
  return IsoSearch(a, b).run();
}

bool are_isomorphic(const Matroid& a, const Matroid& b) {
  note_op(Op::kAreIsomorphic);
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  if (a.size() <= kMaxCanonicalSize) return canonical_form(a) == canonical_form(b);
  return find_isomorphism(a, b).has_value();
}

}  // namespace mcon
