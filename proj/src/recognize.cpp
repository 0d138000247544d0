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
#include <unordered_set>

#include "internal.hpp"
#include "mcon/canonical.hpp"
#include "mcon/connectivity.hpp"
#include "mcon/constructions.hpp"
#include "mcon/coverage.hpp"
#include "mcon/error.hpp"

namespace mcon {
namespace {

// Walks cyclic sequences x_0 .. x_{2k-1} in which every window starting at
// an even index is a triad and every window starting at an odd index is a
// triangle, then checks each candidate against the model bases.
class WheelSearch {
 public:
  WheelSearch(const Matroid& m, int k)
      : m_(m), k_(k), n_(2 * k), table_(m.rank_table()) {
    for (const auto& t : triangles(m)) triangles_.insert(t.bits());
    for (const auto& t : triads(m)) triads_.insert(t.bits());
    wheel_bases_ = wheel(k).matroid.basis_masks();
    whirl_bases_ = whirl(k).matroid.basis_masks();
    seq_.assign(n_, -1);
  }

  std::optional<WheelLabeling> run() {
    if (triangles_.empty() || triads_.empty()) return std::nullopt;
    for (int x0 = 0; x0 < n_; ++x0) {
      seq_[0] = x0;
      for (int x1 = 0; x1 < n_; ++x1) {
        if (x1 == x0) continue;
        seq_[1] = x1;
        if (extend(2, bit(x0) | bit(x1))) return found_;
      }
    }
    return std::nullopt;
  }

 private:
  bool window_ok(int start) const {
    const std::uint64_t w =
        bit(seq_[start % n_]) | bit(seq_[(start + 1) % n_]) | bit(seq_[(start + 2) % n_]);
    return start % 2 == 0 ? triads_.count(w) != 0 : triangles_.count(w) != 0;
  }

  bool extend(int pos, std::uint64_t used) {
    if (pos == n_) {
      if (!window_ok(n_ - 2) || !window_ok(n_ - 1)) return false;
      return verify();
    }
    for (int x = 0; x < n_; ++x) {
      if ((used & bit(x)) != 0) continue;
      seq_[pos] = x;
      if (window_ok(pos - 2) && extend(pos + 1, used | bit(x))) return true;
    }
    seq_[pos] = -1;
    return false;
  }

  bool verify() {
    std::vector<std::uint64_t> mapped;
    mapped.reserve(m_.basis_masks().size());
    std::vector<int> position(n_);
    for (int j = 0; j < n_; ++j) position[seq_[j]] = j;
    for (std::uint64_t b : m_.basis_masks()) {
      std::uint64_t out = 0;
      for (std::uint64_t x = b; x != 0; x &= x - 1) {
        out |= bit(position[std::countr_zero(x)]);
      }
      mapped.push_back(out);
    }
    std::sort(mapped.begin(), mapped.end());
    std::optional<WheelKind> kind;
    if (mapped == wheel_bases_) kind = WheelKind::kWheel;
    if (mapped == whirl_bases_) kind = WheelKind::kWhirl;
    if (!kind) return false;
    WheelLabeling l;
    l.k = k_;
    std::uint64_t rim = 0;
    for (int i = 0; i < k_; ++i) {
      l.rim.push_back(seq_[2 * i]);
      l.spokes.push_back(seq_[2 * i + 1]);
      rim |= bit(seq_[2 * i]);
    }
    l.kind = table_[rim] < k_ ? WheelKind::kWheel : WheelKind::kWhirl;
    found_ = std::move(l);
    return true;
  }

  const Matroid& m_;
  int k_;
  int n_;
  std::span<const std::uint8_t> table_;
  std::unordered_set<std::uint64_t> triangles_;
  std::unordered_set<std::uint64_t> triads_;
  std::vector<std::uint64_t> wheel_bases_;
  std::vector<std::uint64_t> whirl_bases_;
  std::vector<int> seq_;
  WheelLabeling found_;
};

}  // namespace

std::optional<WheelLabeling> recognize_wheel_or_whirl(const Matroid& m) {
  note_op(Op::kRecognizeWheelOrWhirl);
  const int n = m.size();
  if (n % 2 != 0 || n < 4 || m.rank() != n / 2) return std::nullopt;
  if (n > kMaxSearchSize) {
    throw CapacityError("wheel recognition needs n <= 24");
  }
  const int k = n / 2;
  if (k == 2) {
    // whirl(2) is U_{2,4}: every pair is a basis.
    if (m.basis_masks().size() != 6) return std::nullopt;
    WheelLabeling l;
    l.kind = WheelKind::kWhirl;
    l.k = 2;
    l.rim = {0, 2};
    l.spokes = {1, 3};
    return l;
  }
  return WheelSearch(m, k).run();
}

}  // namespace mcon
