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

#include "mcon/canonical.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <numeric>

#include "internal.hpp"
#include "mcon/coverage.hpp"
#include "mcon/error.hpp"

namespace mcon {
namespace {

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / i;
  return out;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Matroid& m)
      : n_(m.size()), r_(m.rank()), table_(m.rank_table()) {
    const auto inv = element_invariants(m);
    std::vector<int> elements(n_);
    std::iota(elements.begin(), elements.end(), 0);
    std::stable_sort(elements.begin(), elements.end(),
                     [&](int a, int b) { return inv[a] < inv[b]; });
    class_of_.assign(n_, 0);
    position_class_.assign(n_, 0);
    int cls = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && inv[elements[i]] != inv[elements[i - 1]]) ++cls;
      class_of_[elements[i]] = cls;
      position_class_[i] = cls;
    }
    swaps_.assign(n_, std::vector<bool>(n_, false));
    for (int e = 0; e < n_; ++e) {
      for (int f = e + 1; f < n_; ++f) {
        if (class_of_[e] != class_of_[f]) continue;
        bool ok = true;
        for (std::uint64_t b : m.basis_masks()) {
          const bool be = (b >> e) & 1U;
          const bool bf = (b >> f) & 1U;
          if (be == bf) continue;
          if (table_[b ^ bit(e) ^ bit(f)] != r_) {
            ok = false;
            break;
          }
        }
        swaps_[e][f] = swaps_[f][e] = ok;
      }
    }
    length_ = binom(n_, r_);
    cur_.assign(length_, 0);
    if (r_ == 0) cur_[0] = 1;
    orig_.assign(std::size_t{1} << n_, 0);
  }

  std::vector<std::uint8_t> run() {
    search(0, 0);
    if (!have_best_) best_ = cur_;  // n == 0
    return best_;
  }

 private:
  void search(int d, std::uint64_t used) {
    if (d == n_) {
      if (!have_best_ || std::memcmp(cur_.data(), best_.data(), length_) < 0) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    const std::size_t off = r_ == 0 ? 1 : binom(d, r_);
    const std::size_t end = off + binom(d, r_ - 1);
    std::vector<int> tried;
    for (int e = 0; e < n_; ++e) {
      if ((used & bit(e)) != 0 || class_of_[e] != position_class_[d]) continue;
      bool equivalent = false;
      for (int t : tried) {
        if (swaps_[t][e]) {
          equivalent = true;
          break;
        }
      }
      if (equivalent) continue;
      tried.push_back(e);

      const std::uint64_t half = std::uint64_t{1} << d;
      for (std::uint64_t t = 0; t < half; ++t) orig_[t | half] = orig_[t] | bit(e);
      std::size_t idx = off;
      detail::for_each_combination(d, r_ - 1, [&](std::uint64_t t) {
        cur_[idx++] = table_[orig_[t] | bit(e)] == r_ ? 1 : 0;
      });
      // best_ may have changed in an earlier sibling, so compare the whole
      // prefix rather than carrying a flag down.
      if (have_best_ && std::memcmp(cur_.data(), best_.data(), end) > 0) continue;
      search(d + 1, used | bit(e));
    }
  }

  int n_;
  int r_;
  std::span<const std::uint8_t> table_;
  std::vector<int> class_of_;
  std::vector<int> position_class_;
  std::vector<std::vector<bool>> swaps_;
  std::size_t length_ = 0;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_;
  bool have_best_ = false;
  std::vector<std::uint64_t> orig_;
};

// Ordered r-subsets of {0..n-1}, the index space of the encoding.
std::vector<std::uint64_t> subsets_in_order(int n, int r) {
  std::vector<std::uint64_t> out;
  detail::for_each_combination(n, r, [&](std::uint64_t x) { out.push_back(x); });
  return out;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InputError("bad " + std::string(what) + " in canonical form");
  }
  return value;
}

}  // namespace

std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
  if (auto c = a.n <=> b.n; c != 0) return c;
  if (auto c = a.r <=> b.r; c != 0) return c;
  return std::lexicographical_compare_three_way(a.bits.begin(), a.bits.end(),
                                                b.bits.begin(), b.bits.end());
}

std::string CanonicalForm::to_string() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "cf1:n" + std::to_string(n) + "-r" + std::to_string(r) + "-";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble = (nibble << 1) | (i + j < bits.size() ? bits[i + j] : 0);
    }
    out.push_back(kHex[nibble]);
  }
  return out;
}

CanonicalForm CanonicalForm::parse(std::string_view text) {
  if (!text.starts_with("cf1:n")) {
    throw InputError("canonical form must start with cf1:n");
  }
  text.remove_prefix(5);
  const auto dash1 = text.find("-r");
  if (dash1 == std::string_view::npos) throw InputError("canonical form lacks -r");
  const auto dash2 = text.find('-', dash1 + 2);
  if (dash2 == std::string_view::npos) throw InputError("canonical form lacks hex part");
  CanonicalForm cf;
  cf.n = parse_int(text.substr(0, dash1), "size");
  cf.r = parse_int(text.substr(dash1 + 2, dash2 - dash1 - 2), "rank");
  if (cf.n < 0 || cf.r < 0 || cf.r > cf.n) {
    throw InputError("canonical form has inconsistent size and rank");
  }
  if (cf.n > kMaxCanonicalSize) {
    throw CapacityError("canonical forms are limited to 12 elements");
  }
  const std::string_view hex = text.substr(dash2 + 1);
  const std::size_t length = binom(cf.n, cf.r);
  if (hex.size() != (length + 3) / 4) {
    throw InputError("canonical form hex part has the wrong length");
  }
  cf.bits.assign(length, 0);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    int v = 0;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else {
      throw InputError("canonical form hex part has a non-hex character");
    }
    for (int j = 0; j < 4; ++j) {
      const std::size_t pos = 4 * i + j;
      const int b = (v >> (3 - j)) & 1;
      if (pos < length) {
        cf.bits[pos] = static_cast<std::uint8_t>(b);
      } else if (b != 0) {
        throw InputError("canonical form has nonzero padding");
      }
    }
  }
  std::vector<std::uint64_t> bases;
  const auto subsets = subsets_in_order(cf.n, cf.r);
  for (std::size_t i = 0; i < length; ++i) {
    if (cf.bits[i] != 0) bases.push_back(subsets[i]);
  }
  if (!validate_basis_masks(bases, cf.n)) {
    throw InputError("canonical form does not encode a matroid");
  }
  if (canonical_form(detail::matroid_from_bases_unchecked(cf.n, bases)) != cf) {
    throw InputError("canonical form is not in canonical position");
  }
  return cf;
}

Matroid CanonicalForm::decode() const {
  std::vector<std::uint64_t> bases;
  const auto subsets = subsets_in_order(n, r);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) bases.push_back(subsets[i]);
  }
  return detail::matroid_from_bases_unchecked(n, std::move(bases));
}

std::vector<std::vector<int>> element_invariants(const Matroid& m) {
  const int n = m.size();
  const auto table = m.rank_table();
  std::vector<std::vector<int>> inv(n, std::vector<int>(2 + 2 * n, 0));
  for (int e = 0; e < n; ++e) inv[e][0] = table[bit(e)] == 0 ? 0 : 1;
  for (std::uint64_t b : m.basis_masks()) {
    for (std::uint64_t x = b; x != 0; x &= x - 1) ++inv[std::countr_zero(x)][1];
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t x = 1; x < size; ++x) {
    const int s = popcount(x);
    const bool circuit = detail::is_circuit_mask(table, x);
    const bool cocircuit = detail::is_cocircuit_mask(table, n, x);
    if (!circuit && !cocircuit) continue;
    for (std::uint64_t y = x; y != 0; y &= y - 1) {
      const int e = std::countr_zero(y);
      if (circuit) ++inv[e][1 + s];
      if (cocircuit) ++inv[e][1 + n + s];
    }
  }
  return inv;
}

CanonicalForm canonical_form(const Matroid& m) {
  note_op(Op::kCanonicalForm);
  if (m.size() > kMaxCanonicalSize) {
    throw CapacityError("canonical form needs n <= 12; got n=" +
                        std::to_string(m.size()));
  }
  CanonicalForm cf;
  cf.n = m.size();
  cf.r = m.rank();
  cf.bits = CanonicalSearch(m).run();
  return cf;
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  const int n = m.size();
  if (static_cast<int>(perm.size()) != n) {
    throw InputError("relabeling has the wrong length");
  }
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & bit(p)) != 0) {
      throw InputError("relabeling is not a permutation");
    }
    seen |= bit(p);
  }
  std::vector<std::uint64_t> bases;
  bases.reserve(m.basis_masks().size());
  for (std::uint64_t b : m.basis_masks()) {
    std::uint64_t out = 0;
    for (std::uint64_t x = b; x != 0; x &= x - 1) out |= bit(perm[std::countr_zero(x)]);
    bases.push_back(out);
  }
  return detail::matroid_from_bases_unchecked(n, std::move(bases), m.name());
}

}  // namespace mcon
