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

#ifndef MCON_ELEMENT_SET_HPP_
#define MCON_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mcon {

// Pure constructions (uniform, wheel, direct sums) accept up to 64 elements.
inline constexpr int kMaxGroundSize = 64;
// Exhaustive searches and rank tables are limited to 24 elements.
inline constexpr int kMaxSearchSize = 24;

constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

inline int popcount(std::uint64_t x) { return std::popcount(x); }

// A subset of the ground set {0, ..., n-1}, stored as a bitmask.
class ElementSet {
 public:
  ElementSet() = default;
  // Throws InputError if bits has a bit at position >= ground.
  ElementSet(int ground, std::uint64_t bits);

  static ElementSet empty(int ground) { return ElementSet(ground, 0); }
  static ElementSet full(int ground) {
    return ElementSet(ground, full_mask(ground));
  }
  static ElementSet of(int ground, std::initializer_list<int> elements);
  static ElementSet of(int ground, std::span<const int> elements);

  int ground_size() const { return ground_; }
  std::uint64_t bits() const { return bits_; }
  int count() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int e) const {
    return e >= 0 && e < ground_ && ((bits_ >> e) & 1U) != 0;
  }
  // Lowest element, or -1 for the empty set.
  int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  ElementSet with(int e) const;
  ElementSet without(int e) const;
  ElementSet complement() const {
    return ElementSet(ground_, full_mask(ground_) & ~bits_, Unchecked{});
  }
  bool is_subset_of(const ElementSet& other) const;

  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator-(const ElementSet& other) const;

  std::vector<int> elements() const;
  // "{0,2,5}"
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  struct Unchecked {};
  ElementSet(int ground, std::uint64_t bits, Unchecked)
      : bits_(bits), ground_(ground) {}
  void require_same_ground(const ElementSet& other) const;

  std::uint64_t bits_ = 0;
  int ground_ = 0;
};

namespace detail {

// Calls f(mask) for every k-subset of {0..n-1} in increasing numeric order.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  const std::uint64_t last = full_mask(n) ^ full_mask(n - k);
  std::uint64_t x = full_mask(k);
  while (true) {
    f(x);
    if (x == last) break;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

// Calls f(sub) for every submask of mask, in increasing numeric order.
template <class F>
void for_each_submask(std::uint64_t mask, F&& f) {
  std::uint64_t sub = 0;
  while (true) {
    f(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace detail
}  // namespace mcon

#endif  // MCON_ELEMENT_SET_HPP_
