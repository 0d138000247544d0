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

#include "mcon/element_set.hpp"

#include "mcon/error.hpp"

namespace mcon {

ElementSet::ElementSet(int ground, std::uint64_t bits)
    : bits_(bits), ground_(ground) {
  if (ground < 0 || ground > kMaxGroundSize) {
    throw InputError("ground set size " + std::to_string(ground) +
                     " outside [0, 64]");
  }
  if ((bits & ~full_mask(ground)) != 0) {
    throw InputError("element index outside ground set of size " +
                     std::to_string(ground));
  }
}

ElementSet ElementSet::of(int ground, std::initializer_list<int> elements) {
  return of(ground, std::span<const int>(elements.begin(), elements.size()));
}

ElementSet ElementSet::of(int ground, std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= ground) {
      throw InputError("element " + std::to_string(e) +
                       " outside ground set of size " + std::to_string(ground));
    }
    bits |= bit(e);
  }
  return ElementSet(ground, bits);
}

ElementSet ElementSet::with(int e) const {
  if (e < 0 || e >= ground_) {
    throw InputError("element " + std::to_string(e) + " out of range");
  }
  return ElementSet(ground_, bits_ | bit(e), Unchecked{});
}

ElementSet ElementSet::without(int e) const {
  if (e < 0 || e >= ground_) {
    throw InputError("element " + std::to_string(e) + " out of range");
  }
  return ElementSet(ground_, bits_ & ~bit(e), Unchecked{});
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_ground(other);
  return (bits_ & ~other.bits_) == 0;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  require_same_ground(other);
  return ElementSet(ground_, bits_ | other.bits_, Unchecked{});
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  require_same_ground(other);
  return ElementSet(ground_, bits_ & other.bits_, Unchecked{});
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  require_same_ground(other);
  return ElementSet(ground_, bits_ & ~other.bits_, Unchecked{});
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

void ElementSet::require_same_ground(const ElementSet& other) const {
  if (ground_ != other.ground_) {
    throw InputError("element sets over different ground sets (" +
                     std::to_string(ground_) + " vs " +
                     std::to_string(other.ground_) + ")");
  }
}

}  // namespace mcon
