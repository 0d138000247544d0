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

#ifndef MCON_ENUMERATION_HPP_
#define MCON_ENUMERATION_HPP_

#include <vector>

#include "mcon/canonical.hpp"
#include "mcon/element_set.hpp"
#include "mcon/matroid.hpp"

namespace mcon {

inline constexpr int kMaxFlatsSize = 9;
inline constexpr int kMaxEnumerationSize = 8;
inline constexpr int kMaxNaiveSize = 6;

// All flats ordered by (rank, mask). Requires n <= 9.
std::vector<ElementSet> flats(const Matroid& m);

// A set of flats defining a single-element extension. The empty cut adds a
// coloop; the cut {E} adds a free element; the cut of all flats adds a loop.
struct ModularCut {
  std::vector<ElementSet> flats;  // sorted

  friend bool operator==(const ModularCut&, const ModularCut&) = default;
};

bool is_modular_cut(const Matroid& m, const ModularCut& cut);

// Every modular cut of m, the empty cut first. Requires n <= 8.
std::vector<ModularCut> modular_cuts(const Matroid& m);

// The extension by a new element n lying in exactly the flats of the cut.
// Throws InputError for an invalid cut.
Matroid extend(const Matroid& m, const ModularCut& cut);

// levels[i] holds the canonical forms of all matroids on i elements, sorted.
std::vector<std::vector<CanonicalForm>> enumerate_matroids(int n_max, int threads = 1);

// Independent oracle: scans basis families directly. Requires n <= 6.
std::vector<CanonicalForm> naive_enumerate(int n);

}  // namespace mcon

#endif  // MCON_ENUMERATION_HPP_
