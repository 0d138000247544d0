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

#ifndef MCON_CONNECTIVITY_HPP_
#define MCON_CONNECTIVITY_HPP_

#include <optional>
#include <vector>

#include "mcon/element_set.hpp"
#include "mcon/matroid.hpp"

namespace mcon {

struct SeparationWitness {
  ElementSet side;
  int order = 0;
  int lambda_value = 0;
  bool nonminimal = false;
};

// r(X) + r(E - X) - r(M).
int lambda(const Matroid& m, const ElementSet& x);

// Exhaustive search for a k-separation {X, E - X}; with require_nonminimal
// both sides must have at least k + 1 elements. The side never contains
// element n - 1, and the witness with the smallest mask is returned.
std::optional<SeparationWitness> find_k_separation(const Matroid& m, int k,
                                                   bool require_nonminimal = false);

// Tutte connectivity: no j-separation for any 1 <= j < level. level >= 2.
bool is_k_connected(const Matroid& m, int level);
bool is_minimally_k_connected(const Matroid& m, int level);
// k-connected, and no proper restriction with at least 2k - 2 elements is
// k-connected.
bool is_super_minimally_k_connected(const Matroid& m, int k);

// Input must be simple. True iff no restriction with at least four elements
// is 3-connected.
bool is_brittle(const Matroid& m);
bool is_simple(const Matroid& m);

std::vector<ElementSet> triangles(const Matroid& m);
std::vector<ElementSet> triads(const Matroid& m);
// Input must be 3-connected.
ElementSet essential_elements(const Matroid& m);
int elements_in_triads(const Matroid& m);

struct PropertyFlags {
  bool is_3connected = false;
  bool is_min_3connected = false;
  bool is_sm_3connected = false;
  // Simple and brittle; false for non-simple matroids.
  bool is_brittle = false;
  int triangle_count = 0;
  int triad_count = 0;
  int elements_in_triads = 0;
  // Present only for 3-connected matroids.
  std::optional<int> essential_count;

  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

PropertyFlags compute_flags(const Matroid& m);

}  // namespace mcon

#endif  // MCON_CONNECTIVITY_HPP_
