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

#ifndef MCON_CONSTRUCTIONS_HPP_
#define MCON_CONSTRUCTIONS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "mcon/matroid.hpp"

namespace mcon {

enum class WheelKind { kWheel, kWhirl };

std::string_view wheel_kind_name(WheelKind kind);

// rim[i] is a_{i+1} and spokes[i] is b_{i+1}. Triangles are
// {b_i, a_{i+1}, b_{i+1}} and triads are {a_i, b_i, a_{i+1}}, indices mod k.
struct WheelLabeling {
  WheelKind kind = WheelKind::kWheel;
  int k = 0;
  std::vector<int> rim;
  std::vector<int> spokes;
};

struct LabeledMatroid {
  Matroid matroid;
  WheelLabeling labeling;
};

Matroid uniform(int r, int n);

// Cycle matroid of the wheel with hub 0 and rim vertices 1..k. Element 2i is
// the rim edge a_{i+1} = (v_i, v_{i+1}) (v_0 = v_k) and element 2i + 1 is
// the spoke b_{i+1} = (0, v_{i+1}). Requires k >= 2.
LabeledMatroid wheel(int k);
// The wheel with its rim circuit-hyperplane relaxed. whirl(2) is U_{2,4}.
LabeledMatroid whirl(int k);

// Finds a labeling exhibiting m as a wheel (k >= 3) or a whirl (k >= 2).
std::optional<WheelLabeling> recognize_wheel_or_whirl(const Matroid& m);

}  // namespace mcon

#endif  // MCON_CONSTRUCTIONS_HPP_
