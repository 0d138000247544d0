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

#include "mcon/constructions.hpp"

#include <string>

#include "mcon/coverage.hpp"
#include "mcon/error.hpp"

namespace mcon {
namespace {

WheelLabeling standard_labeling(WheelKind kind, int k) {
  WheelLabeling l;
  l.kind = kind;
  l.k = k;
  for (int i = 0; i < k; ++i) {
    l.rim.push_back(2 * i);
    l.spokes.push_back(2 * i + 1);
  }
  return l;
}

Matroid wheel_graph(int k) {
  if (k < 2) {
    throw InputError("wheel needs k >= 2; got " + std::to_string(k));
  }
  if (2 * k > kMaxGroundSize) {
    throw CapacityError("wheel(" + std::to_string(k) + ") exceeds 64 elements");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) {
    const int prev = i == 1 ? k : i - 1;
    edges.emplace_back(prev, i);
    edges.emplace_back(0, i);
  }
  return Matroid::graphic(k + 1, std::move(edges), "wheel" + std::to_string(k));
}

}  // namespace

std::string_view wheel_kind_name(WheelKind kind) {
  return kind == WheelKind::kWheel ? "wheel" : "whirl";
}

Matroid uniform(int r, int n) {
  note_op(Op::kUniform);
  return Matroid::uniform_rep(r, n, "U" + std::to_string(r) + "," + std::to_string(n));
}

LabeledMatroid wheel(int k) {
  note_op(Op::kWheel);
  return {wheel_graph(k), standard_labeling(WheelKind::kWheel, k)};
}

LabeledMatroid whirl(int k) {
  note_op(Op::kWhirl);
  const Matroid w = wheel_graph(k);
  std::uint64_t rim = 0;
  for (int i = 0; i < k; ++i) rim |= bit(2 * i);
  Matroid relaxed = relax_circuit_hyperplane(w, ElementSet(w.size(), rim))
                        .with_name("whirl" + std::to_string(k));
  return {std::move(relaxed), standard_labeling(WheelKind::kWhirl, k)};
}

}  // namespace mcon
