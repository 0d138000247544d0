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

#include "mcon/coverage.hpp"

#include <array>
#include <atomic>

namespace mcon {
namespace {

constexpr std::size_t kOpCount = static_cast<std::size_t>(Op::kCount_);

constexpr std::array<std::string_view, kOpCount> kNames = {
    "rank",
    "corank",
    "closure",
    "coclosure",
    "dual",
    "delete",
    "contract",
    "restrict",
    "circuits",
    "cocircuits",
    "fundamental_circuit",
    "simplify",
    "cosimplify",
    "direct_sum",
    "two_sum",
    "relax_circuit_hyperplane",
    "validate_bases",
    "parallel_classes",
    "series_classes",
    "lambda",
    "find_k_separation",
    "is_k_connected",
    "is_minimally_k_connected",
    "is_super_minimally_k_connected",
    "is_brittle",
    "triangles",
    "triads",
    "essential_elements",
    "elements_in_triads",
    "uniform",
    "wheel",
    "whirl",
    "canonical_form",
    "are_isomorphic",
    "recognize_wheel_or_whirl",
    "flats",
    "modular_cuts",
    "extend",
    "enumerate_matroids",
    "naive_enumerate",
    "census",
};

std::array<std::atomic<bool>, kOpCount> g_seen{};

}  // namespace

std::string_view op_name(Op op) { return kNames[static_cast<std::size_t>(op)]; }

void note_op(Op op) {
  auto& flag = g_seen[static_cast<std::size_t>(op)];
  if (!flag.load(std::memory_order_relaxed)) {
    flag.store(true, std::memory_order_relaxed);
  }
}

void reset_op_coverage() {
  for (auto& flag : g_seen) flag.store(false, std::memory_order_relaxed);
}

std::vector<std::string_view> uncovered_ops() {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < kOpCount; ++i) {
    if (!g_seen[i].load(std::memory_order_relaxed)) out.push_back(kNames[i]);
  }
  return out;
}

}  // namespace mcon
