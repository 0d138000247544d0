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

#ifndef MCON_COVERAGE_HPP_
#define MCON_COVERAGE_HPP_

#include <string_view>
#include <vector>

namespace mcon {

// Public library operations. Each one records that it ran so the harness
// can assert that a full verification run touched every operation.
enum class Op {
  kRank,
  kCorank,
  kClosure,
  kCoclosure,
  kDual,
  kDelete,
  kContract,
  kRestrict,
  kCircuits,
  kCocircuits,
  kFundamentalCircuit,
  kSimplify,
  kCosimplify,
  kDirectSum,
  kTwoSum,
  kRelaxCircuitHyperplane,
  kValidateBases,
  kParallelClasses,
  kSeriesClasses,
  kLambda,
  kFindKSeparation,
  kIsKConnected,
  kIsMinimallyKConnected,
  kIsSuperMinimallyKConnected,
  kIsBrittle,
  kTriangles,
  kTriads,
  kEssentialElements,
  kElementsInTriads,
  kUniform,
  kWheel,
  kWhirl,
  kCanonicalForm,
  kAreIsomorphic,
  kRecognizeWheelOrWhirl,
  kFlats,
  kModularCuts,
  kExtend,
  kEnumerateMatroids,
  kNaiveEnumerate,
  kCensus,
  kCount_
};

std::string_view op_name(Op op);

void note_op(Op op);
void reset_op_coverage();
std::vector<std::string_view> uncovered_ops();

}  // namespace mcon

#endif  // MCON_COVERAGE_HPP_
