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

#ifndef MCON_TESTS_HELPERS_HPP_
#define MCON_TESTS_HELPERS_HPP_

#include <algorithm>
#include <vector>

#include "mcon/census.hpp"
#include "mcon/matroid.hpp"
#include "oracles.hpp"

namespace testing {

inline oracle::RankFn rank_fn(const mcon::Matroid& m) {
  return [m](oracle::Mask x) { return m.rank_of(x); };
}

inline std::vector<oracle::Mask> masks(const std::vector<mcon::ElementSet>& sets) {
  std::vector<oracle::Mask> out;
  for (const auto& s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<oracle::Mask> sorted(std::vector<oracle::Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline mcon::ElementSet set_of(int n, std::initializer_list<int> elements) {
  return mcon::ElementSet::of(n, elements);
}

// Census classes on up to six elements, shared across test cases.
inline const std::vector<mcon::CensusRecord>& small_census() {
  static const std::vector<mcon::CensusRecord> records = mcon::census(6, 1);
  return records;
}

}  // namespace testing

#endif  // MCON_TESTS_HELPERS_HPP_
