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

// Exhaustive verification suites over the small-matroid census plus
// constructed wheels and whirls.

#ifndef MCON_SUITES_HPP_
#define MCON_SUITES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcon/census.hpp"
#include "mcon/connectivity.hpp"
#include "mcon/matroid.hpp"

namespace mcon {

struct Counterexample {
  std::string key;  // canonical form, or a labeled encoding above 12 elements
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  long long checked = 0;
  std::vector<std::pair<std::string, long long>> parts;
  std::vector<Counterexample> fails;
  double elapsed_s = 0.0;
  std::string scope;

  bool passed() const { return fails.empty(); }
};

// {"suite","checked","parts","fails":[{"cf","detail"}],"elapsed_s","verdict","scope"}
std::string report_to_json(const SuiteReport& report);

struct CorpusEntry {
  Matroid matroid;
  std::string key;
  PropertyFlags flags;
  bool constructed = false;
};

struct SuiteContext {
  int n_max = 8;
  int k_max = 7;
  int threads = 1;
  std::vector<CensusRecord> census;
  std::vector<CorpusEntry> census_entries;  // census decoded, same order
  std::vector<CorpusEntry> constructed;     // wheels then whirls, by k

  std::vector<const CorpusEntry*> corpus() const;
};

// Builds the census (or takes a prebuilt one) and the constructed family
// wheel(k), whirl(k) for max(3, n_max / 2 + 1) <= k <= k_max.
SuiteContext make_context(int n_max, int k_max, int threads,
                          std::optional<std::vector<CensusRecord>> census = std::nullopt);

// Canonical form for n <= 12, otherwise "lab1:n<n>-r<r>-<hex>" over the
// labeled basis indicator.
std::string matroid_key(const Matroid& m);
// Inverse of matroid_key for either encoding.
Matroid matroid_from_key(const std::string& key);

SuiteReport suite_table1(const SuiteContext& ctx);
SuiteReport suite_prop11(const SuiteContext& ctx);
SuiteReport suite_density(const SuiteContext& ctx);
SuiteReport suite_lemma31(const SuiteContext& ctx);
SuiteReport suite_lemma32(const SuiteContext& ctx);
SuiteReport suite_wheelgrowth(const SuiteContext& ctx);
SuiteReport suite_brittle(const SuiteContext& ctx);
SuiteReport suite_triads(const SuiteContext& ctx);
SuiteReport suite_background(const SuiteContext& ctx);
SuiteReport suite_algebra(const SuiteContext& ctx);
SuiteReport suite_enumeration(const SuiteContext& ctx);

// Names accepted by run_suite, in the order run_all uses.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteContext& ctx);
// Every suite, then a coverage report asserting each library operation ran.
std::vector<SuiteReport> run_all(const SuiteContext& ctx);

}  // namespace mcon

#endif  // MCON_SUITES_HPP_
