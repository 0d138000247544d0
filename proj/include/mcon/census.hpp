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

#ifndef MCON_CENSUS_HPP_
#define MCON_CENSUS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcon/canonical.hpp"
#include "mcon/connectivity.hpp"

namespace mcon {

struct CensusRecord {
  CanonicalForm cf;
  int n = 0;
  int r = 0;
  PropertyFlags flags;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// Every isomorphism class on 1..n_max elements with its flags, ordered by
// (n, r, encoding). The empty matroid is not listed.
std::vector<CensusRecord> census(int n_max, int threads = 1);

enum class CensusFilter { kThreeConnected, kMin3c, kSm3c, kSm2c, kBrittle, kTriangleFree };

// Accepts 3connected, min3c, sm3c, sm2c, brittle, trianglefree.
CensusFilter parse_census_filter(std::string_view keyword);
bool matches_filter(const CensusRecord& record, CensusFilter filter);
std::vector<CensusRecord> filter_census(const std::vector<CensusRecord>& records,
                                        CensusFilter filter);

std::string census_record_to_json(const CensusRecord& record);
// Throws InputError on malformed lines or a cf that disagrees with n and r.
CensusRecord census_record_from_json(std::string_view line);

void write_census(std::ostream& out, const std::vector<CensusRecord>& records);
std::vector<CensusRecord> read_census(std::istream& in);

}  // namespace mcon

#endif  // MCON_CENSUS_HPP_
