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

#include "mcon/census.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"
#include "mcon/coverage.hpp"
#include "mcon/enumeration.hpp"
#include "mcon/error.hpp"
#include "mcon/parallel.hpp"

namespace mcon {

using Json = nlohmann::ordered_json;

std::vector<CensusRecord> census(int n_max, int threads) {
  note_op(Op::kCensus);
  const auto levels = enumerate_matroids(n_max, threads);
  std::vector<const CanonicalForm*> forms;
  for (std::size_t n = 1; n < levels.size(); ++n) {
    for (const auto& cf : levels[n]) forms.push_back(&cf);
  }
  std::vector<CensusRecord> out(forms.size());
  parallel_for(forms.size(), threads, [&](std::size_t i) {
    const Matroid m = forms[i]->decode();
    out[i] = CensusRecord{*forms[i], m.size(), m.rank(), compute_flags(m)};
  });
  return out;
}

CensusFilter parse_census_filter(std::string_view keyword) {
  if (keyword == "3connected") return CensusFilter::kThreeConnected;
  if (keyword == "min3c") return CensusFilter::kMin3c;
  if (keyword == "sm3c") return CensusFilter::kSm3c;
  if (keyword == "sm2c") return CensusFilter::kSm2c;
  if (keyword == "brittle") return CensusFilter::kBrittle;
  if (keyword == "trianglefree") return CensusFilter::kTriangleFree;
  throw InputError("unknown census filter '" + std::string(keyword) +
                   "'; expected 3connected, min3c, sm3c, sm2c, brittle or trianglefree");
}

bool matches_filter(const CensusRecord& record, CensusFilter filter) {
  switch (filter) {
    case CensusFilter::kThreeConnected:
      return record.flags.is_3connected;
    case CensusFilter::kMin3c:
      return record.flags.is_min_3connected;
    case CensusFilter::kSm3c:
      return record.flags.is_sm_3connected;
    case CensusFilter::kSm2c:
      return is_super_minimally_k_connected(record.cf.decode(), 2);
    case CensusFilter::kBrittle:
      return record.flags.is_brittle;
    case CensusFilter::kTriangleFree:
      return record.flags.triangle_count == 0;
  }
  return false;
}

std::vector<CensusRecord> filter_census(const std::vector<CensusRecord>& records,
                                        CensusFilter filter) {
  std::vector<CensusRecord> out;
  for (const auto& r : records) {
    if (matches_filter(r, filter)) out.push_back(r);
  }
  return out;
}

std::string census_record_to_json(const CensusRecord& record) {
  Json j;
  j["cf"] = record.cf.to_string();
  j["n"] = record.n;
  j["r"] = record.r;
  j["3c"] = record.flags.is_3connected;
  j["min3c"] = record.flags.is_min_3connected;
  j["sm3c"] = record.flags.is_sm_3connected;
  j["brittle"] = record.flags.is_brittle;
  j["triangles"] = record.flags.triangle_count;
  j["triads"] = record.flags.triad_count;
  j["eit"] = record.flags.elements_in_triads;
  if (record.flags.essential_count) {
    j["essential"] = *record.flags.essential_count;
  } else {
    j["essential"] = nullptr;
  }
  return j.dump();
}

CensusRecord census_record_from_json(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("census line is not JSON: ") + e.what());
  }
  try {
    CensusRecord rec;
    rec.cf = CanonicalForm::parse(j.at("cf").get<std::string>());
    rec.n = j.at("n").get<int>();
    rec.r = j.at("r").get<int>();
    if (rec.n != rec.cf.n || rec.r != rec.cf.r) {
      throw InputError("census line n/r disagree with its canonical form");
    }
    rec.flags.is_3connected = j.at("3c").get<bool>();
    rec.flags.is_min_3connected = j.at("min3c").get<bool>();
    rec.flags.is_sm_3connected = j.at("sm3c").get<bool>();
    rec.flags.is_brittle = j.at("brittle").get<bool>();
    rec.flags.triangle_count = j.at("triangles").get<int>();
    rec.flags.triad_count = j.at("triads").get<int>();
    rec.flags.elements_in_triads = j.at("eit").get<int>();
    const auto& ess = j.at("essential");
    if (!ess.is_null()) rec.flags.essential_count = ess.get<int>();
    return rec;
  } catch (const Json::exception& e) {
    throw InputError(std::string("census line has a missing or mistyped field: ") +
                     e.what());
  }
}

void write_census(std::ostream& out, const std::vector<CensusRecord>& records) {
  for (const auto& r : records) out << census_record_to_json(r) << '\n';
}

std::vector<CensusRecord> read_census(std::istream& in) {
  std::vector<CensusRecord> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      out.push_back(census_record_from_json(line));
    } catch (const InputError& e) {
      throw InputError("census line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace mcon
