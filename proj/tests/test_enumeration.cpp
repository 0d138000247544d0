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

#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "mcon/canonical.hpp"
#include "mcon/census.hpp"
#include "mcon/constructions.hpp"
#include "mcon/enumeration.hpp"
#include "mcon/error.hpp"

using namespace mcon;
using testing::masks;
using testing::set_of;

namespace {

ModularCut cut_of(const Matroid& m, std::vector<std::uint64_t> generators) {
  ModularCut cut;
  for (const auto& f : flats(m)) {
    for (auto g : generators) {
      if ((g & ~f.bits()) == 0) {
        cut.flats.push_back(f);
        break;
      }
    }
  }
  std::sort(cut.flats.begin(), cut.flats.end());
  return cut;
}

}  // namespace

TEST_CASE("flats") {
  CHECK(masks(flats(uniform(2, 3))) == std::vector<oracle::Mask>{0, 1, 2, 4, 7});
  CHECK(flats(uniform(1, 2)).size() == 2);
  const Matroid w = wheel(3).matroid;
  CHECK(static_cast<int>(flats(w).size()) == oracle::closed_sets(testing::rank_fn(w), 6));
  CHECK(flats(w).size() == 1 + 6 + 7 + 1);
  CHECK_THROWS_AS(flats(uniform(2, 10)), CapacityError);
}

TEST_CASE("modular cuts of a coloop") {
  const auto cuts = modular_cuts(uniform(1, 1));
  CHECK(cuts.size() == 3);
  std::set<CanonicalForm> children;
  for (const auto& c : cuts) {
    CHECK(is_modular_cut(uniform(1, 1), c));
    children.insert(canonical_form(extend(uniform(1, 1), c)));
  }
  const std::set<CanonicalForm> expected = {
      canonical_form(uniform(1, 2)), canonical_form(uniform(2, 2)),
      canonical_form(direct_sum(uniform(1, 1), uniform(0, 1)))};
  CHECK(children == expected);
}

TEST_CASE("principal cuts") {
  const Matroid u11 = uniform(1, 1);
  ModularCut all;
  for (const auto& f : flats(u11)) all.flats.push_back(f);
  const Matroid looped = extend(u11, all);
  CHECK(looped == direct_sum(u11, uniform(0, 1)));
  CHECK(looped.rank_of(0b10) == 0);

  const Matroid u23 = uniform(2, 3);
  const Matroid par = extend(u23, cut_of(u23, {0b001}));
  CHECK(par.rank_of(0b1001) == 1);
  CHECK(par.rank() == 2);
  const Matroid free = extend(u23, cut_of(u23, {0b111}));
  CHECK(free == uniform(2, 4));
  CHECK(!free.basis_masks().empty());
}

TEST_CASE("modular cut validation") {
  const Matroid u23 = uniform(2, 3);
  ModularCut gap;
  gap.flats = {set_of(3, {0}), ElementSet::full(3)};
  CHECK(is_modular_cut(u23, gap));
  ModularCut two_points;
  two_points.flats = {set_of(3, {0}), set_of(3, {1}), ElementSet::full(3)};
  CHECK(!is_modular_cut(u23, two_points));  // {0} and {1} meet in the empty flat
  ModularCut not_up;
  not_up.flats = {set_of(3, {0})};
  CHECK(!is_modular_cut(u23, not_up));
  ModularCut not_flat;
  not_flat.flats = {set_of(3, {0, 1}), ElementSet::full(3)};
  CHECK(!is_modular_cut(u23, not_flat));
  CHECK_THROWS_AS(extend(u23, two_points), InputError);
}

TEST_CASE("every enumerated cut gives a valid extension") {
  for (const auto& rec : testing::small_census()) {
    if (rec.n > 5) continue;
    const Matroid m = rec.cf.decode();
    for (const auto& cut : modular_cuts(m)) {
      REQUIRE(is_modular_cut(m, cut));
      const Matroid e = extend(m, cut);
      REQUIRE(validate_bases(e.bases(), e.size()));
      REQUIRE(delete_elements(e, ElementSet(e.size(), bit(m.size()))) == m);
    }
  }
}

TEST_CASE("class counts") {
  const auto levels = enumerate_matroids(3);
  CHECK(levels[0].size() == 1);
  CHECK(levels[1].size() == 2);
  CHECK(levels[2].size() == 4);
  CHECK(levels[0].size() + levels[1].size() + levels[2].size() == 7);
  CHECK(levels[3].size() == 8);
  for (const auto& level : levels) {
    for (const auto& cf : level) CHECK(validate_bases(cf.decode().bases(), cf.n));
  }
  CHECK(naive_enumerate(1).size() == 2);
  CHECK(naive_enumerate(2).size() == 4);
  CHECK(naive_enumerate(4) == enumerate_matroids(4)[4]);
  CHECK_THROWS_AS(enumerate_matroids(9), CapacityError);
  CHECK_THROWS_AS(naive_enumerate(7), CapacityError);
  CHECK_THROWS_AS(enumerate_matroids(-1), InputError);
}

TEST_CASE("enumeration matches the direct scan through six elements") {
  const auto levels = enumerate_matroids(6);
  for (int n = 0; n <= 6; ++n) CHECK(naive_enumerate(n) == levels[n]);
}

TEST_CASE("enumeration is the same at any thread count") {
  CHECK(enumerate_matroids(6, 1) == enumerate_matroids(6, 4));
  CHECK(census(5, 1) == census(5, 3));
}

TEST_CASE("census filters") {
  const auto rec = census(4);
  const auto c3 = filter_census(rec, CensusFilter::kThreeConnected);
  std::set<CanonicalForm> got;
  for (const auto& r : c3) got.insert(r.cf);
  const std::set<CanonicalForm> expected = {
      canonical_form(uniform(0, 1)), canonical_form(uniform(1, 1)),
      canonical_form(uniform(1, 2)), canonical_form(uniform(1, 3)),
      canonical_form(uniform(2, 3)), canonical_form(uniform(2, 4))};
  CHECK(got == expected);
  CHECK(parse_census_filter("sm2c") == CensusFilter::kSm2c);
  CHECK(parse_census_filter("trianglefree") == CensusFilter::kTriangleFree);
  CHECK_THROWS_AS(parse_census_filter("wheels"), InputError);
  for (const auto& r : filter_census(rec, CensusFilter::kTriangleFree)) {
    CHECK(r.flags.triangle_count == 0);
  }
  std::set<CanonicalForm> sm2c;
  for (const auto& r : filter_census(rec, CensusFilter::kSm2c)) sm2c.insert(r.cf);
  CHECK(sm2c == std::set<CanonicalForm>{
                    canonical_form(uniform(0, 1)), canonical_form(uniform(1, 1)),
                    canonical_form(uniform(1, 2)), canonical_form(uniform(2, 3)),
                    canonical_form(uniform(3, 4))});
}

TEST_CASE("census records round-trip through ndjson") {
  const auto rec = census(4);
  std::stringstream ss;
  write_census(ss, rec);
  CHECK(read_census(ss) == rec);
  const std::string line = census_record_to_json(rec.back());
  CHECK(line.find("\"cf\":\"cf1:") != std::string::npos);
  CHECK_THROWS_AS(census_record_from_json("{not json"), InputError);
  CHECK_THROWS_AS(census_record_from_json("{\"cf\":\"cf1:n4-r2-fc\",\"n\":4}"), InputError);
  std::string wrong_n = census_record_to_json(rec.back());
  wrong_n.replace(wrong_n.find("\"n\":4"), 5, "\"n\":3");
  CHECK_THROWS_AS(census_record_from_json(wrong_n), InputError);
}
