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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mcon/canonical.hpp"
#include "mcon/connectivity.hpp"
#include "mcon/constructions.hpp"
#include "mcon/error.hpp"

using namespace mcon;
using testing::set_of;

namespace {

std::vector<int> shuffled(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

bool is_isomorphism(const Matroid& a, const Matroid& b, const std::vector<int>& f) {
  return relabel(a, f) == b;
}

}  // namespace

TEST_CASE("uniform matroids") {
  const Matroid u24 = uniform(2, 4);
  CHECK(u24.basis_masks().size() == 6);
  CHECK(u24.name() == "U2,4");
  const Matroid loop = uniform(0, 1);
  CHECK(loop.size() == 1);
  CHECK(loop.rank() == 0);
  const Matroid pair = uniform(1, 2);
  CHECK(parallel_classes(pair).classes.size() == 1);
  CHECK(pair.rank() == 1);
  CHECK_THROWS_AS(uniform(3, 2), InputError);
  CHECK_THROWS_AS(uniform(-1, 2), InputError);
}

TEST_CASE("wheels") {
  const auto w3 = wheel(3);
  CHECK(w3.matroid.size() == 6);
  CHECK(w3.matroid.rank() == 3);
  const auto trees = oracle::bases_of(oracle::graph_rank_fn(4, oracle::wheel_edges(3)), 6);
  CHECK(trees.size() == 16);
  CHECK(w3.matroid.basis_masks() == trees);
  CHECK(triangles(w3.matroid).size() == 4);
  CHECK(triads(w3.matroid).size() == 4);
  CHECK(wheel(4).matroid.size() == 8);
  CHECK(wheel(4).matroid.rank() == 4);
  for (int k = 3; k <= 6; ++k) {
    const auto rk = oracle::graph_rank_fn(k + 1, oracle::wheel_edges(k));
    const Matroid w = wheel(k).matroid;
    for (oracle::Mask x = 0; x <= oracle::all_of(2 * k); x += 7) REQUIRE(w.rank_of(x) == rk(x));
  }
  const auto& lab = w3.labeling;
  CHECK(lab.rim == std::vector<int>{0, 2, 4});
  CHECK(lab.spokes == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(wheel(1), InputError);
}

TEST_CASE("whirls") {
  CHECK(are_isomorphic(whirl(2).matroid, uniform(2, 4)));
  CHECK(whirl(3).matroid.basis_masks().size() == 16 + 1);
  for (int k = 2; k <= 7; ++k) {
    CHECK(whirl(k).matroid.rank() == k);
    CHECK(whirl(k).matroid.size() == 2 * k);
  }
  CHECK(whirl(5).labeling.kind == WheelKind::kWhirl);
}

TEST_CASE("canonical forms") {
  std::mt19937 rng(7);
  const CanonicalForm u24 = canonical_form(uniform(2, 4));
  for (int t = 0; t < 5; ++t) {
    CHECK(canonical_form(relabel(uniform(2, 4), shuffled(4, rng))) == u24);
  }
  CHECK(canonical_form(wheel(3).matroid) != canonical_form(whirl(3).matroid));
  CHECK(canonical_form(uniform(1, 3)) != canonical_form(uniform(2, 3)));
  CHECK(u24.to_string() == "cf1:n4-r2-fc");
  CHECK(CanonicalForm::parse(u24.to_string()) == u24);
  CHECK(canonical_form(Matroid()).to_string() == "cf1:n0-r0-8");
  CHECK_THROWS_AS(canonical_form(uniform(2, 13)), CapacityError);
}

TEST_CASE("canonical form parsing rejects bad input") {
  CHECK_THROWS_AS(CanonicalForm::parse("cf2:n4-r2-fc"), InputError);
  CHECK_THROWS_AS(CanonicalForm::parse("cf1:n4-r2-f"), InputError);
  CHECK_THROWS_AS(CanonicalForm::parse("cf1:n4-r2-fd"), InputError);  // padding
  CHECK_THROWS_AS(CanonicalForm::parse("cf1:n4-r2-84"), InputError);  // {01},{23}
  CHECK_THROWS_AS(CanonicalForm::parse("cf1:n4-r2-fg"), InputError);
  CHECK_THROWS_AS(CanonicalForm::parse("cf1:n4-r5-0"), InputError);
  CHECK_THROWS_AS(CanonicalForm::parse("cf1:n13-r1-0"), CapacityError);
  // A loop and a coloop: the loop must come first.
  CHECK(canonical_form(direct_sum(uniform(1, 1), uniform(0, 1))).to_string() == "cf1:n2-r1-4");
  CHECK_THROWS_AS(CanonicalForm::parse("cf1:n2-r1-8"), InputError);
}

TEST_CASE("canonical forms are invariant under relabeling on every small class") {
  std::mt19937 rng(11);
  for (const auto& rec : testing::small_census()) {
    const Matroid m = rec.cf.decode();
    for (int t = 0; t < 3; ++t) {
      REQUIRE(canonical_form(relabel(m, shuffled(m.size(), rng))) == rec.cf);
    }
  }
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(dual(uniform(2, 4)), uniform(2, 4)));
  CHECK(!are_isomorphic(wheel(4).matroid, whirl(4).matroid));
  CHECK(are_isomorphic(two_sum(uniform(2, 3), uniform(2, 3), 0, 0), uniform(3, 4)));
  CHECK(!are_isomorphic(uniform(2, 4), uniform(2, 5)));

  std::mt19937 rng(3);
  for (int k : {5, 7, 9}) {
    const Matroid w = wheel(k).matroid;
    const Matroid p = relabel(w, shuffled(2 * k, rng));
    const auto f = find_isomorphism(w, p);
    REQUIRE(f.has_value());
    CHECK(is_isomorphism(w, p, *f));
    CHECK(are_isomorphic(w, p));
    CHECK(!are_isomorphic(p, whirl(k).matroid));
  }
}

TEST_CASE("isomorphism search agrees with canonical forms") {
  const auto& recs = testing::small_census();
  for (std::size_t i = 0; i < recs.size(); i += 3) {
    for (std::size_t j = i; j < recs.size() && recs[j].n == recs[i].n; j += 5) {
      const bool iso = find_isomorphism(recs[i].cf.decode(), recs[j].cf.decode()).has_value();
      REQUIRE(iso == (i == j));
    }
  }
}

TEST_CASE("wheel and whirl recognition") {
  const auto w5 = recognize_wheel_or_whirl(wheel(5).matroid);
  REQUIRE(w5.has_value());
  CHECK(w5->kind == WheelKind::kWheel);
  CHECK(w5->k == 5);
  const auto w2 = recognize_wheel_or_whirl(whirl(2).matroid);
  REQUIRE(w2.has_value());
  CHECK(w2->kind == WheelKind::kWhirl);
  CHECK(w2->k == 2);
  CHECK(!recognize_wheel_or_whirl(uniform(3, 6)).has_value());
  CHECK(!recognize_wheel_or_whirl(uniform(2, 5)).has_value());

  std::mt19937 rng(5);
  for (int k = 3; k <= 7; ++k) {
    for (bool relaxed : {false, true}) {
      const Matroid m = relabel(relaxed ? whirl(k).matroid : wheel(k).matroid,
                                shuffled(2 * k, rng));
      const auto l = recognize_wheel_or_whirl(m);
      REQUIRE(l.has_value());
      CHECK(l->k == k);
      CHECK(l->kind == (relaxed ? WheelKind::kWhirl : WheelKind::kWheel));
      // The reported labeling carries the wheel's triangles and triads.
      for (int i = 0; i < k; ++i) {
        const int j = (i + 1) % k;
        const ElementSet tri = set_of(2 * k, {l->spokes[i], l->rim[j], l->spokes[j]});
        const ElementSet tad = set_of(2 * k, {l->rim[i], l->spokes[i], l->rim[j]});
        CHECK(rank(m, tri) == 2);
        CHECK(corank(m, tad) == 2);
      }
    }
  }
}
