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

#include "doctest.h"
#include "helpers.hpp"
#include "mcon/connectivity.hpp"
#include "mcon/constructions.hpp"
#include "mcon/error.hpp"

using namespace mcon;
using testing::set_of;

namespace {

const oracle::RankFn kK4 = oracle::graph_rank_fn(4, oracle::wheel_edges(3));

oracle::Mask lowest_separation(const oracle::RankFn& rk, int n, int k, int min_side) {
  const oracle::Mask all = oracle::all_of(n);
  for (oracle::Mask x = 1; n > 0 && x < (oracle::Mask{1} << (n - 1)); ++x) {
    const int s = oracle::size_of(x);
    if (std::min(s, n - s) >= min_side && rk(x) + rk(all & ~x) - rk(all) <= k - 1) return x;
  }
  return 0;
}

}  // namespace

TEST_CASE("connectivity function") {
  CHECK(lambda(uniform(2, 4), set_of(4, {0, 1})) == 2);
  CHECK(lambda(wheel(3).matroid, ElementSet::empty(6)) == 0);
  // Star of rim vertex 1: rim edges 0 and 2, spoke 1.
  const oracle::Mask star = 0b000111;
  const int expected = oracle::whole(kK4, 6).lambda(star);
  CHECK(lambda(wheel(3).matroid, ElementSet(6, star)) == expected);
  CHECK(expected == 2);
}

TEST_CASE("separation witnesses") {
  CHECK(!find_k_separation(uniform(2, 4), 2).has_value());
  const auto w = find_k_separation(uniform(2, 2), 1);
  REQUIRE(w.has_value());
  CHECK(w->side == set_of(2, {0}));
  CHECK(w->lambda_value == 0);
  CHECK(!w->nonminimal);

  const Matroid cut = delete_elements(wheel(3).matroid, set_of(6, {0}));
  const auto ws = find_k_separation(cut, 2);
  REQUIRE(ws.has_value());
  CHECK(ws->side.bits() == lowest_separation(testing::rank_fn(cut), 5, 2, 2));
  CHECK(lambda(cut, ws->side) <= 1);
  CHECK_THROWS_AS(find_k_separation(cut, 0), InputError);
}

TEST_CASE("nonminimal separations need k + 1 elements on each side") {
  const Matroid m = direct_sum(uniform(2, 3), uniform(2, 3));
  const auto w = find_k_separation(m, 1, true);
  REQUIRE(w.has_value());
  CHECK(w->nonminimal);
  CHECK(std::min(w->side.count(), 6 - w->side.count()) >= 2);
  CHECK(!find_k_separation(uniform(2, 4), 2, true).has_value());
}

TEST_CASE("k-connectivity") {
  CHECK(is_k_connected(uniform(2, 4), 3));
  CHECK(is_k_connected(uniform(1, 3), 3));
  CHECK(!is_k_connected(direct_sum(uniform(2, 3), uniform(2, 3)), 2));
  CHECK(is_k_connected(Matroid(), 2));
  CHECK_THROWS_AS(is_k_connected(uniform(2, 4), 1), InputError);
}

TEST_CASE("minimal k-connectivity") {
  CHECK(!is_minimally_k_connected(uniform(1, 3), 3));
  CHECK(is_minimally_k_connected(wheel(3).matroid, 3));
  CHECK(!is_minimally_k_connected(uniform(2, 4), 3));
}

TEST_CASE("super-minimal k-connectivity") {
  for (int r = 0; r <= 5; ++r) CHECK(is_super_minimally_k_connected(uniform(r, r + 1), 2));
  CHECK(is_super_minimally_k_connected(wheel(4).matroid, 3));
  CHECK(is_super_minimally_k_connected(delete_elements(uniform(2, 4), set_of(4, {3})), 3));
  CHECK(!is_super_minimally_k_connected(uniform(2, 4), 2));
  CHECK(is_k_connected(uniform(2, 5), 3));
  CHECK(!is_super_minimally_k_connected(uniform(2, 5), 3));
}

TEST_CASE("brittleness") {
  CHECK(is_brittle(direct_sum(uniform(2, 3), uniform(1, 1))));
  CHECK(!is_brittle(uniform(2, 4)));
  CHECK(is_brittle(uniform(2, 2)));
  CHECK_THROWS_AS(is_brittle(uniform(1, 2)), InputError);
}

TEST_CASE("brittleness is not inherited from the parts with the basepoint deleted") {
  // A triangle {0, 1, 2} with 3 parallel to 0, glued at 3 onto U_{2,4}.
  // Both parts lose their basepoint to become U_{2,3}, which is brittle,
  // but element 0 then plays the basepoint's role inside a U_{2,4}.
  std::vector<std::uint64_t> bases;
  detail::for_each_combination(4, 2, [&](std::uint64_t x) {
    if (x != 0b1001) bases.push_back(x);
  });
  const Matroid m1 = Matroid::from_basis_masks(4, bases);
  const Matroid m2 = uniform(2, 4);
  CHECK(is_brittle(delete_elements(m1, set_of(4, {3}))));
  CHECK(is_brittle(delete_elements(m2, set_of(4, {0}))));
  const Matroid s = two_sum(m1, m2, 3, 0);
  REQUIRE(is_simple(s));
  CHECK(!is_brittle(s));
  CHECK(is_k_connected(restrict_to(s, set_of(6, {0, 3, 4, 5})), 3));
  // With brittle parts on both sides the composite stays brittle.
  CHECK(is_brittle(two_sum(uniform(2, 3), uniform(2, 3), 0, 0)));
}

TEST_CASE("triangles and triads") {
  CHECK(triangles(wheel(3).matroid).size() == 4);
  CHECK(triads(wheel(3).matroid).size() == 4);
  CHECK(triangles(whirl(3).matroid).size() ==
        oracle::circuits_of_size(testing::rank_fn(whirl(3).matroid), 6, 3).size());
  CHECK(triangles(whirl(3).matroid).size() < triangles(wheel(3).matroid).size());
  CHECK(triangles(uniform(3, 6)).empty());
}

TEST_CASE("essential elements") {
  CHECK(essential_elements(wheel(3).matroid) == ElementSet::full(6));
  CHECK(essential_elements(wheel(4).matroid) == ElementSet::full(8));
  CHECK(essential_elements(whirl(3).matroid) == ElementSet::full(6));
  CHECK(essential_elements(uniform(2, 4)).is_empty());
  const auto rk = testing::rank_fn(wheel(4).matroid);
  CHECK(oracle::essential(rk, 8) == oracle::all_of(8));
  CHECK_THROWS_AS(essential_elements(uniform(2, 2)), InputError);
}

TEST_CASE("elements in triads") {
  CHECK(elements_in_triads(wheel(4).matroid) == 8);
  CHECK(elements_in_triads(uniform(3, 6)) == 0);
  CHECK(elements_in_triads(wheel(3).matroid) == 6);
  CHECK(oracle::elements_in_triads(oracle::graph_rank_fn(5, oracle::wheel_edges(4)), 8) == 8);
}

TEST_CASE("property flags match brute force on every class up to six elements") {
  for (const auto& rec : testing::small_census()) {
    const Matroid m = rec.cf.decode();
    const int n = m.size();
    const auto rk = testing::rank_fn(m);
    CAPTURE(rec.cf.to_string());
    const bool c3 = oracle::k_connected(oracle::whole(rk, n), 3);
    CHECK(rec.flags.is_3connected == c3);
    CHECK(rec.flags.is_min_3connected == oracle::minimally_k_connected(rk, n, 3));
    CHECK(rec.flags.is_sm_3connected == oracle::super_minimally_k_connected(rk, n, 3));
    CHECK(is_super_minimally_k_connected(m, 2) == oracle::super_minimally_k_connected(rk, n, 2));
    CHECK(rec.flags.is_brittle == oracle::brittle(rk, n));
    CHECK(rec.flags.triangle_count ==
          static_cast<int>(oracle::circuits_of_size(rk, n, 3).size()));
    CHECK(rec.flags.triad_count ==
          static_cast<int>(oracle::circuits_of_size(oracle::dual_rank_fn(rk, n), n, 3).size()));
    CHECK(rec.flags.elements_in_triads == oracle::elements_in_triads(rk, n));
    CHECK(rec.flags.essential_count.has_value() == c3);
    if (c3) CHECK(*rec.flags.essential_count == oracle::size_of(oracle::essential(rk, n)));
    for (int k = 1; k <= 3; ++k) {
      const auto w = find_k_separation(m, k);
      CHECK((w ? w->side.bits() : 0) == lowest_separation(rk, n, k, k));
    }
    CHECK(is_k_connected(m, 4) == oracle::k_connected(oracle::whole(rk, n), 4));
  }
}
