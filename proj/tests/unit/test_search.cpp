/*
 * Copyright 2026 The nilspec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "doctest.h"
#include "fixtures.hpp"
#include "nilspec/repspec/search.hpp"

using namespace nilspec;
using namespace nilspec::testing;

namespace {

rep::SearchResult search(const std::string& id, long bound) {
  rep::SearchOptions o;
  o.coeff_bound = bound;
  return rep::bounded_lattice_isomorphism_search(example_lattice(id, 1), example_lattice(id, 2), o);
}

void check_isomorphism(const rep::SearchResult& r, const lattice::LatticeSpec& a, const lattice::LatticeSpec& b) {
  REQUIRE(r.found);
  REQUIRE(r.map);
  const auto& g = *a.algebra();
  CHECK(lie::is_automorphism(g, *r.map));
  for (const auto& v : a.generators()) CHECK(b.contains((*r.map)(v)));
  const auto inv = r.map->inverse();
  for (const auto& w : b.generators()) CHECK(a.contains(inv(w)));
}

}  // namespace

TEST_CASE("search: Example II finds the shear isomorphism") {
  const auto r = search("II", 4);
  check_isomorphism(r, example_lattice("II", 1), example_lattice("II", 2));
  const auto& g = *alg5();
  const auto psi = map_from(g, {{{"X1", "1"}, {"Y2", "1/2"}},
                                {{"Y1", "1"}, {"Z", "1/2"}},
                                {{"Y2", "1"}},
                                {{"Z", "1"}},
                                {{"W", "1"}}});
  CHECK(*r.map == psi);
  const auto j = r.to_json(g);
  CHECK(j["found"] == true);
  CHECK(j["images"]["X1"] == "X1 + 1/2 Y2");
}

TEST_CASE("search: Examples III and IV have no isomorphism within bound 4") {
  for (const std::string id : {"III", "IV"}) {
    CAPTURE(id);
    const auto r = search(id, 4);
    CHECK_FALSE(r.found);
    CHECK_FALSE(r.map);
    CHECK(r.nodes > 0);
  }
}

TEST_CASE("search: Example V lattices are isomorphic") {
  check_isomorphism(search("V", 2), example_lattice("V", 1), example_lattice("V", 2));
}

TEST_CASE("search: Example I has no isomorphism within bound 1") {
  const auto r = search("I", 1);
  CHECK_FALSE(r.found);
  CHECK(r.leaves > 0);
}

TEST_CASE("search: a lattice is isomorphic to itself") {
  for (const std::string id : {"I", "II", "III", "IV"}) {
    CAPTURE(id);
    const auto l = example_lattice(id, 2);
    const auto r = rep::bounded_lattice_isomorphism_search(l, l);
    check_isomorphism(r, l, l);
  }
  const auto l = example_lattice("I", 1);
  const auto r = rep::bounded_lattice_isomorphism_search(l, l);
  // neither side diagonal on the top block
  const auto v = example_lattice("V", 2);
  CHECK_THROWS_AS(rep::bounded_lattice_isomorphism_search(v, v), DomainError);
  REQUIRE(r.map);
  CHECK(*r.map == lie::LinearMap::identity(7));
}

TEST_CASE("search: argument validation") {
  rep::SearchOptions tiny;
  tiny.node_ceiling = 3;
  CHECK_THROWS_AS(rep::bounded_lattice_isomorphism_search(example_lattice("III", 1), example_lattice("III", 2), tiny),
                  DomainError);
  CHECK_THROWS_AS(rep::bounded_lattice_isomorphism_search(example_lattice("I", 1), example_lattice("II", 1)),
                  DomainError);
  rep::SearchOptions bad;
  bad.denominators = {0};
  CHECK_THROWS_AS(rep::bounded_lattice_isomorphism_search(example_lattice("II", 1), example_lattice("II", 2), bad),
                  DomainError);
}
