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
#include "generators.hpp"
#include "nilspec/latticemod/lattice.hpp"

using namespace nilspec;
using namespace nilspec::lattice;
using namespace nilspec::testing;

namespace {

const std::vector<std::string> kIds = {"I", "II", "III", "IV", "V"};

std::vector<Rat> ints(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("malcev coordinates of single generators") {
  for (const auto& id : kIds)
    for (int w : {1, 2}) {
      auto l = example_lattice(id, w);
      for (std::size_t k = 0; k < l.dim(); ++k) {
        auto t = l.malcev_coordinates(l.generators()[k]);
        for (std::size_t j = 0; j < l.dim(); ++j) CHECK(t[j] == (j == k ? 1 : 0));
      }
    }
}

TEST_CASE("malcev coordinates: worked values") {
  const auto& h = *alg5();
  auto l = example_lattice("II", 1);
  // exp(2X1) exp(Y1) = exp(2X1 + Y1 + Z + 1/3 W)
  Vec x = vec(h, {{"X1", "2"}, {"Y1", "1"}, {"Z", "1"}, {"W", "1/3"}});
  CHECK(l.malcev_coordinates(x) == ints({1, 1, 0, 0, 0}));
  CHECK(l.contains(x));
  CHECK(l.word(ints({1, 1, 0, 0, 0})) == x);
  Vec y = vec(h, {{"X1", "2"}, {"Y1", "1"}, {"Z", "1"}, {"W", "1/2"}});
  auto t = l.malcev_coordinates(y);
  CHECK(t[4] == q("1/6"));
  CHECK_FALSE(l.contains(y));

  const auto& g = *alg7();
  auto l2 = example_lattice("I", 2);
  CHECK(l2.contains(vec(g, {{"Y2", "1"}, {"Z2", "1/2"}})));
  CHECK_FALSE(l2.contains(vec(g, {{"Y2", "1"}})));
  CHECK_FALSE(example_lattice("I", 1).contains(vec(g, {{"Y2", "1"}, {"Z2", "1/2"}})));
}

TEST_CASE("property: word assembly inverts malcev coordinates") {
  Gen gen(5);
  for (const auto& id : kIds)
    for (int w : {1, 2}) {
      auto l = example_lattice(id, w);
      for (int s = 0; s < 200; ++s) {
        std::vector<Rat> t;
        for (std::size_t k = 0; k < l.dim(); ++k) t.emplace_back(gen.integer(-6, 6));
        Vec x = l.word(t);
        CHECK(l.malcev_coordinates(x) == t);
        CHECK(l.contains(GroupElem{x}));
      }
    }
}

TEST_CASE("property: membership is closed under products and inverses") {
  Gen gen(9);
  for (const auto& id : kIds)
    for (int w : {1, 2}) {
      auto l = example_lattice(id, w);
      for (int s = 0; s < 60; ++s) {
        std::vector<Rat> a, b;
        for (std::size_t k = 0; k < l.dim(); ++k) {
          a.emplace_back(gen.integer(-4, 4));
          b.emplace_back(gen.integer(-4, 4));
        }
        GroupElem x{l.word(a)}, y{l.word(b)};
        CHECK(l.contains(l.multiply(x, y)));
        CHECK(l.contains(l.multiply(LatticeSpec::inverse(x), y)));
        CHECK(l.contains(LatticeSpec::inverse(y)));
      }
    }
}

TEST_CASE("construction rejects non-adapted generators") {
  const auto& h = *heisenberg();
  // W-type central vector first: tail span{Y, Z} is fine but span{X, Y} is not an ideal
  CHECK_THROWS_AS(lattice_of(heisenberg(), {{{"Z", "1"}}, {{"X", "1"}}, {{"Y", "1"}}}), DomainError);
  // exp(Y) exp(X) = exp(X) exp(Y) exp(-Z) needs Z-coordinate -1/2 against 2Z
  CHECK_THROWS_AS(lattice_of(heisenberg(), {{{"X", "1"}}, {{"Y", "1"}}, {{"Z", "2"}}}), DomainError);
  CHECK_THROWS_AS(lattice_of(heisenberg(), {{{"X", "1"}}, {{"X", "1"}}, {{"Z", "1"}}}), DomainError);
  CHECK_NOTHROW(lattice_of(heisenberg(), {{{"X", "1"}}, {{"Y", "1"}}, {{"Z", "1/2"}}}));
  (void)h;
}

TEST_CASE("center intersection") {
  const auto& g = *alg7();
  for (const auto& id : kIds) {
    auto c1 = center_intersection(example_lattice(id, 1));
    auto c2 = center_intersection(example_lattice(id, 2));
    CHECK(exact::lattice_equal(c1.lattice, c2.lattice));
    const auto& alg = *example_lattice(id, 1).algebra();
    CHECK(c1.lattice == IntLattice::from_vectors({alg.e("W").coords()}, alg.dim()));
  }
  (void)g;
  auto ab = lattice_of(abelian(3), {{{"A1", "1"}}, {{"A2", "1"}}, {{"A3", "1"}}});
  CHECK(center_intersection(ab).lattice == IntLattice(RatMatrix::identity(3)));
  // the center span{Z, T} is not spanned by the central suffix (Z only)
  auto bad = lattice_of(heisenberg_plus_line(), {{{"X", "1"}}, {{"T", "1"}}, {{"Y", "1"}}, {{"Z", "1"}}});
  CHECK_THROWS_AS(center_intersection(bad), DomainError);
}

TEST_CASE("quotient lattices") {
  const auto& g = *alg7();
  auto qt = lie::quotient(g, g.center());
  const auto& qa = *qt.algebra;
  auto q1 = quotient_lattice(example_lattice("I", 1), qt);
  CHECK(q1.log_lattice == IntLattice::from_vectors(
                              {vec(qa, {{"X1", "2"}}).coords(), vec(qa, {{"X2", "2"}}).coords(),
                               vec(qa, {{"Y1", "1"}}).coords(), vec(qa, {{"Y2", "1"}}).coords(),
                               vec(qa, {{"Z1", "1"}}).coords(), vec(qa, {{"Z2", "1"}}).coords()},
                              6));
  auto q3 = quotient_lattice(example_lattice("III", 2), qt);
  CHECK(q3.log_lattice == IntLattice::from_vectors(
                              {vec(qa, {{"X1", "1"}}).coords(), vec(qa, {{"X2", "1"}}).coords(),
                               vec(qa, {{"Y1", "2"}}).coords(), vec(qa, {{"Y2", "2"}}).coords(),
                               vec(qa, {{"Z1", "1"}}).coords(), vec(qa, {{"Z2", "1"}}).coords()},
                              6));
  // every example quotient is closed
  for (const auto& id : kIds)
    for (int w : {1, 2}) {
      auto l = example_lattice(id, w);
      auto qq = lie::quotient(*l.algebra(), l.algebra()->center());
      CHECK_NOTHROW(quotient_lattice(l, qq));
    }
  // not a suffix ideal
  CHECK_THROWS_AS(quotient_lattice(example_lattice("I", 1), lie::quotient(g, Subspace(7, {g.e("Z1"), g.e("W")}))),
                  DomainError);
  // abelian: identity on the lattice
  auto ab = lattice_of(abelian(2), {{{"A1", "1"}}, {{"A2", "3"}}});
  auto qa0 = lie::quotient(*ab.algebra(), Subspace::zero(2));
  CHECK(quotient_lattice(ab, qa0).log_lattice == ab.span());
  // Heisenberg: the span of X, Y, Z is not log Gamma
  CHECK_FALSE(lattice_of(heisenberg(), {{{"X", "1"}}, {{"Y", "1"}}, {{"Z", "1"}}}).log_lattice().has_value());
  CHECK(lattice_of(heisenberg(), {{{"X", "1"}}, {{"Y", "1"}}, {{"Z", "1/2"}}}).log_lattice().has_value());
}

TEST_CASE("squared covolume") {
  const auto& g = *alg7();
  auto qt = lie::quotient(g, g.center());
  auto m = geom::Metric::standard(qt.algebra);
  auto a = quotient_lattice(example_lattice("III", 1), qt).log_lattice;
  auto b = quotient_lattice(example_lattice("III", 2), qt).log_lattice;
  CHECK(quotient_covolume(a, m) == 16);
  CHECK(quotient_covolume(b, m) == 16);
  CHECK(quotient_covolume(IntLattice(RatMatrix::identity(6)), m) == 1);
  RatMatrix d = RatMatrix::identity(6);
  d(2, 2) = 2;
  CHECK(quotient_covolume(IntLattice(d), m) == 4);
  CHECK_THROWS_AS(quotient_covolume(IntLattice::from_vectors({g.e(0).coords()}, 6), m), DomainError);

  // Example V quotient metric
  auto mv = example5_metric().quotient(qt);
  auto v1 = quotient_lattice(example_lattice("V", 1), qt).log_lattice;
  auto v2 = quotient_lattice(example_lattice("V", 2), qt).log_lattice;
  CHECK(quotient_covolume(v1, mv) == quotient_covolume(v2, mv));
}

TEST_CASE("property: squared covolume is basis independent") {
  Gen gen(3);
  const auto& g = *alg7();
  auto qt = lie::quotient(g, g.center());
  auto m = example5_metric().quotient(qt);
  auto l = quotient_lattice(example_lattice("V", 2), qt).log_lattice;
  Rat ref = quotient_covolume(l, m);
  for (int t = 0; t < 30; ++t) {
    auto u = gen.unimodular(6);
    RatMatrix ur = u.map([](const mpz_class& z) { return Rat(z, mpz_class(1)); });
    CHECK(quotient_covolume(IntLattice(l.basis() * ur), m) == ref);
  }
}
