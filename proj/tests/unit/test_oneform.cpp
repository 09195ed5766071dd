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
#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "nilspec/oneform/oneform.hpp"

using namespace nilspec;
using namespace nilspec::testing;
using namespace nilspec::oneform;
using exact::GaussRat;
using exact::Rat;

namespace {

/// c0 + (2 pi i) * k, with an optional 4 pi^2 S^2 on the diagonal.
UniPoly entry(const Rat& c0, const Rat& two_pi_i = Rat(0), const Rat& s2 = Rat(0)) {
  return UniPoly({GaussRat(c0), GaussRat(Rat(0), Rat(2) * two_pi_i), GaussRat(Rat(4) * s2)});
}

CharacterMatrix at(const std::string& id, const Covec& tau) {
  auto pair = example_pair(id);
  return assemble_E(pair.metric, CharacterWave::make(*pair.algebra(), tau));
}

Covec tau_named(const std::string& id, std::initializer_list<std::pair<const char*, const char*>> terms) {
  const auto& g = *example_pair(id).algebra();
  return covec(g, terms);
}

/// Example V functional from its values on the orthonormal frame.
Covec tau_frame5(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4) {
  return example5_metric().from_frame_values({a1, a2, a3, a4, Rat(0), Rat(0), Rat(0)});
}

std::set<std::string> texts(const std::vector<Covec>& taus, const geom::Metric& m,
                            const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (const auto& t : taus) out.insert(format_tau(t, m, names));
  return out;
}

}  // namespace

TEST_CASE("assemble: Example III matches the displayed 7x7 matrix") {
  Gen gen(11);
  for (int trial = 0; trial < 5; ++trial) {
    const Rat a1 = gen.rat(4, 4), a2 = gen.rat(4, 4), b1 = gen.rat(4, 4), b2 = gen.rat(4, 4);
    const Rat s2 = a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2;
    const auto& g = *alg7();
    Covec tau = Covec::zero(7);
    tau[g.index_of("X1")] = a1;
    tau[g.index_of("X2")] = a2;
    tau[g.index_of("Y1")] = b1;
    tau[g.index_of("Y2")] = b2;
    const auto e = at("III", tau);
    const Rat z;
    const PolyMatrix want{
        {entry(z, z, s2), 0, 0, 0, entry(z, -b1), entry(z, -b2), 0},
        {0, entry(z, z, s2), 0, 0, entry(z, -b2), 0, 0},
        {0, 0, entry(z, z, s2), 0, entry(z, a1), 0, entry(z, -b2)},
        {0, 0, 0, entry(z, z, s2), entry(z, a2), entry(z, a1), entry(z, b1)},
        {entry(z, b1), entry(z, b2), entry(z, -a1), entry(z, -a2), entry(Rat(2), z, s2), 0, entry(z, a1)},
        {entry(z, b2), 0, 0, entry(z, -a1), 0, entry(Rat(1), z, s2), entry(z, a2)},
        {0, 0, entry(z, b2), entry(z, -b1), entry(z, -a1), entry(z, -a2), entry(Rat(3), z, s2)}};
    CHECK(e.e == want);
    CHECK(e.s2 == s2);
    CHECK(e.is_hermitian());
  }
}

TEST_CASE("assemble: Example IV matches the displayed 5x5 matrix") {
  Gen gen(12);
  for (int trial = 0; trial < 5; ++trial) {
    const Rat a1 = gen.rat(4, 4), b1 = gen.rat(4, 4), b2 = gen.rat(4, 4);
    const Rat s2 = a1 * a1 + b1 * b1 + b2 * b2;
    const auto& g = *alg5();
    Covec tau = Covec::zero(5);
    tau[g.index_of("X1")] = a1;
    tau[g.index_of("Y1")] = b1;
    tau[g.index_of("Y2")] = b2;
    const auto e = at("IV", tau);
    const Rat z;
    const PolyMatrix want{{entry(z, z, s2), 0, 0, entry(z, -b1), 0},
                          {0, entry(z, z, s2), 0, entry(z, a1), entry(z, -b2)},
                          {0, 0, entry(z, z, s2), 0, entry(z, b1)},
                          {entry(z, b1), entry(z, -a1), 0, entry(Rat(1), z, s2), entry(z, a1)},
                          {0, entry(z, b2), entry(z, -b1), entry(z, -a1), entry(Rat(2), z, s2)}};
    CHECK(e.e == want);
    CHECK(e.is_hermitian());
  }
}

TEST_CASE("assemble: Example V matches the displayed matrix up to conjugation") {
  Gen gen(13);
  for (int trial = 0; trial < 5; ++trial) {
    const Rat a1 = gen.rat(4, 4), a2 = gen.rat(4, 4), a3 = gen.rat(4, 4), a4 = gen.rat(4, 4);
    const Rat s2 = a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4;
    const auto e = at("V", tau_frame5(a1, a2, a3, a4));
    CHECK(e.s2 == s2);
    CHECK(e.is_hermitian());
    const Rat z, h = q("1/2");
    // upper triangle as displayed; "pi i x" is written as half of 2 pi i x
    std::map<std::pair<int, int>, UniPoly> shown = {
        {{1, 1}, entry(z, z, s2)},
        {{1, 5}, entry(z, a3)},
        {{1, 6}, entry(z, a4)},
        {{1, 7}, entry(z, h * (-q("1/8") * a2 + h * a3 + h * a4))},
        {{2, 2}, entry(z, z, s2)},
        {{2, 5}, entry(z, a4)},
        {{2, 7}, entry(z, h * (q("1/8") * a1 - h * a4))},
        {{3, 3}, entry(z, z, s2)},
        {{3, 5}, entry(z, -a1)},
        {{3, 7}, entry(z, h * (-h * a1 + Rat(2) * a4))},
        {{4, 4}, entry(z, z, s2)},
        {{4, 5}, entry(z, -a2)},
        {{4, 6}, entry(z, -a1)},
        {{4, 7}, entry(z, h * (-h * a1 + h * a2 - Rat(2) * a3))},
        {{5, 5}, entry(Rat(2), z, s2)},
        {{5, 7}, entry(z, -a1)},
        {{6, 6}, entry(Rat(1), z, s2)},
        {{6, 7}, entry(q("1/4"), -a2)},
        {{7, 7}, entry(q("817/256"), z, s2)}};
    for (int k = 1; k <= 7; ++k)
      for (int l = k; l <= 7; ++l) {
        CAPTURE(k);
        CAPTURE(l);
        const auto it = shown.find({k, l});
        const UniPoly want = it == shown.end() ? UniPoly() : it->second;
        CHECK(e.e(k - 1, l - 1) == want.conj());
      }
  }
}

TEST_CASE("assemble: zero functional gives the invariant-form Laplacian") {
  for (const char* id : {"III", "IV", "V"}) {
    auto pair = example_pair(id);
    const auto e = assemble_E(pair.metric, CharacterWave::make(*pair.algebra(), Covec::zero(pair.algebra()->dim())));
    const auto lap = geom::laplacian_on_invariant_oneforms(pair.metric);
    CHECK(e.e == lap.map([](const Rat& r) { return UniPoly(r); }));
  }
}

TEST_CASE("assemble: non-character functional is rejected") {
  CHECK_THROWS_AS(CharacterWave::make(*alg7(), tau_named("III", {{"Z1", "1"}})), DomainError);
  CHECK_THROWS_AS(CharacterWave::make(*alg5(), tau_named("IV", {{"W", "1"}})), DomainError);
}

TEST_CASE("property: assembled matrices are Hermitian") {
  Gen gen(14);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(at("III", tau_named("III", {})).is_hermitian());
    const Rat a = gen.rat(), b = gen.rat(), c = gen.rat(), d = gen.rat();
    CHECK(at("V", tau_frame5(a, b, c, d)).is_hermitian());
    Covec t = Covec::zero(5);
    t[0] = a;
    t[1] = b;
    t[2] = c;
    CHECK(at("IV", t).is_hermitian());
  }
}

TEST_CASE("det_at: Example III at pi^2 + 1") {
  const auto lam = EigenCandidate::pi_squared_plus_one();
  for (const char* s : {"1/2", "-1/2"}) {
    CHECK(is_eigenvalue(at("III", tau_named("III", {{"Y1", s}})), lam));
    for (const char* name : {"X1", "X2", "Y2"}) CHECK_FALSE(is_eigenvalue(at("III", tau_named("III", {{name, s}})), lam));
  }
}

TEST_CASE("det_at: Example V at the shifted square root") {
  const auto lam = EigenCandidate::shifted_root(q("17/4"));
  const Rat f = q("1/4");
  for (int sgn : {1, -1}) {
    const Rat s(sgn);
    CHECK(is_eigenvalue(at("V", tau_frame5(0, s * f, -s, 0)), lam));
    CHECK_FALSE(is_eigenvalue(at("V", tau_frame5(0, s * f, s, 0)), lam));
    CHECK_FALSE(is_eigenvalue(at("V", tau_frame5(s * f, 0, 0, Rat(1))), lam));
    CHECK_FALSE(is_eigenvalue(at("V", tau_frame5(s * f, 0, 0, Rat(-1))), lam));
  }
}

TEST_CASE("det_at: modulus mismatch is reported") {
  const auto e = at("III", tau_named("III", {{"Y1", "1/2"}}));
  const auto m = shifted(e, EigenCandidate::pi_squared_plus_one());
  CHECK_THROWS_AS(det_at(m, EigenCandidate::shifted_root(q("17/4"))), ModulusMismatch);
  CHECK(det_at(m, EigenCandidate::pi_squared_plus_one()).is_zero());
}

TEST_CASE("property: det_at is invariant under signed-permutation conjugation") {
  Gen gen(15);
  const auto phi = example3_pairing();
  const auto lam = EigenCandidate::pi_squared_plus_one();
  for (int trial = 0; trial < 5; ++trial) {
    Covec t = Covec::zero(7);
    for (std::size_t i = 0; i < 4; ++i) t[i] = gen.rat(2, 2);
    const auto e = at("III", t);
    PolyMatrix conj(7, 7);
    for (std::size_t k = 0; k < 7; ++k)
      for (std::size_t l = 0; l < 7; ++l) conj(k, l) = UniPoly(phi.matrix()(k, k) * phi.matrix()(l, l)) * e.e(k, l);
    CharacterMatrix c{conj, e.tau, e.s2, e.algebra};
    CHECK(det_at(c, lam) == det_at(e, lam));
  }
}

TEST_CASE("property: leading pi coefficient equals (4 S^2 - c)^n") {
  Gen gen(16);
  const auto lam = EigenCandidate::pi_squared_plus_one();
  const auto lam5 = EigenCandidate::shifted_root(q("17/4"));
  auto pw = [](Rat b, int n) {
    Rat r(1);
    for (int i = 0; i < n; ++i) r *= b;
    return r;
  };
  for (int trial = 0; trial < 5; ++trial) {
    Covec t3 = Covec::zero(7);
    for (std::size_t i = 0; i < 4; ++i) t3[i] = gen.rat(3, 4);
    const auto e3 = at("III", t3);
    CHECK(leading_pi_coefficient(e3, lam) == pw(Rat(4) * e3.s2 - Rat(1), 7));

    Covec t4 = Covec::zero(5);
    for (std::size_t i = 0; i < 3; ++i) t4[i] = gen.rat(3, 4);
    const auto e4 = at("IV", t4);
    CHECK(leading_pi_coefficient(e4, lam) == pw(Rat(4) * e4.s2 - Rat(1), 5));

    const auto e5 = at("V", tau_frame5(gen.rat(3, 4), gen.rat(3, 4), gen.rat(3, 4), gen.rat(3, 4)));
    const Rat lead = pw(Rat(4) * e5.s2 - q("17/4"), 7);
    CHECK(leading_pi_coefficient(e5, lam5) == lead);
    CHECK(leading_norm_coefficient(e5, lam5) == lead * lead);
  }
  CHECK(leading_pi_coefficient(at("III", tau_named("III", {{"Y1", "1"}, {"Y2", "1"}})), lam) == pw(Rat(7), 7));
  CHECK(leading_pi_coefficient(at("IV", tau_named("IV", {{"X1", "1"}})), lam) == Rat(243));
  CHECK(leading_pi_coefficient(at("III", tau_named("III", {{"X2", "1/2"}})), lam) == Rat(0));
}

TEST_CASE("shells: Example III at S^2 = 1/4") {
  auto pair = example_pair("III");
  const auto s1 = enumerate_shell(character_conditions(pair.gamma1), pair.metric, q("1/4"));
  const auto s2 = enumerate_shell(character_conditions(pair.gamma2), pair.metric, q("1/4"));
  CHECK(texts(s1, pair.metric, duals7()) ==
        std::set<std::string>{"1/2 alpha1", "-1/2 alpha1", "1/2 alpha2", "-1/2 alpha2"});
  CHECK(texts(s2, pair.metric, duals7()) ==
        std::set<std::string>{"1/2 beta1", "-1/2 beta1", "1/2 beta2", "-1/2 beta2"});
  CHECK(s1.size() == 4);
}

TEST_CASE("shells: Example V at S^2 = 17/16 differ only in the sign of eps3") {
  auto pair = example_pair("V");
  const auto& names = frame_duals5();
  const auto s1 = enumerate_shell(character_conditions(pair.gamma1), pair.metric, q("17/16"));
  const auto s2 = enumerate_shell(character_conditions(pair.gamma2), pair.metric, q("17/16"));
  CHECK(texts(s1, pair.metric, names) ==
        std::set<std::string>{"1/4 eps2 + eps3", "-1/4 eps2 - eps3", "1/4 eps1 + eps4", "1/4 eps1 - eps4",
                              "-1/4 eps1 + eps4", "-1/4 eps1 - eps4"});
  CHECK(texts(s2, pair.metric, names) ==
        std::set<std::string>{"1/4 eps2 - eps3", "-1/4 eps2 + eps3", "1/4 eps1 + eps4", "1/4 eps1 - eps4",
                              "-1/4 eps1 + eps4", "-1/4 eps1 - eps4"});
}

TEST_CASE("shells: conditions match the published dual conditions") {
  // Example IV: Gamma_1 iff A1 in 1/2 Z and B1, B2 in Z
  auto pair = example_pair("IV");
  const auto ball = enumerate_ball(character_conditions(pair.gamma1), pair.metric, Rat(3));
  for (const auto& t : ball) {
    CHECK((Rat(2) * t[0]).is_integer());
    CHECK(t[1].is_integer());
    CHECK(t[2].is_integer());
  }
  const auto ball2 = enumerate_ball(character_conditions(pair.gamma2), pair.metric, Rat(3));
  for (const auto& t : ball2) {
    CHECK(t[0].is_integer());
    CHECK((Rat(2) * t[1]).is_integer());
    CHECK(t[2].is_integer());
  }
  // every half-lattice point of the right shape within the ball is listed
  std::size_t expect = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        if (Rat(a * a, 4) + Rat(b * b) + Rat(c * c) <= Rat(3)) ++expect;
  CHECK(ball.size() == expect);
}

TEST_CASE("property: character-sector function spectra agree within each pair") {
  for (const char* id : {"I", "II", "III", "IV", "V"}) {
    CAPTURE(std::string(id));
    auto pair = example_pair(id);
    auto norms = [&](const lattice::LatticeSpec& l) {
      std::vector<Rat> v;
      for (const auto& t : enumerate_ball(character_conditions(l), pair.metric, Rat(10)))
        v.push_back(pair.metric.norm2(t));
      std::sort(v.begin(), v.end());
      return v;
    };
    const auto n1 = norms(pair.gamma1), n2 = norms(pair.gamma2);
    CHECK(n1.size() > 10);
    CHECK(n1 == n2);
  }
}

TEST_CASE("nullity: Example III at 1/2 beta1 has kernel along zeta2") {
  const auto lam = EigenCandidate::pi_squared_plus_one();
  const auto e = at("III", tau_named("III", {{"Y1", "1/2"}}));
  const auto r = nullity_at(e, lam);
  REQUIRE(r.nullity == 1);
  const auto m = lam.lambda.modulus();
  std::vector<QuadExtElem> zeta2(7, QuadExtElem(m));
  zeta2[5] = QuadExtElem(UniPoly(1), UniPoly(), m);
  CHECK(proportional(r.kernel[0], zeta2));
  CHECK(nullity_at(at("III", tau_named("III", {{"Y1", "-1/2"}})), lam).nullity == 1);
  CHECK(nullity_at(e, EigenCandidate{QuadExtElem(UniPoly(-1), UniPoly(), m), "-1"}).nullity == 0);
}

TEST_CASE("nullity: Example IV at 1/2 alpha1 has kernel (0, pi i, 0, 1, pi i)") {
  const auto lam = EigenCandidate::pi_squared_plus_one();
  const auto r = nullity_at(at("IV", tau_named("IV", {{"X1", "1/2"}})), lam);
  REQUIRE(r.nullity == 1);
  const auto m = lam.lambda.modulus();
  const QuadExtElem zero(m), one(UniPoly(1), UniPoly(), m);
  const QuadExtElem pi_i(UniPoly::monomial(GaussRat::i(), 1), UniPoly(), m);
  CHECK(proportional(r.kernel[0], {zero, pi_i, zero, one, pi_i}));
  CHECK_FALSE(proportional(r.kernel[0], {zero, pi_i, zero, -one, pi_i}));
}

TEST_CASE("numeric spectrum agrees with the exact results") {
  const double pi = 3.141592653589793;
  const auto has = [](const std::vector<double>& v, double x) {
    return std::any_of(v.begin(), v.end(), [&](double y) { return std::abs(y - x) < 1e-9; });
  };
  CHECK(has(numeric_spectrum(at("III", tau_named("III", {{"Y1", "1/2"}})), pi), pi * pi + 1));
  CHECK(has(numeric_spectrum(at("IV", tau_named("IV", {{"X1", "1/2"}})), pi), pi * pi + 1));
  CHECK_FALSE(has(numeric_spectrum(at("III", tau_named("III", {{"X1", "1/2"}})), pi), pi * pi + 1));
  const auto lam5 = EigenCandidate::shifted_root(q("17/4"));
  CHECK(has(numeric_spectrum(at("V", tau_frame5(0, q("1/4"), Rat(-1), 0)), pi), lam5.numeric(pi)));

  const auto z3 = numeric_spectrum(at("III", Covec::zero(7)), pi);
  const std::vector<double> w3 = {0, 0, 0, 0, 1, 2, 3};
  const auto z4 = numeric_spectrum(at("IV", Covec::zero(5)), pi);
  const std::vector<double> w4 = {0, 0, 0, 1, 2};
  for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(z3[i] - w3[i]) < 1e-9);
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(z4[i] - w4[i]) < 1e-9);
  CHECK_THROWS_AS(numeric_spectrum(at("IV", Covec::zero(5)), pi, 0.0), DomainError);
}

TEST_CASE("distinguish: Examples III, IV, V") {
  struct Want {
    const char* id;
    std::size_t m1, m2;
  };
  for (const auto& w : {Want{"III", 0, 2}, Want{"IV", 2, 0}}) {
    CAPTURE(std::string(w.id));
    const auto in = example_distinguish(w.id);
    const auto r = distinguish_pair(in);
    CHECK(r.multiplicity1 == w.m1);
    CHECK(r.multiplicity2 == w.m2);
    for (const auto& c : r.sector_checks) {
      CAPTURE(c.sector);
      CAPTURE(c.detail);
      CHECK(c.verified);
    }
    CHECK(r.distinguished);
    CHECK(r.verdict == "lambda = pi^2 + 1: multiplicity " + std::to_string(w.m1) + " vs " + std::to_string(w.m2) +
                           " -> not one-form isospectral");
  }
  const auto in = example_distinguish("V");
  const auto r = distinguish_pair(in);
  CHECK(r.multiplicity1 == 0);
  CHECK(r.multiplicity2 > 0);
  for (const auto& c : r.sector_checks) {
    CAPTURE(c.sector);
    CAPTURE(c.detail);
    CHECK(c.verified);
  }
  CHECK(r.distinguished);
  const auto j = r.to_json(in);
  CHECK(j["lambda"]["q_coeffs"] == nlohmann::json::array({"1", "0", "17/4"}));
  CHECK(j["shells"]["gamma1"].size() == 6);
  CHECK(j.dump() == distinguish_pair(in).to_json(in).dump());
}
