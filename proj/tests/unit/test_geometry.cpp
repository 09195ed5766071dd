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
#include "nilspec/geometry/metric.hpp"

using namespace nilspec;
using namespace nilspec::geom;
using namespace nilspec::testing;

namespace {

void check_chart(const Metric& m, const std::vector<std::vector<std::string>>& expected) {
  auto chart = nabla_chart(m);
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (std::size_t j = 0; j < expected[i].size(); ++j) {
      INFO("direction " << m.frame_names()[i] << ", covector " << m.dual_names()[j]);
      CHECK(chart[i][j] == expected[i][j]);
    }
}

void check_connection_identities(const Metric& m) {
  auto c = koszul_connection(m);
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(c(i, j, k) == -c(i, k, j));
        CHECK(c(i, j, k) - c(j, i, k) == m.frame_constant(i, j, k));
      }
}

// all principal minors >= 0
bool psd(const exact::RatMatrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    exact::RatMatrix s(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) s(r, c) = a(idx[r], idx[c]);
    if (exact::det(s).sign() < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("abelian metric is flat") {
  auto g = abelian(4);
  auto m = Metric::standard(g);
  auto c = koszul_connection(m);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(exact::vec_is_zero(c.derivative(i, j)));
  for (const auto& row : nabla_chart(m))
    for (const auto& e : row) CHECK(e == "0");
  CHECK(laplacian_on_invariant_oneforms(m) == exact::RatMatrix(4, 4));
}

TEST_CASE("covariant derivative chart, 7-dim standard metric") {
  auto m = Metric::standard(alg7(), duals7());
  check_chart(m, {
      {"0", "0", "1/2 zeta1", "1/2 zeta2", "-1/2 beta1 + 1/2 omega", "-1/2 beta2", "-1/2 zeta1"},
      {"0", "0", "0", "1/2 zeta1", "-1/2 beta2", "1/2 omega", "-1/2 zeta2"},
      {"-1/2 zeta1", "0", "0", "1/2 omega", "1/2 alpha1", "0", "-1/2 beta2"},
      {"-1/2 zeta2", "-1/2 zeta1", "-1/2 omega", "0", "1/2 alpha2", "1/2 alpha1", "1/2 beta1"},
  });
}

TEST_CASE("covariant derivative chart, 5-dim standard metric") {
  auto m = Metric::standard(alg5(), duals5());
  check_chart(m, {
      {"0", "1/2 zeta", "0", "-1/2 beta1 + 1/2 omega", "-1/2 zeta"},
      {"-1/2 zeta", "0", "1/2 omega", "1/2 alpha1", "-1/2 beta2"},
      {"0", "-1/2 omega", "0", "0", "1/2 beta1"},
  });
}

TEST_CASE("covariant derivative chart, skewed 7-dim metric") {
  check_chart(example5_metric(), {
      {"0", "-1/32 eps7", "1/2 eps5 + 1/8 eps7", "1/2 eps6 + 1/8 eps7", "-1/2 eps3 + 1/2 eps7", "-1/2 eps4",
       "1/32 eps2 - 1/8 eps3 - 1/8 eps4 - 1/2 eps5"},
      {"1/32 eps7", "0", "0", "1/2 eps5 - 1/8 eps7", "-1/2 eps4", "1/2 eps7", "-1/32 eps1 + 1/8 eps4 - 1/2 eps6"},
      {"-1/2 eps5 - 1/8 eps7", "0", "0", "1/2 eps7", "1/2 eps1", "0", "1/8 eps1 - 1/2 eps4"},
      {"-1/2 eps6 - 1/8 eps7", "-1/2 eps5 + 1/8 eps7", "-1/2 eps7", "0", "1/2 eps2", "1/2 eps1",
       "1/8 eps1 - 1/8 eps2 + 1/2 eps3"},
  });
}

TEST_CASE("Laplacian on invariant one-forms") {
  auto l7 = laplacian_on_invariant_oneforms(Metric::standard(alg7()));
  exact::RatMatrix d7(7, 7);
  d7(4, 4) = 2;
  d7(5, 5) = 1;
  d7(6, 6) = 3;
  CHECK(l7 == d7);

  auto l5 = laplacian_on_invariant_oneforms(Metric::standard(alg5()));
  exact::RatMatrix d5(5, 5);
  d5(3, 3) = 1;
  d5(4, 4) = 2;
  CHECK(l5 == d5);

  auto lv = laplacian_on_invariant_oneforms(example5_metric());
  CHECK(lv(4, 4) == 2);
  CHECK(lv(5, 5) == 1);
  CHECK(lv(6, 5) == q("1/4"));
  CHECK(lv(5, 6) == q("1/4"));
  CHECK(lv(6, 6) == q("817/256"));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(lv(i, j) == 0);
}

TEST_CASE("property: connection is metric and torsion free") {
  check_connection_identities(Metric::standard(alg7()));
  check_connection_identities(Metric::standard(alg5()));
  check_connection_identities(example5_metric());
  Gen gen(11);
  for (int t = 0; t < 25; ++t) {
    auto g = t % 2 ? alg7() : alg5();
    exact::RatMatrix f(g->dim(), g->dim());
    do {
      for (std::size_t i = 0; i < g->dim(); ++i)
        for (std::size_t j = 0; j < g->dim(); ++j) f(i, j) = gen.rat(3, 3);
    } while (exact::det(f).is_zero());
    Metric m(g, f);
    check_connection_identities(m);
    auto l = laplacian_on_invariant_oneforms(m);
    CHECK(l == l.transpose());
    CHECK(psd(l));
  }
}

TEST_CASE("metric basics and quotient") {
  auto m = example5_metric();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(m.inner(m.frame_vector(i), m.frame_vector(j)) == (i == j ? 1 : 0));
  lie::Covec tau = m.from_frame_values({q("1/4"), 0, 1, 0, 0, 0, 0});
  CHECK(m.norm2(tau) == q("17/16"));
  CHECK(m.frame_values(tau) == exact::RatVector{q("1/4"), 0, 1, 0, 0, 0, 0});

  const auto& g = *alg7();
  auto qt = lie::quotient(g, g.center());
  auto mq = m.quotient(qt);
  CHECK(mq.dim() == 6);
  CHECK(mq.frame_names().back() == "E6");
  exact::RatMatrix bad = RatMatrix::identity(7);
  bad(0, 6) = 1;  // last frame vector W + X1 leaves the center
  CHECK_THROWS_AS(Metric(alg7(), bad).quotient(qt), DomainError);

  // Ybar swap and sign changes: an isometry of the standard quotient metric
  auto ms = Metric::standard(qt.algebra);
  const auto& qa = *qt.algebra;
  LinearMap swap = map_from(qa, {{{"Y2", "1"}}, {{"Y1", "1"}}, {{"X2", "1"}}, {{"X1", "1"}}, {{"Z1", "-1"}}, {{"Z2", "-1"}}});
  CHECK(lie::is_automorphism(qa, swap));
  CHECK(ms.is_isometry(swap));
  CHECK_FALSE(ms.is_isometry(LinearMap(RatMatrix::identity(6, exact::Rat(2)))));
  CHECK_THROWS_AS(Metric(alg5(), RatMatrix(5, 5)), DomainError);
}
