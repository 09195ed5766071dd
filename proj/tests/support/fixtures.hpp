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
#pragma once

// Example algebras and maps built directly in code.  Independent of the JSON
// registry so the shipped data files can be cross-checked against them.

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>

#include "nilspec/geometry/metric.hpp"
#include "nilspec/latticemod/lattice.hpp"
#include "nilspec/oneform/oneform.hpp"
#include "nilspec/repspec/certificate.hpp"
#include "nilspec/liealg/algebra.hpp"

namespace nilspec::testing {

using lie::AlgebraPtr;
using lie::BracketEntry;
using lie::LinearMap;
using lie::NilLieAlgebra;
using lie::Vec;

inline exact::Rat q(const char* s) { return exact::Rat::parse(s); }

inline AlgebraPtr make_algebra(std::vector<std::string> names,
                               std::initializer_list<std::tuple<const char*, const char*, const char*>> rels) {
  std::vector<std::string> copy = names;
  auto idx = [&](const char* n) {
    for (std::size_t i = 0; i < copy.size(); ++i)
      if (copy[i] == n) return i;
    throw std::runtime_error(std::string("fixture: unknown name ") + n);
  };
  std::vector<BracketEntry> br;
  for (const auto& [a, b, c] : rels) br.push_back({idx(a), idx(b), {{idx(c), exact::Rat(1)}}});
  return std::make_shared<const NilLieAlgebra>(std::move(names), br);
}

/// 7-dim three-step algebra of Examples I, III, V.
inline AlgebraPtr alg7() {
  static AlgebraPtr g = make_algebra({"X1", "X2", "Y1", "Y2", "Z1", "Z2", "W"},
                                     {{"X1", "Y1", "Z1"}, {"X2", "Y2", "Z1"}, {"X1", "Y2", "Z2"},
                                      {"X1", "Z1", "W"}, {"X2", "Z2", "W"}, {"Y1", "Y2", "W"}});
  return g;
}

/// 5-dim three-step algebra of Examples II, IV.
inline AlgebraPtr alg5() {
  static AlgebraPtr g = make_algebra({"X1", "Y1", "Y2", "Z", "W"},
                                     {{"X1", "Y1", "Z"}, {"X1", "Z", "W"}, {"Y1", "Y2", "W"}});
  return g;
}

inline AlgebraPtr heisenberg() { return make_algebra({"X", "Y", "Z"}, {{"X", "Y", "Z"}}); }

inline AlgebraPtr heisenberg_plus_line() {
  return make_algebra({"X", "Y", "Z", "T"}, {{"X", "Y", "Z"}});
}

inline AlgebraPtr abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("A" + std::to_string(i + 1));
  return std::make_shared<const NilLieAlgebra>(names, std::vector<BracketEntry>{});
}

/// Vector from (name, rational) pairs.
inline Vec vec(const NilLieAlgebra& g, std::initializer_list<std::pair<const char*, const char*>> terms) {
  Vec v = Vec::zero(g.dim());
  for (const auto& [n, c] : terms) v[g.index_of(n)] += q(c);
  return v;
}

inline lie::Covec covec(const NilLieAlgebra& g, std::initializer_list<std::pair<const char*, const char*>> terms) {
  return lie::Covec(vec(g, terms).coords());
}

/// Map given by images of every basis vector, in basis order.
inline LinearMap map_from(const NilLieAlgebra& g,
                          std::initializer_list<std::initializer_list<std::pair<const char*, const char*>>> images) {
  std::vector<Vec> imgs;
  for (const auto& im : images) imgs.push_back(vec(g, im));
  return LinearMap::from_images(imgs);
}

/// Example V automorphism Phi on the 7-dim algebra.
inline LinearMap example5_phi() {
  const auto& g = *alg7();
  return map_from(g, {{{"X1", "-1"}, {"X2", "1"}, {"Y1", "1/4"}, {"Y2", "1/2"}},
                      {{"X2", "1"}, {"Y1", "-1/2"}, {"Z1", "1/4"}},
                      {{"Y1", "-1"}},
                      {{"Y1", "2"}, {"Y2", "1"}, {"Z2", "1"}},
                      {{"Z1", "1"}, {"W", "1/2"}},
                      {{"Z1", "-1"}, {"Z2", "-1"}, {"W", "1/4"}},
                      {{"W", "-1"}}});
}

using Terms = std::initializer_list<std::pair<const char*, const char*>>;

inline std::vector<Vec> vecs(const NilLieAlgebra& g, std::initializer_list<Terms> list) {
  std::vector<Vec> out;
  for (const auto& t : list) out.push_back(vec(g, t));
  return out;
}

inline lattice::LatticeSpec lattice_of(AlgebraPtr g, std::initializer_list<Terms> gens) {
  auto v = vecs(*g, gens);
  return lattice::LatticeSpec(std::move(g), std::move(v));
}

/// Gamma_1 / Gamma_2 of the worked examples ("I".."V"), written out from the
/// generator lists.
inline lattice::LatticeSpec example_lattice(const std::string& id, int which) {
  if (id == "II" || id == "IV") {
    if (which == 1) return lattice_of(alg5(), {{{"X1", "2"}}, {{"Y1", "1"}}, {{"Y2", "1"}}, {{"Z", "1"}}, {{"W", "1"}}});
    if (id == "II")
      return lattice_of(alg5(), {{{"X1", "2"}}, {{"Y1", "1"}, {"Z", "1/2"}}, {{"Y2", "1"}}, {{"Z", "1"}}, {{"W", "1"}}});
    return lattice_of(alg5(), {{{"X1", "1"}}, {{"Y1", "2"}}, {{"Y2", "1"}}, {{"Z", "1"}}, {{"W", "1"}}});
  }
  auto g1 = lattice_of(alg7(), {{{"X1", "2"}}, {{"X2", "2"}}, {{"Y1", "1"}}, {{"Y2", "1"}},
                                {{"Z1", "1"}}, {{"Z2", "1"}}, {{"W", "1"}}});
  if (which == 1) return g1;
  if (id == "I")
    return lattice_of(alg7(), {{{"X1", "2"}}, {{"X2", "2"}}, {{"Y1", "1"}}, {{"Y2", "1"}, {"Z2", "1/2"}},
                               {{"Z1", "1"}}, {{"Z2", "1"}}, {{"W", "1"}}});
  if (id == "III")
    return lattice_of(alg7(), {{{"X1", "1"}}, {{"X2", "1"}}, {{"Y1", "2"}}, {{"Y2", "2"}},
                               {{"Z1", "1"}}, {{"Z2", "1"}}, {{"W", "1"}}});
  if (id == "V") {
    std::vector<Vec> imgs;
    for (const auto& v : g1.generators()) imgs.push_back(example5_phi()(v));
    return lattice::LatticeSpec(alg7(), imgs);
  }
  throw std::runtime_error("fixture: unknown example " + id);
}

inline const std::vector<std::string>& duals7() {
  static const std::vector<std::string> d = {"alpha1", "alpha2", "beta1", "beta2", "zeta1", "zeta2", "omega"};
  return d;
}
inline const std::vector<std::string>& duals5() {
  static const std::vector<std::string> d = {"alpha1", "beta1", "beta2", "zeta", "omega"};
  return d;
}

/// Orthonormal frame of the Example V metric.
inline geom::Metric example5_metric() {
  const auto& g = *alg7();
  auto e = vecs(g, {{{"X1", "1"}, {"X2", "-1/2"}, {"Y2", "-1/4"}},
                    {{"X2", "1"}, {"Y1", "-1/4"}},
                    {{"Y1", "1"}},
                    {{"Y1", "1"}, {"Y2", "1"}},
                    {{"Z1", "1"}},
                    {{"Z1", "1/2"}, {"Z2", "1"}},
                    {{"W", "1"}}});
  std::vector<exact::RatVector> cols;
  for (const auto& v : e) cols.push_back(v.coords());
  std::vector<std::string> fn, dn;
  for (int i = 1; i <= 7; ++i) {
    fn.push_back("E" + std::to_string(i));
    dn.push_back("eps" + std::to_string(i));
  }
  return geom::Metric(alg7(), exact::RatMatrix::from_columns(cols, 7), fn, dn);
}

inline const std::vector<std::string>& frame_duals5() {
  static const std::vector<std::string> d = {"eps1", "eps2", "eps3", "eps4", "eps5", "eps6", "eps7"};
  return d;
}

/// The example pairs with their metrics (standard frames except Example V).
inline rep::LatticePair example_pair(const std::string& id) {
  const bool five = id == "II" || id == "IV";
  auto g = five ? alg5() : alg7();
  const auto& duals = five ? duals5() : duals7();
  geom::Metric m = id == "V" ? example5_metric() : geom::Metric::standard(g, duals);
  return {id, example_lattice(id, 1), example_lattice(id, 2), m, duals};
}

/// Map on g / z from images of the named quotient basis vectors (others fixed).
inline LinearMap quotient_map(const AlgebraPtr& g, std::initializer_list<std::pair<const char*, Terms>> images) {
  auto q = lie::quotient(*g, g->center());
  const auto& n = *q.algebra;
  std::vector<Vec> imgs;
  for (std::size_t i = 0; i < n.dim(); ++i) imgs.push_back(n.e(i));
  for (const auto& [name, t] : images) imgs[n.index_of(name)] = vec(n, t);
  return LinearMap::from_images(imgs);
}

inline rep::QuotientWitness example_witness(const std::string& id) {
  using rep::QuotientWitness;
  using rep::WitnessKind;
  if (id == "I")
    return QuotientWitness::make(WitnessKind::almost_inner,
                                 quotient_map(alg7(), {{"Y2", {{"Y2", "1"}, {"Z2", "1/2"}}}}));
  if (id == "II")
    return QuotientWitness::make(WitnessKind::inner, quotient_map(alg5(), {{"Y1", {{"Y1", "1"}, {"Z", "1/2"}}}}));
  if (id == "III")
    return QuotientWitness::make(WitnessKind::isometry,
                                 quotient_map(alg7(), {{"X1", {{"Y2", "1"}}},
                                                       {"X2", {{"Y1", "1"}}},
                                                       {"Y1", {{"X2", "1"}}},
                                                       {"Y2", {{"X1", "1"}}},
                                                       {"Z1", {{"Z1", "-1"}}},
                                                       {"Z2", {{"Z2", "-1"}}}}));
  if (id == "IV")
    return QuotientWitness::make(WitnessKind::isometry, quotient_map(alg5(), {{"X1", {{"Y1", "1"}}},
                                                                              {"Y1", {{"X1", "1"}}},
                                                                              {"Z", {{"Z", "-1"}}}}));
  if (id == "V") {
    auto psi1 = quotient_map(alg7(), {{"X1", {{"X1", "-1"}, {"X2", "1"}, {"Y1", "1/4"}, {"Y2", "1/2"}}},
                                      {"X2", {{"X2", "1"}, {"Y1", "-1/2"}}},
                                      {"Y1", {{"Y1", "-1"}}},
                                      {"Y2", {{"Y1", "2"}, {"Y2", "1"}}},
                                      {"Z2", {{"Z1", "-1"}, {"Z2", "-1"}}}});
    auto psi2 = quotient_map(alg7(), {{"X2", {{"X2", "1"}, {"Z1", "1/4"}}},
                                      {"Y2", {{"Y2", "1"}, {"Z1", "-1"}, {"Z2", "-1"}}}});
    return QuotientWitness::composite({QuotientWitness::make(WitnessKind::isometry, psi1),
                                       QuotientWitness::make(WitnessKind::almost_inner, psi2)});
  }
  throw std::runtime_error("fixture: unknown example " + id);
}

inline rep::SectorFlag example_flag(const std::string& id) {
  if (id == "II" || id == "IV") {
    const auto& g = *alg5();
    return rep::SectorFlag({lie::Subspace(5, {g.e("W")}), lie::Subspace(5, {g.e("Z"), g.e("W")})});
  }
  const auto& g = *alg7();
  return rep::SectorFlag({lie::Subspace(7, {g.e("W")}), lie::Subspace(7, {g.e("Z1"), g.e("W")}),
                          lie::Subspace(7, {g.e("Z1"), g.e("Z2"), g.e("W")})});
}

/// Example III automorphism pairing sector-II orbits.
inline LinearMap example3_pairing() {
  const auto& g = *alg7();
  return map_from(g, {{{"X1", "-1"}}, {{"X2", "1"}}, {{"Y1", "-1"}}, {{"Y2", "1"}},
                      {{"Z1", "1"}}, {{"Z2", "-1"}}, {{"W", "-1"}}});
}

/// One-form comparison inputs for Examples III, IV, V.
inline oneform::DistinguishInput example_distinguish(const std::string& id) {
  using oneform::EigenCandidate;
  auto pair = example_pair(id);
  if (id == "III")
    return {pair, EigenCandidate::pi_squared_plus_one(), q("1/4"), example_flag(id), example3_pairing(), duals7()};
  if (id == "IV")
    return {pair, EigenCandidate::pi_squared_plus_one(), q("1/4"), example_flag(id), std::nullopt, duals5()};
  if (id == "V")
    return {pair, EigenCandidate::shifted_root(q("17/4")), q("17/16"), example_flag(id), std::nullopt,
            frame_duals5()};
  throw std::runtime_error("fixture: no one-form data for example " + id);
}

}  // namespace nilspec::testing
