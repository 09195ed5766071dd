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
#include <benchmark/benchmark.h>

#include "nilspec/exactnum/linalg.hpp"
#include "nilspec/oneform/oneform.hpp"
#include "nilspec/registry/registry.hpp"
#include "nilspec/repspec/certificate.hpp"
#include "nilspec/repspec/search.hpp"

using namespace nilspec;

namespace {

const registry::ExampleRecord& record(const std::string& id) {
  static std::map<std::string, registry::ExampleRecord> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, registry::load(id)).first;
  return it->second;
}

exact::RatMatrix skew(std::size_t n, long seed) {
  exact::RatMatrix m(n, n);
  long s = seed;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s = (s * 1103515245 + 12345) % 2147483648L;
      const exact::Rat v(s % 19 - 9, 1 + s % 4);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

void BM_Pfaffian(benchmark::State& st) {
  const auto m = skew(std::size_t(st.range(0)), 17);
  for (auto _ : st) benchmark::DoNotOptimize(exact::pfaffian(m));
}
BENCHMARK(BM_Pfaffian)->Arg(6)->Arg(10)->Arg(16);

void BM_Determinant(benchmark::State& st) {
  const auto m = skew(std::size_t(st.range(0)), 29);
  for (auto _ : st) benchmark::DoNotOptimize(exact::det(m));
}
BENCHMARK(BM_Determinant)->Arg(6)->Arg(10)->Arg(16);

void BM_Cbh(benchmark::State& st) {
  const auto& g = *record("III").algebra();
  lie::VecSampler s(7);
  const auto x = s.next(g.dim()), y = s.next(g.dim());
  for (auto _ : st) benchmark::DoNotOptimize(g.cbh(x, y));
}
BENCHMARK(BM_Cbh);

void BM_AssembleE(benchmark::State& st) {
  const auto& r = record("V");
  const auto in = r.distinguish_input();
  const auto shell = oneform::enumerate_shell(oneform::character_conditions(r.pair.gamma1), r.pair.metric, *r.s2_target);
  const auto wave = oneform::CharacterWave::make(*r.algebra(), shell.front());
  for (auto _ : st) benchmark::DoNotOptimize(oneform::assemble_E(r.pair.metric, wave));
}
BENCHMARK(BM_AssembleE);

void BM_ExactDet(benchmark::State& st) {
  const char* id = st.range(0) == 3 ? "III" : st.range(0) == 4 ? "IV" : "V";
  const auto& r = record(id);
  const auto shell = oneform::enumerate_shell(oneform::character_conditions(r.pair.gamma2), r.pair.metric, *r.s2_target);
  const auto e = oneform::assemble_E(r.pair.metric, oneform::CharacterWave::make(*r.algebra(), shell.front()));
  for (auto _ : st) benchmark::DoNotOptimize(oneform::det_at(e, *r.lambda));
}
BENCHMARK(BM_ExactDet)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ShellEnumeration(benchmark::State& st) {
  const auto& r = record("III");
  const auto c = oneform::character_conditions(r.pair.gamma1);
  for (auto _ : st) benchmark::DoNotOptimize(oneform::enumerate_ball(c, r.pair.metric, exact::Rat(st.range(0))));
}
BENCHMARK(BM_ShellEnumeration)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Distinguish(benchmark::State& st) {
  const char* id = st.range(0) == 3 ? "III" : st.range(0) == 4 ? "IV" : "V";
  const auto in = record(id).distinguish_input();
  for (auto _ : st) benchmark::DoNotOptimize(oneform::distinguish_pair(in));
}
BENCHMARK(BM_Distinguish)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& st) {
  const auto& r = record(st.range(0) == 1 ? "I" : "V");
  for (auto _ : st) benchmark::DoNotOptimize(rep::certify_theorem_3_2(r.pair, r.witnesses.front()));
}
BENCHMARK(BM_Certify)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& st) {
  const auto& r = record(st.range(0) == 2 ? "II" : "IV");
  rep::SearchOptions opts;
  opts.coeff_bound = 4;
  for (auto _ : st)
    benchmark::DoNotOptimize(rep::bounded_lattice_isomorphism_search(r.pair.gamma1, r.pair.gamma2, opts));
}
BENCHMARK(BM_Search)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
