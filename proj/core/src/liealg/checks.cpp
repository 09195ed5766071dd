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
#include <random>

#include "nilspec/liealg/algebra.hpp"

namespace nilspec::lie {

struct VecSampler::Impl {
  std::mt19937_64 rng;
};

VecSampler::VecSampler(std::uint64_t seed, long d, long max_den)
    : impl_(std::make_shared<Impl>(Impl{std::mt19937_64(seed)})), d_(d), q_(max_den) {}

Vec VecSampler::next(std::size_t n) {
  std::uniform_int_distribution<long> num(-d_, d_), den(1, q_);
  RatVector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    long a = num(impl_->rng);
    long b = den(impl_->rng);
    v.emplace_back(mpz_class(a), mpz_class(b));
  }
  return Vec(std::move(v));
}

std::vector<Vec> VecSampler::structured(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Vec::unit(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(Vec::unit(n, i) + Vec::unit(n, j));
      out.push_back(Vec::unit(n, i) - Vec::unit(n, j));
    }
  return out;
}

namespace {

Subspace ad_image(const NilLieAlgebra& g, const Vec& x) {
  std::vector<Vec> imgs;
  for (std::size_t j = 0; j < g.dim(); ++j) imgs.push_back(g.bracket(x, g.e(j)));
  return Subspace(g.dim(), imgs);
}

template <class F>
void for_each_sample(std::size_t n, std::size_t n_samples, std::uint64_t seed, F&& f) {
  for (const auto& x : VecSampler::structured(n))
    if (!f(x)) return;
  VecSampler s(seed);
  for (std::size_t t = 0; t < n_samples; ++t)
    if (!f(s.next(n))) return;
}

void require_2step(const NilLieAlgebra& g, const char* op) {
  if (!g.nilpotent() || g.step() > 2)
    throw DomainError(std::string(op) + ": only defined for step <= 2 algebras");
}

}  // namespace

bool is_automorphism(const NilLieAlgebra& g, const LinearMap& phi) {
  if (phi.rows() != g.dim() || phi.cols() != g.dim())
    throw DomainError("is_automorphism: map has the wrong shape");
  if (!phi.invertible()) throw DomainError("is_automorphism: map is singular");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (phi(g.bracket(g.e(i), g.e(j))) != g.bracket(phi(g.e(i)), phi(g.e(j)))) return false;
  return true;
}

NonsingularVerdict is_strictly_nonsingular_sampled(const NilLieAlgebra& g, std::size_t n_samples,
                                                   std::uint64_t seed) {
  NonsingularVerdict v;
  const Subspace z = g.center();
  const auto zb = z.basis();
  v.verified_on_sample = true;
  for_each_sample(g.dim(), n_samples, seed, [&](const Vec& x) {
    if (z.contains(x)) return true;
    ++v.checked;
    Subspace img = ad_image(g, x);
    for (const auto& zv : zb)
      if (!img.contains(zv)) {
        v.verified_on_sample = false;
        v.counter_x = x;
        v.counter_z = zv;
        return false;
      }
    return true;
  });
  return v;
}

AlmostInnerVerdict is_almost_inner_2step(const NilLieAlgebra& g, const LinearMap& phi,
                                         std::size_t n_samples, std::uint64_t seed) {
  require_2step(g, "is_almost_inner_2step");
  if (!is_automorphism(g, phi)) throw DomainError("is_almost_inner_2step: map is not an automorphism");
  AlmostInnerVerdict v;
  v.verified_on_sample = true;
  for_each_sample(g.dim(), n_samples, seed, [&](const Vec& x) {
    ++v.checked;
    if (!ad_image(g, x).contains(phi(x) - x)) {
      v.verified_on_sample = false;
      v.counterexample = x;
      return false;
    }
    return true;
  });
  // global conjugator: sum_i A_i [e_i, e_j] = Phi(e_j) - e_j for all j
  const std::size_t n = g.dim();
  RatMatrix m(n * n, n);
  RatVector rhs(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec d = phi(g.e(j)) - g.e(j);
    for (std::size_t k = 0; k < n; ++k) {
      rhs[j * n + k] = d[k];
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = g.c(i, j, k);
    }
  }
  if (auto a = exact::solve(m, rhs)) v.global_witness = Vec(*a);
  return v;
}

bool coadjoint_orbit_equal_2step(const NilLieAlgebra& g, const Covec& t1, const Covec& t2) {
  require_2step(g, "coadjoint_orbit_equal_2step");
  if (t1.dim() != g.dim() || t2.dim() != g.dim()) throw DomainError("functional dimension mismatch");
  std::vector<Vec> dirs;
  for (std::size_t i = 0; i < g.dim(); ++i)
    dirs.emplace_back(g.ad(g.e(i)).transpose().apply(t1.coords()));
  return Subspace(g.dim(), dirs).contains(Vec((t2 - t1).coords()));
}

}  // namespace nilspec::lie
