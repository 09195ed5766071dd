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
#include "nilspec/geometry/metric.hpp"

namespace nilspec::geom {

namespace {

std::vector<std::string> default_duals(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(n + "*");
  return out;
}

}  // namespace

Metric::Metric(AlgebraPtr g, RatMatrix frame, std::vector<std::string> frame_names,
               std::vector<std::string> dual_names)
    : g_(std::move(g)), frame_(std::move(frame)) {
  if (!g_) throw DomainError("metric: null algebra");
  const std::size_t n = g_->dim();
  if (frame_.rows() != n || frame_.cols() != n) throw DomainError("metric: frame must be n x n");
  if (exact::det(frame_).is_zero()) throw DomainError("metric: frame is singular");
  inv_ = exact::inverse(frame_);
  if (frame_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) frame_names.push_back("E" + std::to_string(i + 1));
  }
  if (dual_names.empty()) dual_names = default_duals(frame_names);
  if (frame_names.size() != n || dual_names.size() != n) throw InputError("metric: wrong number of names");
  frame_names_ = std::move(frame_names);
  dual_names_ = std::move(dual_names);

  fc_.assign(n * n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVector c = to_frame(g_->bracket(frame_vector(i), frame_vector(j)));
      for (std::size_t k = 0; k < n; ++k) fc_[(i * n + j) * n + k] = c[k];
    }
}

Metric Metric::standard(AlgebraPtr g, std::vector<std::string> dual_names) {
  const std::size_t n = g->dim();
  auto names = g->names();
  return Metric(std::move(g), RatMatrix::identity(n), names, std::move(dual_names));
}

Vec Metric::frame_vector(std::size_t i) const { return Vec(frame_.col(i)); }

RatVector Metric::to_frame(const Vec& v) const { return inv_.apply(v.coords()); }

Vec Metric::from_frame(const RatVector& c) const { return Vec(frame_.apply(c)); }

Rat Metric::inner(const Vec& u, const Vec& v) const { return exact::vec_dot(to_frame(u), to_frame(v)); }

RatMatrix Metric::gram() const { return inv_.transpose() * inv_; }

RatVector Metric::frame_values(const Covec& tau) const { return frame_.transpose().apply(tau.coords()); }

Covec Metric::from_frame_values(const RatVector& a) const { return Covec(inv_.transpose().apply(a)); }

Rat Metric::norm2(const Covec& tau) const {
  auto a = frame_values(tau);
  return exact::vec_dot(a, a);
}

RatMatrix Metric::in_frame(const LinearMap& phi) const { return inv_ * phi.matrix() * frame_; }

bool Metric::is_isometry(const LinearMap& phi) const {
  if (phi.rows() != dim() || phi.cols() != dim()) return false;
  RatMatrix m = in_frame(phi);
  return m.transpose() * m == RatMatrix::identity(dim());
}

Metric Metric::quotient(const lie::Quotient& q) const {
  std::vector<RatVector> cols;
  std::vector<std::string> fn, dn;
  std::size_t inside = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec e = frame_vector(i);
    if (q.ideal.contains(e)) {
      ++inside;
      continue;
    }
    cols.push_back(q.projection(e).coords());
    fn.push_back(frame_names_[i]);
    dn.push_back(dual_names_[i]);
  }
  if (inside != q.ideal.dim())
    throw DomainError("metric quotient: frame is not adapted to the ideal");
  const std::size_t m = q.algebra->dim();
  return Metric(q.algebra, RatMatrix::from_columns(cols, m), fn, dn);
}

RatVector ConnectionTable::derivative(std::size_t i, std::size_t j) const {
  RatVector v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

ConnectionTable koszul_connection(const Metric& m) {
  // <nabla_{E_i} E_j, E_k> = 1/2 (c_ij^k - c_jk^i + c_ki^j) in an orthonormal frame
  const std::size_t n = m.dim();
  const Rat half = Rat::parse("1/2");
  std::vector<Rat> g(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        g[(i * n + j) * n + k] =
            half * (m.frame_constant(i, j, k) - m.frame_constant(j, k, i) + m.frame_constant(k, i, j));
  return ConnectionTable(n, std::move(g));
}

RatMatrix laplacian_on_invariant_oneforms(const Metric& m) {
  // d eps_k = -sum_{i<j} c_ij^k eps_i ^ eps_j; invariant one-forms are
  // co-closed on a nilpotent group, so Delta = delta d and
  // <Delta eps_k, eps_l> = <d eps_k, d eps_l>.
  const std::size_t n = m.dim();
  RatMatrix L(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Rat s;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += m.frame_constant(i, j, k) * m.frame_constant(i, j, l);
      L(k, l) = s;
    }
  return L;
}

std::vector<std::vector<std::string>> nabla_chart(const Metric& m) {
  auto conn = koszul_connection(m);
  const auto& g = *m.algebra();
  std::vector<std::vector<std::string>> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      out[i].push_back(g.format(Covec(conn.derivative(i, j)), m.dual_names()));
  return out;
}

}  // namespace nilspec::geom
