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
#include "nilspec/liealg/algebra.hpp"

#include <set>

namespace nilspec::lie {

NilLieAlgebra::NilLieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& brackets)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw DomainError("algebra must have positive dimension");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != n) throw InputError("duplicate basis names");
  table_.assign(n * n, {});
  std::vector<bool> set(n * n, false);
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) throw InputError("bracket index out of range");
    std::vector<Rat> dense(n);
    for (const auto& [k, v] : b.terms) {
      if (k >= n) throw InputError("bracket result index out of range");
      dense[k] += v;
    }
    if (b.i == b.j) {
      if (!exact::vec_is_zero(dense)) throw InputError("[e_i, e_i] must vanish");
      continue;
    }
    std::vector<std::pair<std::size_t, Rat>> fwd, rev;
    for (std::size_t k = 0; k < n; ++k)
      if (!dense[k].is_zero()) {
        fwd.emplace_back(k, dense[k]);
        rev.emplace_back(k, -dense[k]);
      }
    const std::size_t ij = b.i * n + b.j, ji = b.j * n + b.i;
    if (set[ij] && table_[ij] != fwd)
      throw InputError("inconsistent bracket entries for [" + names_[b.i] + ", " + names_[b.j] + "]");
    table_[ij] = std::move(fwd);
    table_[ji] = std::move(rev);
    set[ij] = set[ji] = true;
  }

  Subspace cur = Subspace::whole(n);
  series_.push_back(cur);
  for (;;) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& b : cur.basis()) gens.push_back(bracket(e(i), b));
    Subspace next(n, gens);
    if (next == cur) {
      nilpotent_ = false;
      break;
    }
    series_.push_back(next);
    if (next.dim() == 0) {
      nilpotent_ = true;
      break;
    }
    cur = next;
  }
}

std::size_t NilLieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw InputError("unknown basis name '" + name + "'");
}

Rat NilLieAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, v] : table_.at(i * dim() + j))
    if (kk == k) return v;
  return Rat(0);
}

std::vector<BracketEntry> NilLieAlgebra::bracket_table() const {
  std::vector<BracketEntry> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!table_[i * n + j].empty()) out.push_back({i, j, table_[i * n + j]});
  return out;
}

void NilLieAlgebra::check_dim(const Vec& v) const {
  if (v.dim() != dim())
    throw DomainError("vector of length " + std::to_string(v.dim()) + " in a " +
                      std::to_string(dim()) + "-dimensional algebra");
}

Vec NilLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  check_dim(x);
  check_dim(y);
  const std::size_t n = dim();
  RatVector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || table_[i * n + j].empty()) continue;
      const Rat f = x[i] * y[j];
      for (const auto& [k, v] : table_[i * n + j]) r[k] += f * v;
    }
  }
  return Vec(std::move(r));
}

RatMatrix NilLieAlgebra::ad(const Vec& x) const {
  std::vector<RatVector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(x, e(j)).coords());
  return RatMatrix::from_columns(cols, dim());
}

int NilLieAlgebra::step() const {
  if (!nilpotent_) throw DomainError("algebra is not nilpotent");
  return static_cast<int>(series_.size()) - 1;
}

Subspace NilLieAlgebra::series_term(std::size_t j) const {
  if (j < series_.size()) return series_[j];
  if (!nilpotent_) return series_.back();
  return Subspace::zero(dim());
}

Subspace NilLieAlgebra::center() const { return centralizer(Subspace::whole(dim())); }

Subspace NilLieAlgebra::centralizer(const Subspace& s) const {
  // X with [s_b, X] = 0 for every basis vector s_b
  auto b = s.basis();
  const std::size_t n = dim();
  RatMatrix m(b.size() * n, n);
  for (std::size_t t = 0; t < b.size(); ++t) {
    RatMatrix a = ad(b[t]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(t * n + i, j) = a(i, j);
  }
  std::vector<Vec> gens;
  for (auto& v : exact::nullspace(m)) gens.emplace_back(std::move(v));
  return Subspace(n, gens);
}

Subspace NilLieAlgebra::transporter_into(const Subspace& s) const {
  // U with a([e_j, U]) = 0 for every annihilator a of s
  auto ann = s.annihilator();
  const std::size_t n = dim();
  RatMatrix m(ann.size() * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix a = ad(e(j));
    for (std::size_t k = 0; k < ann.size(); ++k) {
      RatVector row = a.transpose().apply(ann[k].coords());
      for (std::size_t c = 0; c < n; ++c) m(j * ann.size() + k, c) = row[c];
    }
  }
  std::vector<Vec> gens;
  for (auto& v : exact::nullspace(m)) gens.emplace_back(std::move(v));
  return Subspace(n, gens);
}

bool NilLieAlgebra::is_ideal(const Subspace& s) const {
  if (s.ambient_dim() != dim()) return false;
  for (const auto& b : s.basis())
    for (std::size_t i = 0; i < dim(); ++i)
      if (!s.contains(bracket(e(i), b))) return false;
  return true;
}

Vec NilLieAlgebra::cbh(const Vec& x, const Vec& y) const {
  if (!nilpotent_ || step() > 3)
    throw DomainError("cbh_product: only implemented for step <= 3");
  Vec xy = bracket(x, y);
  Vec r = x + y + Rat::parse("1/2") * xy;
  if (step() == 3) {
    const Rat twelfth = Rat::parse("1/12");
    r = r + twelfth * bracket(x, xy) + twelfth * bracket(y, -xy);
  }
  return r;
}

std::string NilLieAlgebra::format(const Vec& v) const {
  check_dim(v);
  std::string s;
  for (std::size_t j = 0; j < dim(); ++j) {
    const Rat& c = v[j];
    if (c.is_zero()) continue;
    Rat a = c.abs();
    std::string coef = a == Rat(1) ? "" : a.str() + " ";
    if (s.empty()) s = (c.sign() < 0 ? "-" : "") + coef + names_[j];
    else s += (c.sign() < 0 ? " - " : " + ") + coef + names_[j];
  }
  return s.empty() ? "0" : s;
}

std::string NilLieAlgebra::format(const Covec& v, const std::vector<std::string>& dual_names) const {
  std::string s;
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const Rat& c = v[j];
    if (c.is_zero()) continue;
    Rat a = c.abs();
    std::string coef = a == Rat(1) ? "" : a.str() + " ";
    const std::string& nm = dual_names.at(j);
    if (s.empty()) s = (c.sign() < 0 ? "-" : "") + coef + nm;
    else s += (c.sign() < 0 ? " - " : " + ") + coef + nm;
  }
  return s.empty() ? "0" : s;
}

ValidationReport validate(const NilLieAlgebra& g) {
  ValidationReport rep;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec a = g.bracket(g.e(i), g.bracket(g.e(j), g.e(k)));
        Vec b = g.bracket(g.e(j), g.bracket(g.e(k), g.e(i)));
        Vec c = g.bracket(g.e(k), g.bracket(g.e(i), g.e(j)));
        if (!(a + b + c).is_zero()) {
          rep.jacobi_ok = false;
          rep.violations.push_back({i, j, k});
        }
      }
  rep.nilpotent = g.nilpotent();
  rep.step = g.nilpotent() ? g.step() : -1;
  rep.series = g.lower_central_series();
  return rep;
}

Vec Quotient::lift(const Vec& q, std::size_t parent_dim) const {
  Vec v = Vec::zero(parent_dim);
  for (std::size_t a = 0; a < kept.size(); ++a) v[kept[a]] = q[a];
  return v;
}

LinearMap Quotient::induced(const LinearMap& phi, std::size_t parent_dim) const {
  if (!ideal.image(phi).contains(ideal) || !ideal.contains(ideal.image(phi)))
    throw DomainError("map does not preserve the ideal");
  std::vector<Vec> imgs;
  for (std::size_t a = 0; a < kept.size(); ++a)
    imgs.push_back(projection(phi(Vec::unit(parent_dim, kept[a]))));
  return LinearMap::from_images(imgs);
}

Quotient quotient(const NilLieAlgebra& g, const Subspace& ideal) {
  if (!g.is_ideal(ideal)) throw DomainError("quotient: subspace is not an ideal");
  const std::size_t n = g.dim();
  std::vector<bool> piv(n, false);
  for (auto p : ideal.pivots()) piv[p] = true;
  Quotient q;
  q.ideal = ideal;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j)
    if (!piv[j]) {
      q.kept.push_back(j);
      names.push_back(g.names()[j]);
    }
  const std::size_t m = q.kept.size();
  RatMatrix p(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = ideal.reduce(g.e(j));
    for (std::size_t a = 0; a < m; ++a) p(a, j) = r[q.kept[a]];
  }
  q.projection = LinearMap(p);
  std::vector<BracketEntry> br;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec v = q.projection(g.bracket(g.e(q.kept[a]), g.e(q.kept[b])));
      BracketEntry e{a, b, {}};
      for (std::size_t k = 0; k < m; ++k)
        if (!v[k].is_zero()) e.terms.emplace_back(k, v[k]);
      if (!e.terms.empty()) br.push_back(std::move(e));
    }
  q.algebra = std::make_shared<const NilLieAlgebra>(std::move(names), br);
  return q;
}

}  // namespace nilspec::lie
