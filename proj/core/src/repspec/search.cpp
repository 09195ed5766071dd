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
#include "nilspec/repspec/search.hpp"

#include <algorithm>
#include <numeric>

#include "nilspec/registry/codec.hpp"

namespace nilspec::rep {

namespace {

using exact::IntLattice;
using exact::IntMatrix;
using exact::Rat;
using exact::RatMatrix;
using exact::RatVector;
using lie::LinearMap;
using lie::NilLieAlgebra;
using lie::Subspace;
using lie::Vec;

// ---------------------------------------------------------------------------
// Affine functions of the free parameters: c[0] + sum c[k+1] f_k.

using Aff = RatVector;

Aff aff_const(const Rat& r, std::size_t nf) {
  Aff a(nf + 1);
  a[0] = r;
  return a;
}
bool aff_is_const(const Aff& a) {
  for (std::size_t k = 1; k < a.size(); ++k)
    if (!a[k].is_zero()) return false;
  return true;
}
void aff_axpy(Aff& acc, const Rat& s, const Aff& x) {
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (!x[k].is_zero()) acc[k] += s * x[k];
}
/// Product of affine functions; one factor must be constant.
Aff aff_mul(const Aff& a, const Aff& b) {
  if (aff_is_const(a)) return exact::vec_scale(a[0], b);
  if (aff_is_const(b)) return exact::vec_scale(b[0], a);
  throw DomainError("isomorphism search: generator images are not affine in the free entries");
}

using AffVec = std::vector<Aff>;

// ---------------------------------------------------------------------------

bool is_aligned(const Subspace& s) {
  for (const auto& v : s.basis()) {
    std::size_t nz = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) nz += !v[i].is_zero();
    if (nz != 1) return false;
  }
  return true;
}

std::optional<IntLattice> lattice_of(const std::vector<RatVector>& vs, std::size_t dim) {
  IntLattice l = IntLattice::span(vs, dim);
  if (l.rank() != dim) return std::nullopt;
  return l;
}

RatVector restrict(const RatVector& v, const std::vector<std::size_t>& idx) {
  RatVector r;
  for (auto i : idx) r.push_back(v[i]);
  return r;
}

/// An index block on which Psi induces a map, with the two lattices it must
/// carry onto each other.
struct Block {
  std::vector<std::size_t> idx;
  IntLattice l1, l2;
  Rat covol_ratio;  // |det B2| / |det B1|
  std::vector<RatVector> l1v{};
};

struct Value {
  Rat v;
  long cost;
};

class Searcher {
 public:
  Searcher(const lattice::LatticeSpec& a, const lattice::LatticeSpec& b, const SearchOptions& opts)
      : g_(*a.algebra()), n_(g_.dim()), l1_(a), l2_(b), opts_(opts) {
    setup();
  }

  SearchResult run() {
    SearchResult r;
    known_.assign(n_ * n_, std::nullopt);
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t row = 0; row < n_; ++row)
        if (!allowed_[c][row]) known_[row * n_ + c] = Rat(0);
    if (dfs(0)) {
      r.found = true;
      r.map = found_;
    }
    r.nodes = nodes_;
    r.leaves = leaves_;
    return r;
  }

 private:
  void setup() {
    if (!g_.nilpotent() || g_.step() > 3) throw DomainError("isomorphism search: requires step <= 3");
    const auto& series = g_.lower_central_series();
    level_.assign(n_, 0);
    for (std::size_t s = 1; s < series.size(); ++s) {
      if (!is_aligned(series[s])) throw DomainError("isomorphism search: lower central series is not coordinate aligned");
      for (auto p : series[s].pivots()) level_[p] = static_cast<int>(s);
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (level_[i] == 0) top_.push_back(i);
    for (const long d : opts_.denominators)
      if (d <= 0) throw DomainError("isomorphism search: denominators must be positive");
    if (opts_.coeff_bound < 0) throw DomainError("isomorphism search: negative bound");

    // characteristic family, kept only where coordinate aligned
    std::vector<Subspace> fam(series.begin() + 1, series.end());
    fam.push_back(g_.center());
    for (int round = 0; round < 2; ++round) {
      const auto snap = fam;
      for (const auto& s : snap) {
        fam.push_back(g_.centralizer(s));
        fam.push_back(g_.transporter_into(s));
      }
      std::vector<Subspace> uniq;
      for (auto& s : fam)
        if (std::find(uniq.begin(), uniq.end(), s) == uniq.end()) uniq.push_back(std::move(s));
      fam = std::move(uniq);
    }
    allowed_.assign(n_, std::vector<bool>(n_, true));
    for (const auto& s : fam) {
      if (!is_aligned(s)) continue;
      std::vector<bool> in(n_, false);
      for (auto p : s.pivots()) in[p] = true;
      for (std::size_t c = 0; c < n_; ++c)
        if (in[c])
          for (std::size_t r = 0; r < n_; ++r) allowed_[c][r] = allowed_[c][r] && in[r];
    }

    // source generators: top ones are d_t e_t modulo [g, g]
    scale_.assign(n_, Rat(0));
    for (const auto& v : l1_.generators()) {
      std::size_t nz = 0, at = 0;
      for (auto t : top_)
        if (!v[t].is_zero()) ++nz, at = t;
      if (nz > 1) throw DomainError("isomorphism search: source generators are not diagonal modulo [g, g]");
      if (nz == 1) {
        if (!scale_[at].is_zero()) throw DomainError("isomorphism search: repeated top generator");
        scale_[at] = v[at].abs();
      }
    }
    for (auto t : top_)
      if (scale_[t].is_zero()) throw DomainError("isomorphism search: source lattice misses a top direction");

    // graded blocks and the center block
    const std::size_t levels = series.size() - 1;
    for (std::size_t s = 0; s < levels; ++s) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n_; ++i)
        if (level_[i] == static_cast<int>(s)) idx.push_back(i);
      auto blk = graded_block(idx, series[s]);
      if (blk) blocks_.push_back(std::move(*blk));
    }
    const Subspace z = g_.center();
    if (is_aligned(z)) {
      const auto c1 = lattice::center_intersection(l1_), c2 = lattice::center_intersection(l2_);
      std::vector<RatVector> b1, b2;
      for (const auto& v : c1.basis) b1.push_back(restrict(v.coords(), z.pivots()));
      for (const auto& v : c2.basis) b2.push_back(restrict(v.coords(), z.pivots()));
      auto m1 = lattice_of(b1, z.dim()), m2 = lattice_of(b2, z.dim());
      if (m1 && m2) {
        Rat ratio = (exact::det(m2->basis()) / exact::det(m1->basis())).abs();
        blocks_.push_back({z.pivots(), *m1, *m2, ratio});
      }
    }
    if (blocks_.empty() || blocks_.front().idx != top_)
      throw DomainError("isomorphism search: lattices are not adapted to the lower central series");
    top_lattice2_ = blocks_.front().l2;
    for (auto& b : blocks_) b.l1v = b.l1.basis_vectors();

    // structure constants
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        const Vec br = g_.bracket(g_.e(a), g_.e(b));
        for (std::size_t r = 0; r < n_; ++r)
          if (!br[r].is_zero()) quad_.push_back({a, b, r, br[r]});
      }
    inv2_ = exact::inverse(l2_.generator_matrix());

    build_candidates();
  }

  std::optional<Block> graded_block(const std::vector<std::size_t>& idx, const Subspace& term) {
    auto proj = [&](const lattice::LatticeSpec& l) -> std::optional<IntLattice> {
      std::vector<RatVector> vs;
      std::vector<Vec> tail;
      for (const auto& v : l.generators())
        if (term.contains(v)) {
          tail.push_back(v);
          vs.push_back(restrict(v.coords(), idx));
        }
      if (!(Subspace(n_, tail) == term)) return std::nullopt;
      return lattice_of(vs, idx.size());
    };
    auto a = proj(l1_), b = proj(l2_);
    if (!a || !b) return std::nullopt;
    Rat ratio = (exact::det(b->basis()) / exact::det(a->basis())).abs();
    return Block{idx, *a, *b, ratio};
  }

  bool value_ok(const Rat& v) const {
    if (v.abs() > Rat(opts_.coeff_bound)) return false;
    for (const long d : opts_.denominators)
      if ((v * Rat(d)).is_integer()) return true;
    return false;
  }

  static long cost(const Rat& v) {
    if (v.is_zero()) return 0;
    return static_cast<long>(mpz_class(abs(v.num())).get_si() + v.den().get_si());
  }

  void build_candidates() {
    const std::size_t k = top_.size();
    std::vector<std::size_t> top_pos(n_, 0);
    for (std::size_t a = 0; a < k; ++a) top_pos[top_[a]] = a;
    cands_.assign(n_, {});
    for (auto t : top_) {
      // sublattice of the target top lattice inside the allowed coordinates
      std::vector<std::size_t> coords;
      for (std::size_t a = 0; a < k; ++a)
        if (allowed_[t][top_[a]]) coords.push_back(a);
      std::vector<std::size_t> banned;
      for (std::size_t a = 0; a < k; ++a)
        if (!allowed_[t][top_[a]]) banned.push_back(a);
      RatMatrix kmat(banned.size(), k);
      for (std::size_t r = 0; r < banned.size(); ++r) kmat(r, banned[r]) = Rat(1);
      const auto split = banned.empty() ? exact::LatticeSplit{top_lattice2_.basis_vectors(), {}}
                                        : exact::split_by_kernel(top_lattice2_, kmat);
      const auto& basis = split.kernel_part;
      const std::size_t m = basis.size();
      if (m != coords.size()) throw InternalError("isomorphism search: sublattice rank mismatch");
      RatMatrix sq(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sq(i, j) = basis[j][coords[i]];
      const RatMatrix sinv = exact::inverse(sq);
      const Rat radius = scale_[t] * Rat(opts_.coeff_bound);
      std::vector<long> lim(m);
      for (std::size_t j = 0; j < m; ++j) {
        Rat s;
        for (std::size_t i = 0; i < m; ++i) s += sinv(j, i).abs();
        lim[j] = (s * radius).floor().get_si();
      }
      std::size_t total = 1;
      for (auto l : lim) {
        total *= static_cast<std::size_t>(2 * l + 1);
        if (total > opts_.node_ceiling) throw DomainError("isomorphism search: candidate space above the ceiling");
      }
      std::vector<long> c(m);
      for (std::size_t j = 0; j < m; ++j) c[j] = -lim[j];
      std::vector<std::pair<std::vector<long>, RatVector>> out;
      for (;;) {
        RatVector y(k);
        for (std::size_t j = 0; j < m; ++j)
          if (c[j] != 0) y = exact::vec_add(y, exact::vec_scale(Rat(c[j]), basis[j]));
        RatVector a = exact::vec_scale(scale_[t].inv(), y);
        bool ok = !exact::vec_is_zero(a);
        std::vector<long> key(3, 0);
        for (std::size_t i = 0; ok && i < k; ++i) {
          if (!value_ok(a[i])) ok = false;
          const Rat id = top_[i] == t ? Rat(1) : Rat(0);
          if (a[i] != id) ++key[0];
          key[1] += cost(a[i] - id);
        }
        if (ok) {
          for (std::size_t i = 0; i < k; ++i) key.push_back(a[i] < Rat(0) ? 1 : 0);
          out.emplace_back(std::move(key), std::move(a));
        }
        std::size_t j = 0;
        while (j < m && c[j] == lim[j]) c[j] = -lim[j], ++j;
        if (j == m) break;
        ++c[j];
      }
      std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return std::lexicographical_compare(x.second.begin(), x.second.end(), y.second.begin(), y.second.end(),
                                            [](const Rat& p, const Rat& q) { return p.abs() < q.abs(); });
      });
      for (auto& [key, a] : out) cands_[t].push_back(std::move(a));
      (void)top_pos;
    }
    order_ = top_;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return cands_[x].size() < cands_[y].size(); });
  }

  // -------------------------------------------------------------------------

  struct Analysis {
    bool consistent = true;
    bool skipped = false;
    std::size_t nfree = 0;
    std::vector<Aff> entries;  // n*n, row-major
  };

  Analysis analyze() const {
    Analysis an;
    std::vector<std::size_t> unk_of(n_ * n_, SIZE_MAX);
    std::vector<std::size_t> pos;
    for (std::size_t e = 0; e < n_ * n_; ++e)
      if (!known_[e]) {
        unk_of[e] = pos.size();
        pos.push_back(e);
      }
    const std::size_t u = pos.size();
    std::vector<RatVector> rows;
    // Psi([e_i, e_j]) = [Psi e_i, Psi e_j], coordinate r
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        const Vec br = g_.bracket(g_.e(i), g_.e(j));
        std::vector<RatVector> eq(n_, RatVector(u + 1));
        std::vector<bool> bad(n_, false);
        for (std::size_t r = 0; r < n_; ++r)
          for (std::size_t k = 0; k < n_; ++k) {
            if (br[k].is_zero()) continue;
            const std::size_t e = r * n_ + k;
            if (known_[e]) eq[r][u] -= br[k] * *known_[e];
            else eq[r][unk_of[e]] += br[k];
          }
        for (const auto& q : quad_) {
          const std::size_t ea = q.a * n_ + i, eb = q.b * n_ + j;
          const auto &ka = known_[ea], &kb = known_[eb];
          auto& row = eq[q.r];
          if (ka && kb) row[u] += q.c * *ka * *kb;
          else if (ka) {
            if (!ka->is_zero()) row[unk_of[eb]] -= q.c * *ka;
          } else if (kb) {
            if (!kb->is_zero()) row[unk_of[ea]] -= q.c * *kb;
          } else {
            bad[q.r] = true;
          }
        }
        for (std::size_t r = 0; r < n_; ++r) {
          if (bad[r]) {
            an.skipped = true;
            continue;
          }
          if (!exact::vec_is_zero(eq[r])) rows.push_back(std::move(eq[r]));
        }
      }
    RatMatrix m(rows.size(), u + 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j <= u; ++j) m(i, j) = rows[i][j];
    const auto rr = exact::rref(std::move(m));
    std::vector<long> pivot_row(u + 1, -1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      if (rr.pivots[i] == u) {
        an.consistent = false;
        return an;
      }
      pivot_row[rr.pivots[i]] = static_cast<long>(i);
    }
    std::vector<std::size_t> free_id(u, SIZE_MAX);
    for (std::size_t j = 0; j < u; ++j)
      if (pivot_row[j] < 0) free_id[j] = an.nfree++;
    const std::size_t nf = an.nfree;
    an.entries.assign(n_ * n_, Aff());
    for (std::size_t e = 0; e < n_ * n_; ++e)
      if (known_[e]) an.entries[e] = aff_const(*known_[e], nf);
    for (std::size_t j = 0; j < u; ++j) {
      Aff a(nf + 1);
      if (pivot_row[j] < 0) {
        a[free_id[j] + 1] = Rat(1);
      } else {
        const auto r = static_cast<std::size_t>(pivot_row[j]);
        a[0] = rr.m(r, u);
        for (std::size_t k = 0; k < u; ++k)
          if (pivot_row[k] < 0 && !rr.m(r, k).is_zero()) a[free_id[k] + 1] = -rr.m(r, k);
      }
      an.entries[pos[j]] = std::move(a);
    }
    return an;
  }

  /// Lattice and covolume conditions on every block, applied to whichever
  /// source basis vectors are supported on determined columns.
  bool blocks_ok(const Analysis& an) const {
    for (const auto& b : blocks_) {
      const std::size_t k = b.idx.size();
      RatMatrix m(k, k);
      std::vector<bool> col_known(k, true);
      bool all = true;
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < k; ++r) {
          const Aff& a = an.entries[b.idx[r] * n_ + b.idx[c]];
          if (!aff_is_const(a)) {
            col_known[c] = all = false;
            break;
          }
          m(r, c) = a[0];
        }
      if (all && exact::det(m).abs() != b.covol_ratio) return false;
      for (const auto& v : b.l1v) {
        bool usable = true;
        for (std::size_t c = 0; c < k && usable; ++c) usable = v[c].is_zero() || col_known[c];
        if (usable && !b.l2.contains(m.apply(v))) return false;
      }
    }
    return true;
  }

  void tick() {
    if (++nodes_ + leaves_ > opts_.node_ceiling)
      throw DomainError("isomorphism search: node ceiling " + std::to_string(opts_.node_ceiling) + " exceeded");
  }

  bool dfs(std::size_t depth) {
    tick();
    const Analysis an = analyze();
    if (!an.consistent || !blocks_ok(an)) return false;
    if (depth == order_.size()) return leaf(an);
    const std::size_t t = order_[depth];
    // the linear equations already pin the column to an affine subspace
    const std::size_t k = top_.size();
    RatMatrix nmat(k, an.nfree);
    RatVector x0(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Aff& e = an.entries[top_[i] * n_ + t];
      x0[i] = e[0];
      for (std::size_t f = 0; f < an.nfree; ++f) nmat(i, f) = e[f + 1];
    }
    const auto constraints = exact::nullspace(nmat.transpose());
    for (const auto& a : cands_[t]) {
      const RatVector d = exact::vec_sub(a, x0);
      bool fits = true;
      for (const auto& p : constraints)
        if (!exact::vec_dot(p, d).is_zero()) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (std::size_t i = 0; i < top_.size(); ++i) known_[top_[i] * n_ + t] = a[i];
      if (dfs(depth + 1)) return true;
    }
    for (std::size_t i = 0; i < top_.size(); ++i)
      known_[top_[i] * n_ + t] = allowed_[t][top_[i]] ? std::nullopt : std::optional<Rat>(Rat(0));
    return false;
  }

  AffVec aff_bracket(const AffVec& x, const AffVec& y, std::size_t nf) const {
    AffVec out(n_, Aff(nf + 1));
    for (const auto& q : quad_) {
      if (exact::vec_is_zero(x[q.a]) || exact::vec_is_zero(y[q.b])) continue;
      aff_axpy(out[q.r], q.c, aff_mul(x[q.a], y[q.b]));
    }
    return out;
  }

  AffVec aff_cbh(const AffVec& x, const AffVec& y, std::size_t nf) const {
    const AffVec xy = aff_bracket(x, y, nf);
    AffVec r(n_, Aff(nf + 1));
    for (std::size_t i = 0; i < n_; ++i) {
      aff_axpy(r[i], Rat(1), x[i]);
      aff_axpy(r[i], Rat(1), y[i]);
      aff_axpy(r[i], Rat::parse("1/2"), xy[i]);
    }
    if (g_.step() == 3) {
      const AffVec a = aff_bracket(x, xy, nf), b = aff_bracket(y, xy, nf);
      for (std::size_t i = 0; i < n_; ++i) {
        aff_axpy(r[i], Rat::parse("1/12"), a[i]);
        aff_axpy(r[i], Rat::parse("-1/12"), b[i]);
      }
    }
    return r;
  }

  /// Malcev coordinates with respect to the target lattice, affine in f.
  std::vector<Aff> aff_malcev(AffVec cur, std::size_t nf) const {
    std::vector<Aff> t;
    const auto& gens = l2_.generators();
    for (std::size_t k = 0; k < n_; ++k) {
      Aff tk(nf + 1);
      for (std::size_t j = 0; j < n_; ++j) aff_axpy(tk, inv2_(k, j), cur[j]);
      if (!exact::vec_is_zero(tk)) {
        AffVec x(n_);
        for (std::size_t i = 0; i < n_; ++i) x[i] = exact::vec_scale(-gens[k][i], tk);
        cur = aff_cbh(x, cur, nf);
      }
      t.push_back(std::move(tk));
    }
    return t;
  }

  bool leaf(const Analysis& an) {
    ++leaves_;
    if (an.skipped) throw DomainError("isomorphism search: automorphism equations are not linear at a leaf");
    const std::size_t nf = an.nfree;
    // integrality rows: m0 + M f in Z
    std::vector<Aff> rows;
    for (const auto& v : l1_.generators()) {
      AffVec img(n_, Aff(nf + 1));
      for (std::size_t c = 0; c < n_; ++c)
        if (!v[c].is_zero())
          for (std::size_t r = 0; r < n_; ++r) aff_axpy(img[r], v[c], an.entries[r * n_ + c]);
      for (auto& a : aff_malcev(std::move(img), nf)) rows.push_back(std::move(a));
    }
    auto f = solve_integral(rows, nf);
    if (!f) return false;
    RatMatrix psi(n_, n_);
    for (std::size_t e = 0; e < n_ * n_; ++e) {
      const Aff& a = an.entries[e];
      Rat x = a[0];
      for (std::size_t k = 0; k < nf; ++k) x += a[k + 1] * (*f)[k];
      psi(e / n_, e % n_) = x;
    }
    LinearMap phi(psi);
    if (!phi.invertible() || !lie::is_automorphism(g_, phi)) return false;
    for (const auto& v : l1_.generators())
      if (!l2_.contains(phi(v))) return false;
    const LinearMap inv = phi.inverse();
    for (const auto& w : l2_.generators())
      if (!l1_.contains(inv(w))) return false;
    found_ = phi;
    return true;
  }

  /// Some f in Q^nf with every row integral, if one exists.
  static std::optional<RatVector> solve_integral(const std::vector<Aff>& rows, std::size_t nf) {
    const std::size_t q = rows.size();
    RatVector m0(q);
    RatMatrix m(q, nf);
    for (std::size_t i = 0; i < q; ++i) {
      m0[i] = rows[i][0];
      for (std::size_t k = 0; k < nf; ++k) m(i, k) = rows[i][k + 1];
    }
    if (nf == 0) {
      for (const auto& x : m0)
        if (!x.is_integer()) return std::nullopt;
      return RatVector{};
    }
    // z integral with z - m0 in col(M)  <=>  P z = P m0 for P spanning the left kernel
    const auto left = exact::nullspace(m.transpose());
    RatVector z(q);
    if (!left.empty()) {
      const std::size_t p = left.size();
      IntMatrix pint(p, q);
      std::vector<mpz_class> b(p);
      for (std::size_t i = 0; i < p; ++i) {
        mpz_class den = 1;
        for (const auto& x : left[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.den().get_mpz_t());
        const Rat s(den, 1);
        Rat rhs;
        for (std::size_t j = 0; j < q; ++j) {
          pint(i, j) = (left[i][j] * s).num();
          rhs += left[i][j] * s * m0[j];
        }
        if (!rhs.is_integer()) return std::nullopt;
        b[i] = rhs.num();
      }
      const auto sf = exact::snf(pint);
      std::vector<mpz_class> c(p, 0);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) c[i] += sf.u(i, j) * b[j];
      std::vector<mpz_class> y(q, 0);
      for (std::size_t i = 0; i < p; ++i) {
        const mpz_class d = i < q ? sf.d(i, i) : mpz_class(0);
        if (d == 0) {
          if (c[i] != 0) return std::nullopt;
          continue;
        }
        if (c[i] % d != 0) return std::nullopt;
        y[i] = c[i] / d;
      }
      for (std::size_t i = 0; i < q; ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < q; ++j) acc += sf.v(i, j) * y[j];
        z[i] = Rat(acc, 1);
      }
    }
    auto f = exact::solve(m, exact::vec_sub(z, m0));
    if (!f) throw InternalError("isomorphism search: integral lift is not in the column space");
    return f;
  }

  struct Quad {
    std::size_t a, b, r;
    Rat c;
  };

  const NilLieAlgebra& g_;
  const std::size_t n_;
  const lattice::LatticeSpec& l1_;
  const lattice::LatticeSpec& l2_;
  const SearchOptions opts_;

  std::vector<int> level_;
  std::vector<std::size_t> top_, order_;
  std::vector<std::vector<bool>> allowed_;  // allowed_[column][row]
  std::vector<Rat> scale_;
  std::vector<Block> blocks_;
  IntLattice top_lattice2_{RatMatrix(0, 0)};
  std::vector<Quad> quad_;
  RatMatrix inv2_;
  std::vector<std::vector<RatVector>> cands_;

  std::vector<std::optional<Rat>> known_;
  std::size_t nodes_ = 0, leaves_ = 0;
  std::optional<LinearMap> found_;
};

bool diagonal_mod_derived(const lattice::LatticeSpec& l) {
  const auto& g = *l.algebra();
  const Subspace d = g.series_term(1);
  std::vector<bool> low(g.dim(), false);
  for (auto p : d.pivots()) low[p] = true;
  for (const auto& v : l.generators()) {
    std::size_t nz = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) nz += !low[i] && !v[i].is_zero();
    if (nz > 1) return false;
  }
  return true;
}

}  // namespace

nlohmann::json SearchResult::to_json(const lie::NilLieAlgebra& g) const {
  nlohmann::json j{{"found", found}, {"nodes", nodes}, {"leaves", leaves}};
  if (map) {
    j["map"] = io::map_to_json(*map);
    nlohmann::json images = nlohmann::json::object();
    for (std::size_t i = 0; i < g.dim(); ++i) images[g.names()[i]] = g.format((*map)(g.e(i)));
    j["images"] = images;
  }
  return j;
}

SearchResult bounded_lattice_isomorphism_search(const lattice::LatticeSpec& gamma1,
                                                const lattice::LatticeSpec& gamma2, const SearchOptions& opts) {
  const auto& a = *gamma1.algebra();
  const auto& b = *gamma2.algebra();
  if (a.names() != b.names() || a.bracket_table().size() != b.bracket_table().size() ||
      io::algebra_to_json(a) != io::algebra_to_json(b))
    throw DomainError("isomorphism search: lattices live in different algebras");
  if (!diagonal_mod_derived(gamma1) && diagonal_mod_derived(gamma2)) {
    SearchResult r = Searcher(gamma2, gamma1, opts).run();
    if (r.map) r.map = r.map->inverse();
    return r;
  }
  return Searcher(gamma1, gamma2, opts).run();
}

}  // namespace nilspec::rep
