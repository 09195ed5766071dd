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
#include "nilspec/oneform/oneform.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "nilspec/repspec/multiplicity.hpp"

namespace nilspec::oneform {

using exact::GaussRat;
using exact::RatMatrix;

CharacterWave CharacterWave::make(const lie::NilLieAlgebra& g, Covec tau) {
  if (tau.dim() != g.dim()) throw DomainError("character: dimension mismatch");
  const auto& series = g.lower_central_series();
  if (series.size() > 1)
    for (const auto& v : series[1].basis())
      if (!tau(v).is_zero()) throw DomainError("character: functional does not vanish on [g, g]");
  return {std::move(tau)};
}

bool CharacterMatrix::is_hermitian() const {
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = j; k < dim(); ++k)
      if (!(e(j, k) == e(k, j).conj())) return false;
  return true;
}

CharacterMatrix assemble_E(const geom::Metric& metric, const CharacterWave& wave) {
  const auto& g = *metric.algebra();
  const std::size_t n = g.dim();
  CharacterWave::make(g, wave.tau);
  const auto conn = geom::koszul_connection(metric);
  const RatMatrix lap = geom::laplacian_on_invariant_oneforms(metric);
  const RatVector t = metric.frame_values(wave.tau);
  const Rat s2 = metric.norm2(wave.tau);
  PolyMatrix e(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      UniPoly entry(lap(k, l));
      if (k == l) entry += UniPoly::monomial(GaussRat(Rat(4) * s2), 2);
      Rat c;
      for (std::size_t j = 0; j < n; ++j)
        if (!t[j].is_zero()) c += t[j] * conn(j, l, k);  // nabla_{E_j} eps_l has eps_k coefficient Γ^k_{jl}
      if (!c.is_zero()) entry += UniPoly::monomial(GaussRat(Rat(0), Rat(-4) * c), 1);
      e(k, l) = std::move(entry);
    }
  return {std::move(e), wave.tau, s2, metric.algebra()};
}

// ---------------------------------------------------------------------------

EigenCandidate EigenCandidate::pi_squared_plus_one() {
  const UniPoly p = UniPoly::p();
  return {QuadExtElem(p * p + UniPoly(1), UniPoly(), exact::trivial_modulus()), "pi^2 + 1"};
}

EigenCandidate EigenCandidate::shifted_root(const Rat& c) {
  const UniPoly p = UniPoly::p();
  const UniPoly q = UniPoly(c) * p * p + UniPoly(1);
  const std::string qs = c.str() + " pi^2 + 1";
  return {QuadExtElem(q, UniPoly(1), exact::make_modulus(q)), qs + " + sqrt(" + qs + ")"};
}

namespace {

nlohmann::json coeffs_json(const UniPoly& u) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : u.coeffs()) a.push_back(c.str());
  return a;
}

void check_candidate_growth(const EigenCandidate& lambda) {
  const auto& x = lambda.lambda;
  if (x.a().degree() > 2) throw DomainError("leading coefficient: candidate grows faster than p^2");
  if (!x.b().is_zero() && 2 * x.b().degree() + x.modulus()->q().degree() > 2)
    throw DomainError("leading coefficient: candidate grows faster than p^2");
}

Rat real_part(const GaussRat& g, const char* what) {
  if (!g.is_real()) throw InternalError(std::string(what) + ": coefficient is not real");
  return g.re();
}

}  // namespace

nlohmann::json EigenCandidate::to_json() const {
  return {{"label", label},
          {"a_coeffs", coeffs_json(lambda.a())},
          {"b_coeffs", coeffs_json(lambda.b())},
          {"q_coeffs", coeffs_json(lambda.modulus()->q())}};
}

double EigenCandidate::numeric(double pi) const {
  const double a = lambda.a().eval(pi).real();
  if (lambda.b().is_zero()) return a;
  return a + lambda.b().eval(pi).real() * std::sqrt(lambda.modulus()->q().eval(pi).real());
}

ExtMatrix shifted(const CharacterMatrix& e, const EigenCandidate& lambda) {
  const std::size_t n = e.dim();
  const auto& m = lambda.lambda.modulus();
  std::vector<QuadExtElem> d;
  d.reserve(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) d.emplace_back(e.e(k, l) - lambda.lambda.a(), -lambda.lambda.b(), m);
      else d.emplace_back(e.e(k, l), UniPoly(), m);
    }
  return ExtMatrix(n, n, std::move(d));
}

QuadExtElem det_at(const ExtMatrix& e, const EigenCandidate& lambda) {
  if (!e.square() || e.rows() == 0) throw DomainError("det_at: matrix must be square and non-empty");
  for (std::size_t k = 0; k < e.rows(); ++k)
    for (std::size_t l = 0; l < e.cols(); ++l)
      if (!(*e(k, l).modulus() == *lambda.lambda.modulus()))
        throw ModulusMismatch("det_at: matrix and candidate use different moduli");
  return exact::bareiss_det(e);
}

QuadExtElem det_at(const CharacterMatrix& e, const EigenCandidate& lambda) {
  return exact::bareiss_det(shifted(e, lambda));
}

bool is_eigenvalue(const CharacterMatrix& e, const EigenCandidate& lambda) {
  return exact::quadext_zero_test(det_at(e, lambda));
}

Rat leading_pi_coefficient(const CharacterMatrix& e, const EigenCandidate& lambda) {
  check_candidate_growth(lambda);
  const QuadExtElem d = det_at(e, lambda);
  return real_part(d.a().coeff(static_cast<unsigned>(2 * e.dim())), "leading coefficient");
}

Rat leading_norm_coefficient(const CharacterMatrix& e, const EigenCandidate& lambda) {
  const UniPoly nrm = det_at(e, lambda).norm();
  if (nrm.is_zero()) return Rat(0);
  return real_part(nrm.lead(), "norm coefficient");
}

NullityResult nullity_at(const CharacterMatrix& e, const EigenCandidate& lambda) {
  const ExtMatrix m = shifted(e, lambda);
  auto k = exact::fraction_free_kernel(m, exact::one_like(m(0, 0)));
  return {k.nullity, std::move(k.basis)};
}

bool proportional(const std::vector<QuadExtElem>& u, const std::vector<QuadExtElem>& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!exact::quadext_zero_test(u[i] * v[j] - u[j] * v[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------

ShellConditions character_conditions(const lattice::LatticeSpec& gamma) {
  const auto& g = *gamma.algebra();
  const std::size_t n = g.dim();
  const auto& series = g.lower_central_series();
  std::vector<Covec> chars = series.size() > 1 ? series[1].annihilator() : std::vector<Covec>{};
  if (series.size() <= 1)
    for (std::size_t i = 0; i < n; ++i) chars.push_back(Covec::unit(n, i));
  const std::size_t k = chars.size();
  std::vector<RatVector> rows;
  for (const auto& v : gamma.generators()) {
    RatVector r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = chars[i](v);
    rows.push_back(std::move(r));
  }
  const auto span = exact::IntLattice::span(rows, k);
  if (span.rank() != k) throw DomainError("character conditions: lattice does not span g / [g, g]");
  const auto dual = exact::dual_lattice(span);
  ShellConditions out{{}, Covec::zero(n)};
  for (const auto& y : dual.basis_vectors()) {
    Covec t = Covec::zero(n);
    for (std::size_t i = 0; i < k; ++i)
      if (!y[i].is_zero()) t = t + y[i] * chars[i];
    out.basis.push_back(std::move(t));
  }
  return out;
}

namespace {

bool covec_less(const Covec& a, const Covec& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
}

mpz_class floor_sqrt_bound(const Rat& t) {
  // an integer >= sqrt(t) for t >= 0
  mpz_class f = t.floor();
  if (f < 0) return 0;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r + 1;
}

/// Exact Fincke–Pohst over the quadratic form x^T G x.
std::vector<Covec> enumerate(const ShellConditions& c, const geom::Metric& metric, const Rat& bound, bool shell) {
  const std::size_t k = c.basis.size();
  const std::size_t n = metric.dim();
  if (!c.offset.coords().empty() && !exact::vec_is_zero(c.offset.coords()))
    throw DomainError("shell enumeration: nonzero offsets are not supported");
  std::vector<RatVector> fv;
  for (const auto& b : c.basis) fv.push_back(metric.frame_values(b));
  RatMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = exact::vec_dot(fv[i], fv[j]);
  // G = U^T D U, U unit upper triangular
  std::vector<Rat> d(k);
  RatMatrix u = RatMatrix::identity(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rat di = gram(i, i);
    for (std::size_t m = 0; m < i; ++m) di -= d[m] * u(m, i) * u(m, i);
    if (di <= Rat(0)) throw DomainError("shell enumeration: metric form is not positive definite");
    d[i] = di;
    for (std::size_t j = i + 1; j < k; ++j) {
      Rat x = gram(i, j);
      for (std::size_t m = 0; m < i; ++m) x -= d[m] * u(m, i) * u(m, j);
      u(i, j) = x / di;
    }
  }
  std::vector<Covec> out;
  std::vector<Rat> x(k);
  std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t level, const Rat& used) {
    const std::size_t i = level - 1;
    Rat center;
    for (std::size_t j = i + 1; j < k; ++j) center += u(i, j) * x[j];
    const Rat room = (bound - used) / d[i];
    const mpz_class s = floor_sqrt_bound(room);
    const mpz_class lo = (-center).floor() - s, hi = -center.floor() + s;
    for (mpz_class xi = lo; xi <= hi; ++xi) {
      const Rat y = Rat(xi, 1) + center;
      const Rat step = d[i] * y * y;
      if (used + step > bound) continue;
      x[i] = Rat(xi, 1);
      if (i == 0) {
        const Rat total = used + step;
        if (shell && total != bound) continue;
        Covec t = Covec::zero(n);
        for (std::size_t m = 0; m < k; ++m)
          if (!x[m].is_zero()) t = t + x[m] * c.basis[m];
        out.push_back(std::move(t));
      } else {
        rec(i, used + step);
      }
    }
    x[i] = Rat(0);
  };
  if (k == 0) {
    if (!shell || bound.is_zero()) out.push_back(Covec::zero(n));
    return out;
  }
  rec(k, Rat(0));
  std::sort(out.begin(), out.end(), [&](const Covec& a, const Covec& b) {
    const Rat na = metric.norm2(a), nb = metric.norm2(b);
    if (na != nb) return na < nb;
    return covec_less(a, b);
  });
  return out;
}

}  // namespace

std::vector<Covec> enumerate_shell(const ShellConditions& c, const geom::Metric& metric, const Rat& s2) {
  if (s2 < Rat(0)) return {};
  return enumerate(c, metric, s2, true);
}

std::vector<Covec> enumerate_ball(const ShellConditions& c, const geom::Metric& metric, const Rat& s2_max) {
  if (s2_max < Rat(0)) return {};
  return enumerate(c, metric, s2_max, false);
}

std::vector<double> numeric_spectrum(const CharacterMatrix& e, double pi_value, double tolerance) {
  if (!(tolerance > 0)) throw DomainError("numeric_spectrum: tolerance must be positive");
  const auto n = static_cast<Eigen::Index>(e.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l) m(k, l) = e.e(k, l).eval(pi_value);
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > tolerance * scale)
    throw DomainError("numeric_spectrum: specialization is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::string format_tau(const Covec& tau, const geom::Metric& metric, const std::vector<std::string>& names) {
  return metric.algebra()->format(Covec(metric.frame_values(tau)), names);
}

namespace {

struct SectorSampler {
  const rep::SectorFlag& flag;
  const lie::Quotient& q;
  std::size_t parent_dim;
  lie::VecSampler rng;

  /// Random functional on g / z in the given chain position: zero on
  /// chain[j - 1], nonzero on chain[j].
  Covec next(std::size_t j) {
    const auto& chain = flag.chain();
    const auto& n = *q.algebra;
    for (;;) {
      Covec t(rng.next(n.dim()).coords());
      for (std::size_t i = 0; i < n.dim(); ++i) {
        const std::size_t parent = q.kept[i];
        if (j > 0 && chain[j - 1].contains(lie::Vec::unit(parent_dim, parent))) t[i] = Rat(0);
      }
      const Covec lifted = q.projection.pullback(t);
      if (flag.classify(lifted) == flag.label_of(j)) return t;
    }
  }
};

bool same_record(const rep::MultiplicityRecord& a, const rep::MultiplicityRecord& b) {
  return a.occurs == b.occurs && (!a.occurs || a.multiplicity == b.multiplicity);
}

std::vector<SectorCheck> sector_checks(const DistinguishInput& in) {
  std::vector<SectorCheck> out;
  const auto& g = *in.pair.algebra();
  const std::size_t n = g.dim();
  const lie::Subspace z = g.center();
  const auto& chain = in.flag.chain();
  const lie::Quotient q = lie::quotient(g, z);
  const auto l1 = lattice::quotient_lattice(in.pair.gamma1, q);
  const auto l2 = lattice::quotient_lattice(in.pair.gamma2, q);
  SectorSampler sampler{in.flag, q, n, lie::VecSampler(in.seed, 3, 2)};
  for (std::size_t j = 0; j < chain.size(); ++j) {
    SectorCheck c;
    c.sector = in.flag.label_of(j);
    if (j == 0 && chain[0] == z && z.dim() == 1) {
      // square-integrable sector: Moore–Wolf on the full group
      c.method = "moore_wolf";
      const std::size_t w = z.pivots().front();
      bool ok = true;
      for (int v = -5; v <= 5; ++v) {
        if (v == 0) continue;
        const Covec tau = Rat(v) * Covec::unit(n, w);
        ok = ok && same_record(rep::moore_wolf_multiplicity(in.pair.gamma1, tau),
                               rep::moore_wolf_multiplicity(in.pair.gamma2, tau));
        ++c.samples;
      }
      c.verified = ok;
      c.detail = ok ? "multiplicities equal for tau = c omega*, c = +-1..+-5" : "multiplicities differ";
      out.push_back(std::move(c));
      continue;
    }
    // quotient sectors: pointwise Pesce comparison on sampled functionals
    std::vector<Covec> taus;
    for (std::size_t s = 0; s < in.samples; ++s) taus.push_back(sampler.next(j));
    std::size_t agree = 0;
    for (const auto& t : taus)
      agree += same_record(rep::pesce_occurrence_and_multiplicity(*q.algebra, l1.log_lattice, t),
                           rep::pesce_occurrence_and_multiplicity(*q.algebra, l2.log_lattice, t));
    c.samples = taus.size();
    if (agree == taus.size()) {
      c.method = "pesce_pointwise";
      c.verified = true;
      c.detail = "occurrence and multiplicity agree at every sampled functional";
    } else if (in.pairing && c.sector == "II") {
      c.method = "orbit_pairing";
      const auto rep = rep::orbit_pairing_mod4(in.pair, in.flag, *in.pairing, taus, c.sector);
      c.verified = rep.all_ok;
      c.detail = std::to_string(taus.size() - agree) +
                 " sampled functionals differ pointwise; every one is paired with a distinct orbit of equal "
                 "multiplicity (representation-level pairing only; eigenvalue multiplicities mod 4 not computed)";
      if (!rep.all_ok) c.detail = "orbit pairing failed";
    } else {
      c.method = "pesce_pointwise";
      c.verified = false;
      c.detail = std::to_string(taus.size() - agree) + " sampled functionals differ and no pairing is registered";
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<TauOutcome> outcomes(const std::vector<Covec>& shell, const geom::Metric& metric,
                                 const EigenCandidate& lambda, std::size_t& multiplicity) {
  std::vector<TauOutcome> out;
  multiplicity = 0;
  for (const auto& t : shell) {
    const auto e = assemble_E(metric, CharacterWave::make(*metric.algebra(), t));
    TauOutcome o{t, is_eigenvalue(e, lambda), 0};
    if (o.det_zero) o.nullity = nullity_at(e, lambda).nullity;
    multiplicity += o.nullity;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

DistinguishReport distinguish_pair(const DistinguishInput& in) {
  DistinguishReport r;
  r.example = in.pair.id;
  r.lambda = in.lambda;
  r.s2_target = in.s2_target;
  const auto& metric = in.pair.metric;
  r.shell1 = enumerate_shell(character_conditions(in.pair.gamma1), metric, in.s2_target);
  r.shell2 = enumerate_shell(character_conditions(in.pair.gamma2), metric, in.s2_target);
  r.per_tau1 = outcomes(r.shell1, metric, in.lambda, r.multiplicity1);
  r.per_tau2 = outcomes(r.shell2, metric, in.lambda, r.multiplicity2);
  r.sector_checks = sector_checks(in);
  const bool sectors_ok = std::all_of(r.sector_checks.begin(), r.sector_checks.end(),
                                      [](const SectorCheck& c) { return c.verified; });
  r.distinguished = r.multiplicity1 != r.multiplicity2 && sectors_ok;
  r.verdict = "lambda = " + in.lambda.label + ": multiplicity " + std::to_string(r.multiplicity1) + " vs " +
              std::to_string(r.multiplicity2) + " -> ";
  if (r.distinguished) r.verdict += "not one-form isospectral";
  else if (r.multiplicity1 != r.multiplicity2) r.verdict += "character sectors differ; other sectors unverified";
  else r.verdict += "not distinguished";
  return r;
}

nlohmann::json DistinguishReport::to_json(const DistinguishInput& in) const {
  const auto& metric = in.pair.metric;
  const auto& names = in.frame_dual_names;
  auto shell_json = [&](const std::vector<Covec>& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& t : s) a.push_back(format_tau(t, metric, names));
    return a;
  };
  auto per_tau_json = [&](const char* which, const std::vector<TauOutcome>& v, nlohmann::json& out) {
    for (const auto& o : v)
      out.push_back({{"lattice", which},
                     {"tau", format_tau(o.tau, metric, names)},
                     {"det_zero", o.det_zero},
                     {"nullity", o.nullity}});
  };
  nlohmann::json per_tau = nlohmann::json::array();
  per_tau_json("gamma1", per_tau1, per_tau);
  per_tau_json("gamma2", per_tau2, per_tau);
  nlohmann::json sectors = nlohmann::json::array();
  for (const auto& c : sector_checks)
    sectors.push_back({{"sector", c.sector},
                       {"method", c.method},
                       {"samples", c.samples},
                       {"verified", c.verified},
                       {"detail", c.detail}});
  return {{"example", example},
          {"lambda", lambda.to_json()},
          {"s2_target", s2_target.str()},
          {"shells", {{"gamma1", shell_json(shell1)}, {"gamma2", shell_json(shell2)}}},
          {"per_tau", per_tau},
          {"multiplicity", {{"gamma1", multiplicity1}, {"gamma2", multiplicity2}}},
          {"sector_checks", sectors},
          {"seed", in.seed},
          {"samples", in.samples},
          {"verdict", verdict}};
}

}  // namespace nilspec::oneform
