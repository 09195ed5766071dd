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
#include "nilspec/exactnum/unipoly.hpp"

#include "nilspec/error.hpp"

namespace nilspec::exact {

UniPoly::UniPoly(GaussRat c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::p() { return monomial(GaussRat(1), 1); }

UniPoly UniPoly::monomial(GaussRat c, unsigned k) {
  if (c.is_zero()) return {};
  std::vector<GaussRat> v(k + 1);
  v[k] = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussRat& UniPoly::lead() const {
  if (c_.empty()) throw DomainError("UniPoly: leading coefficient of zero");
  return c_.back();
}

bool UniPoly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

UniPoly UniPoly::conj() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = c.conj();
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<GaussRat> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussRat(Rat(static_cast<long>(k))));
  return UniPoly(std::move(d));
}

std::complex<double> UniPoly::eval(double p) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * p + std::complex<double>(it->re().to_double(), it->im().to_double());
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const GaussRat& c = c_[k];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool compound = !c.re().is_zero() && !c.im().is_zero();
    if (compound) cs = "(" + cs + ")";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    if (k == 0) term = cs;
    else if (cs == "1") term = mono;
    else if (cs == "-1") term = "-" + mono;
    else term = cs + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("UniPoly: division by zero polynomial");
  std::vector<GaussRat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<GaussRat> quo(a.degree() - db + 1);
  const GaussRat inv_lead = b.lead().inv();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k].is_zero()) continue;
    GaussRat f = rem[k] * inv_lead;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly divexact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("UniPoly: inexact division");
  return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * UniPoly(a.lead().inv());
}

bool is_squarefree(const UniPoly& a) {
  if (a.is_zero()) return false;
  return gcd(a, a.derivative()).degree() == 0;
}

}  // namespace nilspec::exact
