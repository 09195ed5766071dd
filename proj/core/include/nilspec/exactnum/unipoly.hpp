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

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "nilspec/exactnum/gauss.hpp"

namespace nilspec::exact {

/// Univariate polynomial in p over Q(i).  coeffs()[k] multiplies p^k; the
/// top coefficient is never zero (the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(GaussRat c);  // NOLINT(implicit)
  UniPoly(Rat c) : UniPoly(GaussRat(std::move(c))) {}  // NOLINT(implicit)
  template <std::integral I>
  UniPoly(I c) : UniPoly(GaussRat(c)) {}  // NOLINT(implicit)
  explicit UniPoly(std::vector<GaussRat> coeffs);

  /// The indeterminate p.
  static UniPoly p();
  static UniPoly monomial(GaussRat c, unsigned k);

  const std::vector<GaussRat>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  GaussRat coeff(unsigned k) const { return k < c_.size() ? c_[k] : GaussRat(); }
  const GaussRat& lead() const;
  /// True when every coefficient is a real rational.
  bool is_real() const;

  UniPoly conj() const;
  UniPoly derivative() const;
  std::complex<double> eval(double p) const;

  std::string str(const std::string& var = "p") const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<GaussRat> c_;
};

/// Quotient and remainder over the field Q(i); throws DomainError on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// a / b, throwing InternalError when the division leaves a remainder.
UniPoly divexact(const UniPoly& a, const UniPoly& b);
/// Monic gcd (0 when both are 0).
UniPoly gcd(UniPoly a, UniPoly b);
bool is_squarefree(const UniPoly& a);

}  // namespace nilspec::exact
