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

#include <memory>
#include <string>

#include "nilspec/exactnum/unipoly.hpp"

namespace nilspec::exact {

/// Shared modulus q(p) of Q(i)[p][s]/(s^2 - q).  Validated on construction:
/// real rational coefficients, degree >= 1, squarefree (so s is not in Q(i)(p)
/// and the ring is an integral domain).
class QuadModulus {
 public:
  explicit QuadModulus(UniPoly q);
  const UniPoly& q() const { return q_; }
  friend bool operator==(const QuadModulus& a, const QuadModulus& b) {
    return a.q_ == b.q_;
  }

 private:
  UniPoly q_;
};

using ModulusPtr = std::shared_ptr<const QuadModulus>;

ModulusPtr make_modulus(UniPoly q);
/// The modulus q = p, used when s never appears (b = 0 throughout).
ModulusPtr trivial_modulus();

/// a(p) + b(p) s with s^2 = q(p).  Mixing different moduli throws
/// ModulusMismatch.
class QuadExtElem {
 public:
  QuadExtElem(UniPoly a, UniPoly b, ModulusPtr m);
  explicit QuadExtElem(ModulusPtr m) : QuadExtElem(UniPoly(), UniPoly(), std::move(m)) {}

  static QuadExtElem s(ModulusPtr m) { return {UniPoly(), UniPoly(1), std::move(m)}; }

  const UniPoly& a() const { return a_; }
  const UniPoly& b() const { return b_; }
  const ModulusPtr& modulus() const { return m_; }

  /// Zero iff both components vanish identically.
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// a - b s.
  QuadExtElem conj_s() const { return {a_, -b_, m_}; }
  /// a^2 - b^2 q, an element of Q(i)[p].
  UniPoly norm() const;

  std::string str() const;

  QuadExtElem operator-() const { return {-a_, -b_, m_}; }
  QuadExtElem& operator+=(const QuadExtElem& o);
  QuadExtElem& operator-=(const QuadExtElem& o);
  QuadExtElem& operator*=(const QuadExtElem& o);

  friend QuadExtElem operator+(QuadExtElem x, const QuadExtElem& y) { return x += y; }
  friend QuadExtElem operator-(QuadExtElem x, const QuadExtElem& y) { return x -= y; }
  friend QuadExtElem operator*(QuadExtElem x, const QuadExtElem& y) { return x *= y; }
  friend bool operator==(const QuadExtElem& x, const QuadExtElem& y);

 private:
  void check_same(const QuadExtElem& o) const;
  UniPoly a_, b_;
  ModulusPtr m_;
};

bool quadext_zero_test(const QuadExtElem& x);
/// Exact quotient in the integral domain; throws InternalError otherwise.
QuadExtElem divexact(const QuadExtElem& x, const QuadExtElem& y);

inline QuadExtElem zero_like(const QuadExtElem& x) { return QuadExtElem(x.modulus()); }
inline QuadExtElem one_like(const QuadExtElem& x) { return {UniPoly(1), UniPoly(), x.modulus()}; }
inline bool is_zero(const QuadExtElem& x) { return x.is_zero(); }

template <class T>
T zero_like(const T&) { return T(); }
template <class T>
T one_like(const T&) { return T(1); }
template <class T>
bool is_zero(const T& x) {
  if constexpr (requires { x.is_zero(); }) return x.is_zero();
  else return x == 0;
}

}  // namespace nilspec::exact
