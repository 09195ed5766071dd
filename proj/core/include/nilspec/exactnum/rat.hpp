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

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace nilspec::exact {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.  Thin value wrapper around mpq_class.
class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q".  Throws InputError on malformed text or q = 0.
  static Rat parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat abs() const { return Rat(::abs(v_)); }
  Rat inv() const;
  mpz_class floor() const;
  double to_double() const { return v_.get_d(); }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// r >= 0 with r*r == x; throws InternalError when x is not a rational square.
Rat perfect_square_root(const Rat& x);

/// Integer power, exponent >= 0.
Rat pow(const Rat& x, unsigned e);

inline Rat divexact(const Rat& a, const Rat& b) { return a / b; }

}  // namespace nilspec::exact
