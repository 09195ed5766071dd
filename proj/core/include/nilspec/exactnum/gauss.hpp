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

#include <string>

#include "nilspec/exactnum/rat.hpp"

namespace nilspec::exact {

/// re + im*i with rational parts.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT(implicit)
  template <std::integral I>
  GaussRat(I v) : re_(v) {}  // NOLINT(implicit)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRat conj() const { return {re_, -im_}; }
  Rat norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inv() const;

  std::string str() const;

  GaussRat operator-() const { return {-re_, -im_}; }
  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inv(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat&, const GaussRat&) = default;

 private:
  Rat re_, im_;
};

inline GaussRat divexact(const GaussRat& a, const GaussRat& b) { return a / b; }

}  // namespace nilspec::exact
