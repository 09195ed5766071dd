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
#include "nilspec/exactnum/quadext.hpp"

#include "nilspec/error.hpp"

namespace nilspec::exact {

QuadModulus::QuadModulus(UniPoly q) : q_(std::move(q)) {
  if (q_.degree() < 1) throw DomainError("quadratic modulus must have degree >= 1");
  if (!q_.is_real()) throw DomainError("quadratic modulus must have rational coefficients");
  if (!is_squarefree(q_)) throw DomainError("quadratic modulus must be squarefree");
}

ModulusPtr make_modulus(UniPoly q) { return std::make_shared<const QuadModulus>(std::move(q)); }

ModulusPtr trivial_modulus() {
  static const ModulusPtr m = make_modulus(UniPoly::p());
  return m;
}

QuadExtElem::QuadExtElem(UniPoly a, UniPoly b, ModulusPtr m)
    : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
  if (!m_) throw DomainError("QuadExtElem: missing modulus");
}

void QuadExtElem::check_same(const QuadExtElem& o) const {
  if (m_ != o.m_ && !(*m_ == *o.m_))
    throw ModulusMismatch("quadratic extension modulus mismatch: " + m_->q().str() +
                          " vs " + o.m_->q().str());
}

UniPoly QuadExtElem::norm() const { return a_ * a_ - b_ * b_ * m_->q(); }

std::string QuadExtElem::str() const {
  if (b_.is_zero()) return a_.str();
  return "(" + a_.str() + ")+(" + b_.str() + ")*s";
}

QuadExtElem& QuadExtElem::operator+=(const QuadExtElem& o) {
  check_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExtElem& QuadExtElem::operator-=(const QuadExtElem& o) {
  check_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExtElem& QuadExtElem::operator*=(const QuadExtElem& o) {
  check_same(o);
  UniPoly na = a_ * o.a_;
  UniPoly nb = a_ * o.b_ + b_ * o.a_;
  if (!b_.is_zero() && !o.b_.is_zero()) na += b_ * o.b_ * m_->q();
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
  x.check_same(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

bool quadext_zero_test(const QuadExtElem& x) { return x.is_zero(); }

QuadExtElem divexact(const QuadExtElem& x, const QuadExtElem& y) {
  if (y.is_zero()) throw DomainError("QuadExtElem: division by zero");
  if (y.b().is_zero()) {
    return {divexact(x.a(), y.a()), divexact(x.b(), y.a()), x.modulus()};
  }
  QuadExtElem num = x * y.conj_s();
  UniPoly n = y.norm();
  return {divexact(num.a(), n), divexact(num.b(), n), x.modulus()};
}

}  // namespace nilspec::exact
