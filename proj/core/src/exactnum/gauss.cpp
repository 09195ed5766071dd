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
#include "nilspec/exactnum/gauss.hpp"

#include "nilspec/error.hpp"

namespace nilspec::exact {

GaussRat GaussRat::inv() const {
  if (is_zero()) throw DomainError("GaussRat: inverse of zero");
  Rat n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussRat::str() const {
  if (im_.is_zero()) return re_.str();
  std::string ims = im_ == Rat(1) ? "i" : (im_ == Rat(-1) ? "-i" : im_.str() + "i");
  if (re_.is_zero()) return ims;
  if (im_.sign() > 0) return re_.str() + "+" + ims;
  return re_.str() + ims;
}

}  // namespace nilspec::exact
