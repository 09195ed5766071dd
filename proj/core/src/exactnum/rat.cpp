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
#include "nilspec/exactnum/rat.hpp"

#include "nilspec/error.hpp"

namespace nilspec::exact {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view n = text.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(n) || !valid_integer_text(d) || d[0] == '-')
    throw InputError("malformed rational '" + std::string(text) + "'");
  mpz_class den = parse_integer(d);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(n), den);
}

Rat Rat::inv() const {
  if (is_zero()) throw DomainError("Rat: inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat perfect_square_root(const Rat& x) {
  if (x.sign() < 0) throw InternalError("perfect_square_root: negative input " + x.str());
  mpz_class n = x.num(), d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    throw InternalError("perfect_square_root: " + x.str() + " is not a rational square");
  return Rat(sqrt(n), sqrt(d));
}

Rat pow(const Rat& x, unsigned e) {
  Rat r(1), b = x;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

}  // namespace nilspec::exact
