// Copyright 2026 The vcsp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcsp/rational.hpp"

#include <cctype>

#include "vcsp/errors.hpp"

namespace vcsp {

Rational make_rational(long num, long den) {
  if (den == 0) throw ContractError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer_text(s))
    throw ParseError("malformed number '" + std::string(s) + "'");
  std::string t(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(t, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

const Rational& ExtRational::value() const {
  if (infinite_) throw ContractError("finite value requested from infinity");
  return value_;
}

ExtRational operator+(const ExtRational& x, const ExtRational& y) {
  if (x.infinite_ || y.infinite_) return ExtRational::infinity();
  return ExtRational(Rational(x.value_ + y.value_));
}

ExtRational operator*(const ExtRational& x, const ExtRational& y) {
  if (x.infinite_ || y.infinite_) {
    const ExtRational& other = x.infinite_ ? y : x;
    if (other.is_finite() && sgn(other.value_) == 0) return ExtRational(0);
    if (other.is_finite() && sgn(other.value_) < 0)
      throw ContractError("negative multiple of infinity");
    return ExtRational::infinity();
  }
  return ExtRational(Rational(x.value_ * y.value_));
}

std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y) {
  if (x.infinite_ && y.infinite_) return std::strong_ordering::equal;
  if (x.infinite_) return std::strong_ordering::greater;
  if (y.infinite_) return std::strong_ordering::less;
  int c = cmp(x.value_, y.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const ExtRational& e) {
  return e.is_infinite() ? std::string("inf") : to_string(e.value());
}

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "inf" || text == "Infinity" || text == "infinity")
    return ExtRational::infinity();
  return ExtRational(parse_rational(text));
}

}  // namespace vcsp
