/*
  Copyright (c) 2026 the parkfn authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "bigint.hpp"

#include <cctype>

namespace parkfn {

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_text(text)) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  BigInt d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  return Rational(BigInt(num), d);
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace parkfn
