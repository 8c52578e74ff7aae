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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace parkfn {

// All counting is exact. Counts use BigInt, volumes and polynomial
// coefficients use Rational; no floating point anywhere in the core.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Canonical rational text: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) {
    return numerator(x).str();
  }
  return numerator(x).str() + "/" + denominator(x).str();
}

// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

BigInt factorial(int n);

}  // namespace parkfn
