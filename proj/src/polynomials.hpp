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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"

namespace parkfn {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// Coefficient vector is always normalized (no trailing zero coefficients).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coefficients);

  static UniPoly constant(BigInt c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  BigInt coefficient(int exponent) const;
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  void add_term(int exponent, const BigInt& c);

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;
  BigInt at_minus_one() const { return evaluate(BigInt(-1)); }

  // Coefficient reversal in the given degree: q^d * p(1/q). Requires
  // d >= degree().
  UniPoly reversed(int d) const;

  // Ascending-degree text, e.g. "2 + q" or "1 + 2*q + q^3".
  std::string to_string(std::string_view var = "q") const;

  bool operator==(const UniPoly&) const = default;

 private:
  void normalize();

  std::vector<BigInt> coefficients_;
};

// Sparse multivariate polynomial over exact rationals. The variable list is
// fixed at construction; exponent vectors index into it. Terms are kept in a
// map ordered lexicographically on exponent vectors, which doubles as the
// canonical serialization order.
class MultiPoly {
 public:
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);

  const std::vector<std::string>& variables() const { return variables_; }
  int variable_index(const std::string& name) const;  // throws if unknown
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  Rational coefficient(const std::vector<int>& exponents) const;

  void add_term(const std::vector<int>& exponents, const Rational& c);

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator*(const Rational& scalar) const;

  // Definite integral over [0, upper] in the named variable. The upper limit
  // is a polynomial that must not contain the integration variable.
  MultiPoly integrate_definite(const std::string& var, const MultiPoly& upper) const;

  // Substitutes one variable by a polynomial over the same variable list.
  MultiPoly substitute(const std::string& var, const MultiPoly& replacement) const;

  // Partial numeric substitution; unmentioned variables survive.
  MultiPoly substitute(const std::map<std::string, Rational>& assignment) const;

  // Total evaluation; throws if any variable with nonzero exponent is
  // missing from the assignment.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  // Value of a polynomial with no remaining variables.
  Rational constant_value() const;

  // Removes a variable from the list; it must not appear in any term.
  MultiPoly without_variable(const std::string& var) const;

  bool depends_on(const std::string& var) const;

  // Canonical text: terms in ascending lexicographic exponent order,
  // "c * v1^e1 v2 ..." with unit exponents and zero-exponent factors omitted.
  std::string to_string() const;

  bool operator==(const MultiPoly&) const = default;

 private:
  std::vector<std::string> variables_;
  std::map<std::vector<int>, Rational> terms_;
};

}  // namespace parkfn
