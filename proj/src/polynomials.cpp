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

#include "polynomials.hpp"

#include <algorithm>
#include <sstream>

namespace parkfn {

UniPoly::UniPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  normalize();
}

UniPoly UniPoly::constant(BigInt c) { return UniPoly(std::vector<BigInt>{std::move(c)}); }

void UniPoly::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt UniPoly::coefficient(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[exponent];
}

void UniPoly::add_term(int exponent, const BigInt& c) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent >= static_cast<int>(coefficients_.size())) coefficients_.resize(exponent + 1);
  coefficients_[exponent] += c;
  normalize();
}

BigInt UniPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

UniPoly UniPoly::reversed(int d) const {
  if (d < degree()) throw std::invalid_argument("reversal degree below polynomial degree");
  std::vector<BigInt> out(d + 1);
  for (int i = 0; i < static_cast<int>(coefficients_.size()); ++i) {
    out[d - i] = coefficients_[i];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = 0; e <= degree(); ++e) {
    const BigInt& c = coefficients_[e];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << var;
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    for (std::size_t j = i + 1; j < variables_.size(); ++j) {
      if (variables_[i] == variables_[j]) {
        throw std::invalid_argument("duplicate variable name: " + variables_[i]);
      }
    }
  }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(std::vector<int>(p.variables_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  std::vector<int> exps(p.variables_.size(), 0);
  exps[p.variable_index(name)] = 1;
  p.add_term(exps, Rational(1));
  return p;
}

int MultiPoly::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown variable: " + name);
}

Rational MultiPoly::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Rational& c) {
  if (exponents.size() != variables_.size()) {
    throw std::invalid_argument("exponent vector length mismatch");
  }
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_same_variables(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) {
    throw std::invalid_argument("operands have different variable lists");
  }
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  require_same_variables(*this, other);
  MultiPoly out = *this;
  for (const auto& [exps, c] : other.terms_) out.add_term(exps, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  require_same_variables(*this, other);
  MultiPoly out = *this;
  for (const auto& [exps, c] : other.terms_) out.add_term(exps, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  require_same_variables(*this, other);
  MultiPoly out(variables_);
  std::vector<int> exps(variables_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      out.add_term(exps, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& scalar) const {
  MultiPoly out(variables_);
  if (scalar == 0) return out;
  for (const auto& [exps, c] : terms_) out.terms_.emplace(exps, c * scalar);
  return out;
}

MultiPoly MultiPoly::integrate_definite(const std::string& var, const MultiPoly& upper) const {
  require_same_variables(*this, upper);
  const int vi = variable_index(var);
  if (upper.depends_on(var)) {
    throw std::invalid_argument("upper limit depends on integration variable " + var);
  }
  // Group by the exponent of var: integral of c * v^e * rest over [0, upper]
  // is c/(e+1) * upper^(e+1) * rest. Powers of the upper limit are built
  // incrementally in ascending exponent order.
  std::map<int, MultiPoly> by_exponent;
  for (const auto& [exps, c] : terms_) {
    const int e = exps[vi];
    std::vector<int> rest = exps;
    rest[vi] = 0;
    auto [it, inserted] = by_exponent.emplace(e, MultiPoly(variables_));
    it->second.add_term(rest, c);
  }
  MultiPoly result(variables_);
  MultiPoly upper_power = constant(variables_, Rational(1));
  int current = 0;
  for (const auto& [e, rest] : by_exponent) {
    while (current < e + 1) {
      upper_power = upper_power * upper;
      ++current;
    }
    result = result + rest * upper_power * Rational(BigInt(1), BigInt(e + 1));
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& replacement) const {
  require_same_variables(*this, replacement);
  const int vi = variable_index(var);
  std::map<int, MultiPoly> by_exponent;
  for (const auto& [exps, c] : terms_) {
    const int e = exps[vi];
    std::vector<int> rest = exps;
    rest[vi] = 0;
    auto [it, inserted] = by_exponent.emplace(e, MultiPoly(variables_));
    it->second.add_term(rest, c);
  }
  MultiPoly result(variables_);
  MultiPoly power = constant(variables_, Rational(1));
  int current = 0;
  for (const auto& [e, rest] : by_exponent) {
    while (current < e) {
      power = power * replacement;
      ++current;
    }
    result = result + rest * power;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Rational>& assignment) const {
  std::vector<int> indices;
  std::vector<Rational> values;
  for (const auto& [name, value] : assignment) {
    indices.push_back(variable_index(name));
    values.push_back(value);
  }
  MultiPoly out(variables_);
  for (const auto& [exps, c] : terms_) {
    Rational coeff = c;
    std::vector<int> rest = exps;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      for (int e = 0; e < exps[indices[i]]; ++e) coeff *= values[i];
      rest[indices[i]] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  return substitute(assignment).constant_value();
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) throw std::invalid_argument("polynomial is not constant");
  const auto& [exps, c] = *terms_.begin();
  for (int e : exps) {
    if (e != 0) throw std::invalid_argument("polynomial is not constant");
  }
  return c;
}

MultiPoly MultiPoly::without_variable(const std::string& var) const {
  const int vi = variable_index(var);
  if (depends_on(var)) {
    throw std::invalid_argument("variable still present: " + var);
  }
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (static_cast<int>(i) != vi) vars.push_back(variables_[i]);
  }
  MultiPoly out(std::move(vars));
  for (const auto& [exps, c] : terms_) {
    std::vector<int> reduced;
    reduced.reserve(exps.size() - 1);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (static_cast<int>(i) != vi) reduced.push_back(exps[i]);
    }
    out.add_term(reduced, c);
  }
  return out;
}

bool MultiPoly::depends_on(const std::string& var) const {
  const int vi = variable_index(var);
  for (const auto& [exps, c] : terms_) {
    if (exps[vi] != 0) return true;
  }
  return false;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    out << parkfn::to_string(mag);
    bool any_var = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      out << (any_var ? " " : " * ");
      any_var = true;
      out << variables_[i];
      if (exps[i] > 1) out << "^" << exps[i];
    }
  }
  return out.str();
}

}  // namespace parkfn
