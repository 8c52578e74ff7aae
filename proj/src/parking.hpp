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

#include <vector>

#include "combinatorics.hpp"
#include "polynomials.hpp"

namespace parkfn {

// A sequence whose increasing rearrangement is bounded entrywise by a
// non-decreasing positive vector a.
class AParkingFunction {
 public:
  AParkingFunction(std::vector<int> values, AVector bound);

  const std::vector<int>& values() const { return values_; }
  const AVector& bound() const { return bound_; }
  int size() const { return static_cast<int>(values_.size()); }
  int value_sum() const { return sum_; }

  bool operator==(const AParkingFunction&) const = default;

 private:
  std::vector<int> values_;
  AVector bound_;
  int sum_ = 0;
};

// Membership test: sorted(b)_i <= a_i for all i. Throws on length mismatch
// or non-positive entries.
bool is_a_parking(const std::vector<int>& b, const AVector& a);

namespace detail {

// Checks that the sorted prefix can still be completed to a valid parking
// function by appending 1's: sorted_prefix[i] <= a[(n - m) + i].
inline bool prefix_feasible(const std::vector<int>& sorted_prefix, int prefix_size,
                            const AVector& a) {
  const int n = a.size();
  for (int i = 0; i < prefix_size; ++i) {
    if (sorted_prefix[i] > a.entry(n - prefix_size + i + 1)) return false;
  }
  return true;
}

}  // namespace detail

// Visits every member of P_a exactly once in lexicographic order. Values are
// tried in ascending order with feasibility pruning, so the traversal touches
// only O(|P_a| * n) nodes.
template <typename F>
void for_each_parking(const AVector& a, F&& fn, int cap = kDefaultEnumerationCap) {
  const int n = a.size();
  if (n > cap) {
    throw CapExceededError("parking enumeration of length " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
  }
  std::vector<int> b(n);
  std::vector<int> sorted(n);
  const int vmax = a.max_entry();
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      fn(const_cast<const std::vector<int>&>(b));
      return;
    }
    for (int v = 1; v <= vmax; ++v) {
      // Insert v into the sorted prefix.
      int at = pos;
      while (at > 0 && sorted[at - 1] > v) {
        sorted[at] = sorted[at - 1];
        --at;
      }
      sorted[at] = v;
      if (!detail::prefix_feasible(sorted, pos + 1, a)) {
        // Undo and stop: larger v only makes the sorted prefix larger.
        for (int i = at; i < pos; ++i) sorted[i] = sorted[i + 1];
        break;
      }
      b[pos] = v;
      self(self, pos + 1);
      for (int i = at; i < pos; ++i) sorted[i] = sorted[i + 1];
    }
  };
  rec(rec, 0);
}

std::vector<std::vector<int>> parking_list(const AVector& a, int cap = kDefaultEnumerationCap);

// |P_a| as a sum of multinomials over the dominance cone of the run-length
// profile of a. Levels absent from a contribute zero-length runs.
BigInt count_a_parking(const AVector& a);

// Per-level multiplicity vector of the values, padded to max(a) parts.
WeakComposition content(const AParkingFunction& b);

// Run-length profile of a by level: part j counts entries equal to j.
WeakComposition level_profile(const AVector& a);

// Sum enumerator: sum over P_a of q^(b_1 + ... + b_n - n).
UniPoly sum_enumerator(const AVector& a, int cap = kDefaultEnumerationCap);

// Inversion enumerator I_n(q), from the sum enumerator of (1, 2, ..., n)
// reversed in degree n(n-1)/2.
UniPoly inversion_enumerator_via_parking(int n, int cap = kDefaultEnumerationCap);

BigInt eval_at_minus_one(const UniPoly& p);

// Right-hand side of the minus-one evaluation theorem: 0 when a_1 is even,
// else (-1)^(a_1+...+a_n-n) * beta_n({i : a_{i+1} odd}).
BigInt minus_one_prediction(const AVector& a);

}  // namespace parkfn
