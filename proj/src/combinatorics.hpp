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

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace parkfn {

// Default size guard for exhaustive enumerations (permutations, parking
// functions, trees, strips). Callers may raise it explicitly.
inline constexpr int kDefaultEnumerationCap = 8;

// Composition of n into positive parts.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const { return sum_; }
  int length() const { return static_cast<int>(parts_.size()); }

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// Composition of n allowing zero parts.
class WeakComposition {
 public:
  explicit WeakComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const { return sum_; }
  int length() const { return static_cast<int>(parts_.size()); }

  bool operator==(const WeakComposition&) const = default;
  bool operator<(const WeakComposition& other) const { return parts_ < other.parts_; }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// A subset of {1, ..., n-1} marking descent positions of length-n words.
class DescentSet {
 public:
  DescentSet(int n, std::vector<int> members);

  int n() const { return n_; }
  const std::vector<int>& members() const { return members_; }  // sorted
  bool contains(int i) const;

  bool operator==(const DescentSet&) const = default;

 private:
  int n_ = 0;
  std::vector<int> members_;
};

// Non-decreasing sequence of positive integers (a_1, ..., a_n).
class AVector {
 public:
  explicit AVector(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int entry(int i) const { return entries_[i - 1]; }  // 1-based
  int max_entry() const { return entries_.back(); }
  int entry_sum() const { return sum_; }

  bool operator==(const AVector&) const = default;

 private:
  std::vector<int> entries_;
  int sum_ = 0;
};

// The composition (1, run lengths of the two-letter word u_S). Requires
// 1 not in S so the first run is nonempty.
Composition comp_of_subset(int n, const DescentSet& s);

// gamma_1 ones followed by gamma_2 twos, and so on.
AVector a_of_composition(const Composition& gamma);

// { i in [n-1] : a_{i+1} is odd }.
DescentSet subset_of_avector(const AVector& a);

// Descent positions of a permutation of [n].
DescentSet descent_set(const std::vector<int>& perm);

// n! / (alpha_1! alpha_2! ...); parts must sum to n.
BigInt multinomial(int n, const WeakComposition& alpha);

// Number of permutations of [n] with descent set exactly S, by
// inclusion-exclusion over subsets of S.
BigInt beta(int n, const DescentSet& s);

// Exhaustive oracle for beta; scans all n! permutations.
BigInt beta_bruteforce(int n, const DescentSet& s, int cap = kDefaultEnumerationCap);

// Number of alternating permutations s_1 < s_2 > s_3 < ... of [n],
// via the boustrophedon recurrence.
BigInt euler_number(int n);

// Weak compositions alpha of n with len(gamma) parts whose prefix sums
// dominate gamma's prefix sums. gamma itself may have zero parts.
// Emission order is lexicographically increasing on the parts.
template <typename F>
void for_each_kappa(const std::vector<int>& gamma, F&& fn) {
  const int k = static_cast<int>(gamma.size());
  if (k == 0) return;
  std::vector<int> prefix(k);
  int running = 0;
  for (int i = 0; i < k; ++i) {
    if (gamma[i] < 0) throw std::invalid_argument("kappa: negative part in gamma");
    running += gamma[i];
    prefix[i] = running;
  }
  const int n = running;
  std::vector<int> alpha(k, 0);
  // Recursive descent; the last slot takes the full remainder.
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == k - 1) {
      alpha[pos] = n - used;
      fn(const_cast<const std::vector<int>&>(alpha));
      return;
    }
    const int low = std::max(0, prefix[pos] - used);
    for (int v = low; v <= n - used; ++v) {
      alpha[pos] = v;
      self(self, pos + 1, used + v);
    }
  };
  rec(rec, 0, 0);
}

std::vector<WeakComposition> kappa_list(const Composition& gamma);
std::vector<WeakComposition> kappa_list(const WeakComposition& gamma);

// Visits permutations of [n] in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& fn, int cap = kDefaultEnumerationCap) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  if (n > cap) {
    throw CapExceededError("permutation enumeration of size " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  do {
    fn(const_cast<const std::vector<int>&>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace parkfn
