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

#include "combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace parkfn {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    sum_ += p;
  }
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("weak composition needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("weak composition parts must be non-negative");
    sum_ += p;
  }
}

DescentSet::DescentSet(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n_ < 1) throw std::invalid_argument("descent set requires n >= 1");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > n_ - 1) {
      throw std::invalid_argument("descent set member outside [n-1]");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw std::invalid_argument("duplicate descent set member");
    }
  }
}

bool DescentSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

AVector::AVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("bound vector must be nonempty");
  int prev = 1;
  for (int e : entries_) {
    if (e < 1) throw std::invalid_argument("bound vector entries must be positive");
    if (e < prev) throw std::invalid_argument("bound vector must be non-decreasing");
    prev = e;
    sum_ += e;
  }
}

Composition comp_of_subset(int n, const DescentSet& s) {
  if (s.n() != n) throw std::invalid_argument("descent set size mismatch");
  if (s.contains(1)) throw std::invalid_argument("comp_of_subset requires 1 not in S");
  // Run lengths of the word u_1 ... u_{n-1}, u_i = 'b' iff i in S.
  std::vector<int> parts{1};
  int run = 0;
  bool run_in_s = false;  // the first run consists of 'a' letters since 1 not in S
  for (int i = 1; i <= n - 1; ++i) {
    const bool in_s = s.contains(i);
    if (run == 0 || in_s == run_in_s) {
      ++run;
      run_in_s = in_s;
    } else {
      parts.push_back(run);
      run = 1;
      run_in_s = in_s;
    }
  }
  if (run > 0) parts.push_back(run);
  return Composition(std::move(parts));
}

AVector a_of_composition(const Composition& gamma) {
  std::vector<int> entries;
  entries.reserve(gamma.sum());
  for (int level = 1; level <= gamma.length(); ++level) {
    for (int c = 0; c < gamma.parts()[level - 1]; ++c) entries.push_back(level);
  }
  return AVector(std::move(entries));
}

DescentSet subset_of_avector(const AVector& a) {
  std::vector<int> members;
  for (int i = 1; i <= a.size() - 1; ++i) {
    if (a.entry(i + 1) % 2 != 0) members.push_back(i);
  }
  return DescentSet(a.size(), std::move(members));
}

DescentSet descent_set(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of [n]");
    seen[v] = true;
  }
  std::vector<int> members;
  for (int i = 1; i <= n - 1; ++i) {
    if (perm[i - 1] > perm[i]) members.push_back(i);
  }
  return DescentSet(n, std::move(members));
}

BigInt multinomial(int n, const WeakComposition& alpha) {
  if (alpha.sum() != n) throw std::invalid_argument("multinomial: parts must sum to n");
  BigInt result = factorial(n);
  for (int p : alpha.parts()) result /= factorial(p);
  return result;
}

namespace {

// Permutations with descent set contained in T, where T is encoded as the
// sorted positions t_1 < ... < t_j: the multinomial over (t_1, t_2-t_1, ..., n-t_j).
BigInt descents_within(int n, const std::vector<int>& t) {
  std::vector<int> parts;
  int prev = 0;
  for (int pos : t) {
    parts.push_back(pos - prev);
    prev = pos;
  }
  parts.push_back(n - prev);
  return multinomial(n, WeakComposition(std::move(parts)));
}

}  // namespace

BigInt beta(int n, const DescentSet& s) {
  if (s.n() != n) throw std::invalid_argument("descent set size mismatch");
  const auto& members = s.members();
  const int m = static_cast<int>(members.size());
  BigInt total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(members[i]);
    }
    const BigInt term = descents_within(n, subset);
    if ((m - static_cast<int>(subset.size())) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt beta_bruteforce(int n, const DescentSet& s, int cap) {
  if (s.n() != n) throw std::invalid_argument("descent set size mismatch");
  BigInt count = 0;
  for_each_permutation(
      n,
      [&](const std::vector<int>& perm) {
        if (descent_set(perm) == s) ++count;
      },
      cap);
  return count;
}

BigInt euler_number(int n) {
  if (n < 0) throw std::invalid_argument("euler_number requires n >= 0");
  if (n == 0) return 1;
  // Seidel-Entringer triangle: row[k] = row[k-1] + prev[n-k], answer at row[n].
  std::vector<BigInt> prev{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> row(m + 1);
    row[0] = 0;
    for (int k = 1; k <= m; ++k) {
      row[k] = row[k - 1] + prev[m - k];
    }
    prev = std::move(row);
  }
  return prev[n];
}

std::vector<WeakComposition> kappa_list(const Composition& gamma) {
  std::vector<WeakComposition> out;
  for_each_kappa(gamma.parts(), [&](const std::vector<int>& alpha) {
    out.push_back(WeakComposition(alpha));
  });
  return out;
}

std::vector<WeakComposition> kappa_list(const WeakComposition& gamma) {
  std::vector<WeakComposition> out;
  for_each_kappa(gamma.parts(), [&](const std::vector<int>& alpha) {
    out.push_back(WeakComposition(alpha));
  });
  return out;
}

}  // namespace parkfn
