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

#include "parking.hpp"

#include <algorithm>

namespace parkfn {

AParkingFunction::AParkingFunction(std::vector<int> values, AVector bound)
    : values_(std::move(values)), bound_(std::move(bound)) {
  if (!is_a_parking(values_, bound_)) {
    throw std::invalid_argument("sequence is not a parking function for the given bound");
  }
  for (int v : values_) sum_ += v;
}

bool is_a_parking(const std::vector<int>& b, const AVector& a) {
  if (static_cast<int>(b.size()) != a.size()) {
    throw std::invalid_argument("sequence length does not match bound length");
  }
  for (int v : b) {
    if (v < 1) throw std::invalid_argument("parking function entries must be positive");
  }
  std::vector<int> sorted = b;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < a.size(); ++i) {
    if (sorted[i] > a.entry(i + 1)) return false;
  }
  return true;
}

std::vector<std::vector<int>> parking_list(const AVector& a, int cap) {
  std::vector<std::vector<int>> out;
  for_each_parking(a, [&](const std::vector<int>& b) { out.push_back(b); }, cap);
  return out;
}

WeakComposition level_profile(const AVector& a) {
  std::vector<int> runs(a.max_entry(), 0);
  for (int e : a.entries()) ++runs[e - 1];
  return WeakComposition(std::move(runs));
}

BigInt count_a_parking(const AVector& a) {
  const int n = a.size();
  BigInt total = 0;
  for_each_kappa(level_profile(a).parts(), [&](const std::vector<int>& alpha) {
    total += multinomial(n, WeakComposition(alpha));
  });
  return total;
}

WeakComposition content(const AParkingFunction& b) {
  std::vector<int> counts(b.bound().max_entry(), 0);
  for (int v : b.values()) ++counts[v - 1];
  return WeakComposition(std::move(counts));
}

UniPoly sum_enumerator(const AVector& a, int cap) {
  const int n = a.size();
  std::vector<BigInt> coeffs(a.entry_sum() - n + 1);
  for_each_parking(
      a,
      [&](const std::vector<int>& b) {
        int s = -n;
        for (int v : b) s += v;
        ++coeffs[s];
      },
      cap);
  return UniPoly(std::move(coeffs));
}

UniPoly inversion_enumerator_via_parking(int n, int cap) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> staircase(n);
  for (int i = 0; i < n; ++i) staircase[i] = i + 1;
  const UniPoly se = sum_enumerator(AVector(std::move(staircase)), cap);
  return se.reversed(n * (n - 1) / 2);
}

BigInt eval_at_minus_one(const UniPoly& p) { return p.at_minus_one(); }

BigInt minus_one_prediction(const AVector& a) {
  if (a.entry(1) % 2 == 0) return 0;
  const BigInt count = beta(a.size(), subset_of_avector(a));
  return ((a.entry_sum() - a.size()) % 2 == 0) ? count : -count;
}

}  // namespace parkfn
