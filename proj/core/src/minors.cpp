// Copyright 2026 The matroidkit Authors.
//
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

#include "matroidkit/minors.hpp"

#include <bit>
#include <string>
#include <unordered_map>

namespace matroidkit {

namespace {

using Mask = Matroid::Mask;

// Calls f on each k-subset of {0..n-1} as a mask, in lexicographic order
// of the sorted index lists. Stops early when f returns true.
template <typename F>
bool for_each_combination(int n, int k, const std::vector<int>& pool, F&& f) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << pool[i];
    if (f(m)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MinorOracle::MinorOracle(std::vector<Matroid> targets) : targets_(std::move(targets)) {
  forms_.reserve(targets_.size());
  for (const Matroid& t : targets_) forms_.push_back(canonical_form(t));
}

std::optional<MinorWitness> MinorOracle::find(const Matroid& m) const {
  for (std::size_t t = 0; t < targets_.size(); ++t) {
    if (auto w = find_one(m, t)) {
      w->target = static_cast<int>(t);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<MinorWitness> MinorOracle::find_one(const Matroid& m, std::size_t t) const {
  const Matroid& n = targets_[t];
  const int k = m.rank() - n.rank();
  const int d = m.corank() - n.corank();
  if (k < 0 || d < 0) return std::nullopt;
  const int size = m.size();
  const int s = n.size();
  const std::size_t want_bases = n.basis_count();
  const auto& table = m.rank_table();
  const Mask full = m.full_mask();

  std::vector<int> all(size);
  for (int i = 0; i < size; ++i) all[i] = i;
  std::unordered_map<std::string, bool> memo;
  std::vector<std::uint8_t> minor(std::size_t{1} << s);
  std::string key(minor.size(), '\0');
  std::vector<Mask> lifted(minor.size());
  std::optional<MinorWitness> found;

  for_each_combination(size, k, all, [&](Mask c) {
    if (table[c] != k) return false;
    std::vector<int> rest;
    for (int i = 0; i < size; ++i) {
      if (!(c & (Mask{1} << i))) rest.push_back(i);
    }
    return for_each_combination(static_cast<int>(rest.size()), d, rest, [&](Mask del) {
      const Mask keep = full & ~c & ~del;
      if (table[keep | c] != m.rank()) return false;
      std::vector<int> pos;
      for (Mask x = keep; x; x &= x - 1) pos.push_back(std::countr_zero(x));
      lifted[0] = 0;
      std::size_t bases = 0;
      for (std::size_t y = 0; y < minor.size(); ++y) {
        if (y) lifted[y] = lifted[y & (y - 1)] | (Mask{1} << pos[std::countr_zero(y)]);
        const int v = table[lifted[y] | c] - k;
        minor[y] = static_cast<std::uint8_t>(v);
        key[y] = static_cast<char>(v);
        if (v == n.rank() && std::popcount(y) == n.rank()) ++bases;
      }
      if (bases != want_bases) return false;
      auto it = memo.find(key);
      bool match;
      if (it != memo.end()) {
        match = it->second;
      } else {
        const Matroid candidate =
            MatroidBuilder::from_trusted_table(ElementSet::from_bits((1ull << s) - 1), minor);
        match = canonical_form(candidate) == forms_[t];
        memo.emplace(key, match);
      }
      if (match) found = MinorWitness{m.to_labels(c), m.to_labels(del), 0};
      return match;
    });
  });
  return found;
}

std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n) {
  return MinorOracle({n}).find(m);
}

}  // namespace matroidkit
