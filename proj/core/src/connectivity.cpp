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

#include "matroidkit/connectivity.hpp"

#include <bit>
#include <stdexcept>

namespace matroidkit {

namespace {

using Mask = Matroid::Mask;

int local_lambda(const Matroid& m, Mask x) {
  return m.local_rank(x) + m.local_rank(m.full_mask() & ~x) - m.rank();
}

void require_partition(const Matroid& m, ElementSet x, ElementSet y, ElementSet of) {
  if (x.meets(y) || (x | y) != of || !(of - m.ground()).empty()) {
    throw std::invalid_argument("sets " + x.to_string() + " and " + y.to_string() +
                                " do not partition " + of.to_string());
  }
}

bool up_to(const Matroid& m, bool (*ok_side)(const Matroid&, ElementSet)) {
  if (!is_connected(m)) return false;
  for (const Separation& s : separations(m, 2)) {
    if (!ok_side(m, s.side) && !ok_side(m, s.other)) return false;
  }
  return true;
}

bool is_series_pair(const Matroid& m, ElementSet x) {
  return x.size() == 2 && m.is_cocircuit(x);
}
bool is_parallel_pair(const Matroid& m, ElementSet x) {
  return x.size() == 2 && m.is_circuit(x);
}
bool in_series_class(const Matroid& m, ElementSet x) {
  return x.size() >= 2 && (x - series_class(m, x.min())).empty();
}
bool in_parallel_class(const Matroid& m, ElementSet x) {
  return x.size() >= 2 && (x - parallel_class(m, x.min())).empty();
}
bool in_either_class(const Matroid& m, ElementSet x) {
  return in_series_class(m, x) || in_parallel_class(m, x);
}

}  // namespace

int lambda(const Matroid& m, ElementSet x) { return local_lambda(m, m.to_local(x)); }

bool is_k_separating(const Matroid& m, ElementSet x, int k) { return lambda(m, x) < k; }

bool is_exactly_k_separating(const Matroid& m, ElementSet x, int k) {
  return lambda(m, x) == k - 1;
}

bool is_k_separation(const Matroid& m, ElementSet x, int k) {
  return is_k_separating(m, x, k) && x.size() >= k && m.size() - x.size() >= k;
}

std::vector<Separation> separations(const Matroid& m, int k, bool exact_only) {
  if (k < 1) throw std::invalid_argument("separation order must be at least 1");
  std::vector<Separation> out;
  const int n = m.size();
  if (n < 2 * k) return out;
  const Mask full = m.full_mask();
  const auto& t = m.rank_table();
  for (Mask x = 1; x < full; x += 2) {
    const int sx = std::popcount(x);
    if (sx < k || n - sx < k) continue;
    const Mask y = full & ~x;
    const int lam = t[x] + t[y] - m.rank();
    if (lam >= k || (exact_only && lam != k - 1)) continue;
    Separation s;
    s.side = m.to_labels(x);
    s.other = m.to_labels(y);
    s.order = k;
    s.exact = lam == k - 1;
    if (k == 3) {
      s.vertical = t[x] >= 3 && t[y] >= 3;
      s.cyclic = (sx + t[y] - m.rank()) >= 3 && (n - sx + t[x] - m.rank()) >= 3;
    }
    out.push_back(s);
  }
  return out;
}

bool is_connected(const Matroid& m) {
  const Mask full = m.full_mask();
  for (Mask x = 1; x < full; x += 2) {
    if (local_lambda(m, x) == 0) return false;
  }
  return true;
}

bool is_3connected(const Matroid& m) {
  return is_connected(m) && separations(m, 2).empty();
}

ElementSet series_class(const Matroid& m, int e) {
  ElementSet out = ElementSet::single(e);
  for (int f : m.ground()) {
    if (are_in_series(m, e, f)) out.insert(f);
  }
  return out;
}

ElementSet parallel_class(const Matroid& m, int e) {
  ElementSet out = ElementSet::single(e);
  for (int f : m.ground()) {
    if (are_parallel(m, e, f)) out.insert(f);
  }
  return out;
}

bool is_3connected_up_to_series_pairs(const Matroid& m) { return up_to(m, is_series_pair); }
bool is_3connected_up_to_series_classes(const Matroid& m) { return up_to(m, in_series_class); }
bool is_3connected_up_to_parallel_pairs(const Matroid& m) { return up_to(m, is_parallel_pair); }
bool is_3connected_up_to_parallel_classes(const Matroid& m) {
  return up_to(m, in_parallel_class);
}
bool is_3connected_up_to_series_and_parallel_classes(const Matroid& m) {
  return up_to(m, in_either_class);
}

bool guts_contains(const Matroid& m, ElementSet x, ElementSet y, ElementSet z) {
  if ((x | y) == m.ground()) {
    require_partition(m, x, y, m.ground());
  } else {
    require_partition(m, x, y, m.ground() - z);
  }
  return (z - (m.closure(x - z) & m.closure(y - z))).empty();
}

bool coguts_contains(const Matroid& m, ElementSet x, ElementSet y, ElementSet z) {
  return guts_contains(m.dual(), x, y, z);
}

bool is_vertical_3sep(const Matroid& m, ElementSet x, int z, ElementSet y) {
  require_partition(m, x, y, m.ground().without(z));
  auto vertical = [&](ElementSet a, ElementSet b) {
    return is_k_separation(m, a, 3) && m.rank(a) >= 3 && m.rank(b) >= 3;
  };
  const ElementSet zs = ElementSet::single(z);
  return vertical(x | zs, y) && vertical(x, y | zs) && m.closure(x).contains(z) &&
         m.closure(y).contains(z);
}

std::vector<VerticalSeparation> vertical_3seps(const Matroid& m) {
  std::vector<VerticalSeparation> out;
  const int n = m.size();
  if (n < 7) return out;
  const Mask full = m.full_mask();
  const auto& t = m.rank_table();
  const int r = m.rank();
  for (int zp = 0; zp < n; ++zp) {
    const Mask zb = Mask{1} << zp;
    const Mask rest = full & ~zb;
    const Mask least = rest & (~rest + 1);
    for (Mask x = rest; x; x = (x - 1) & rest) {
      if (!(x & least)) continue;
      const Mask y = rest & ~x;
      if (std::popcount(x) < 3 || std::popcount(y) < 3) continue;
      if (t[x] < 3 || t[y] < 3) continue;
      if (t[x | zb] != t[x] || t[y | zb] != t[y]) continue;
      if (t[x] + t[y | zb] - r >= 3 || t[x | zb] + t[y] - r >= 3) continue;
      out.push_back({m.to_labels(x), m.label(zp), m.to_labels(y)});
    }
  }
  return out;
}

std::vector<VerticalSeparation> cyclic_3seps(const Matroid& m) { return vertical_3seps(m.dual()); }

bool blocks(const Matroid& m, int e, ElementSet x) {
  const ElementSet rest = m.ground().without(e);
  if (!m.ground().contains(e) || !(x - rest).empty()) {
    throw std::invalid_argument("blocking needs e in E(M) and X inside E(M)-e");
  }
  const int k = lambda(m.deletion(ElementSet::single(e)), x);
  return lambda(m, x) > k;
}

bool fully_blocks(const Matroid& m, int e, ElementSet x, ElementSet y) {
  if (x.contains(e) || y.contains(e)) throw std::invalid_argument("e must lie outside X and Y");
  require_partition(m, x, y, m.ground().without(e));
  const int k = lambda(m.deletion(ElementSet::single(e)), x);
  return lambda(m, x) > k && lambda(m, x.with(e)) > k;
}

bool fully_blocks_by_closure(const Matroid& m, int e, ElementSet x, ElementSet y) {
  if (x.contains(e) || y.contains(e)) throw std::invalid_argument("e must lie outside X and Y");
  require_partition(m, x, y, m.ground().without(e));
  return !m.closure(x).contains(e) && !m.closure(y).contains(e);
}

bool is_path_of_kseps(const Matroid& m, const std::vector<ElementSet>& cells, int k) {
  ElementSet seen;
  for (const ElementSet& c : cells) {
    if (c.empty()) throw std::invalid_argument("a path of separations has an empty cell");
    if (c.meets(seen)) return false;
    seen |= c;
  }
  if (seen != m.ground() || cells.size() < 2) return false;
  if (cells.front().size() < 2 || cells.back().size() < 2) return false;
  ElementSet prefix;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    prefix |= cells[i];
    if (!is_exactly_k_separating(m, prefix, k)) return false;
  }
  return true;
}

}  // namespace matroidkit
