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

#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

int rank_by_bases(const std::vector<ElementSet>& bases, ElementSet x) {
  int best = 0;
  for (const ElementSet& b : bases) best = std::max(best, (b & x).size());
  return best;
}

bool exchange_axiom_holds(const std::vector<ElementSet>& bases) {
  std::set<std::uint64_t> family;
  for (const ElementSet& b : bases) family.insert(b.bits());
  for (const ElementSet& b1 : bases) {
    for (const ElementSet& b2 : bases) {
      for (int e : b1 - b2) {
        bool ok = false;
        for (int f : b2 - b1) {
          if (family.count(b1.without(e).with(f).bits())) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

namespace {

std::int64_t mod(std::int64_t a, int p) { return ((a % p) + p) % p; }

std::int64_t inv_mod(std::int64_t a, int p) {
  for (std::int64_t x = 1; x < p; ++x) {
    if (mod(a * x, p) == 1) return x;
  }
  return 0;
}

}  // namespace

int prime_field_rank(int p, std::vector<std::vector<std::int64_t>> v) {
  if (v.empty()) return 0;
  for (auto& row : v) {
    for (auto& x : row) x = mod(x, p);
  }
  const std::size_t cols = v[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < v.size(); ++c) {
    std::size_t piv = rank;
    while (piv < v.size() && v[piv][c] == 0) ++piv;
    if (piv == v.size()) continue;
    std::swap(v[piv], v[rank]);
    const std::int64_t iv = inv_mod(v[rank][c], p);
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (r == rank || v[r][c] == 0) continue;
      const std::int64_t f = mod(v[r][c] * iv, p);
      for (std::size_t k = 0; k < cols; ++k) v[r][k] = mod(v[r][k] - f * v[rank][k], p);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<ElementSet> column_bases(int p, const std::map<int, std::vector<std::int64_t>>& columns) {
  std::vector<int> labels;
  for (const auto& kv : columns) labels.push_back(kv.first);
  std::vector<std::vector<std::int64_t>> all;
  for (const auto& kv : columns) all.push_back(kv.second);
  const int r = prime_field_rank(p, all);
  std::vector<ElementSet> out;
  const int n = static_cast<int>(labels.size());
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) != r) continue;
    std::vector<std::vector<std::int64_t>> sub;
    ElementSet s;
    for (int i = 0; i < n; ++i) {
      if (m & (1u << i)) {
        sub.push_back(columns.at(labels[i]));
        s.insert(labels[i]);
      }
    }
    if (prime_field_rank(p, sub) == r) out.push_back(s);
  }
  return out;
}

std::vector<ElementSet> identity_augmented_bases(int p, const std::vector<int>& rows,
                                                 const std::vector<int>& cols,
                                                 const std::vector<std::vector<std::int64_t>>& a) {
  std::map<int, std::vector<std::int64_t>> columns;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<std::int64_t> e(rows.size(), 0);
    e[i] = 1;
    columns[rows[i]] = e;
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::int64_t> c(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) c[i] = a[i][j];
    columns[cols[j]] = c;
  }
  if (rows.empty()) return {ElementSet{}};
  return column_bases(p, columns);
}

std::int64_t leibniz_det(const std::vector<std::vector<std::int64_t>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<ElementSet> sorted(std::vector<ElementSet> family) {
  std::sort(family.begin(), family.end());
  return family;
}

bool isomorphic_brute(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.basis_count() != b.basis_count() || a.rank() != b.rank()) {
    return false;
  }
  const std::vector<int> la = a.ground().to_vector();
  std::vector<int> lb = b.ground().to_vector();
  const std::vector<ElementSet> ba = a.bases();
  std::set<std::uint64_t> bb;
  for (const ElementSet& x : b.bases()) bb.insert(x.bits());
  std::sort(lb.begin(), lb.end());
  do {
    bool ok = true;
    for (const ElementSet& x : ba) {
      ElementSet y;
      for (std::size_t i = 0; i < la.size(); ++i) {
        if (x.contains(la[i])) y.insert(lb[i]);
      }
      if (!bb.count(y.bits())) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(lb.begin(), lb.end()));
  return false;
}

std::vector<ElementSet> minor_bases(const Matroid& m, ElementSet c, ElementSet d) {
  const std::vector<ElementSet> bases = m.bases();
  const ElementSet keep = m.ground() - c - d;
  // Bases of M/c\d are the maximal sets B' ⊆ keep such that B' ∪ I is a
  // basis-subset for a maximal independent I ⊆ c, taken with maximum size.
  const int rc = rank_by_bases(bases, c);
  int best = -1;
  std::vector<ElementSet> out;
  std::set<std::uint64_t> seen;
  for (const ElementSet& b : bases) {
    if ((b & c).size() != rc) continue;
    const ElementSet part = b & keep;
    const int rk = rank_by_bases(bases, part | c) - rc;
    if (rk != part.size()) continue;
    if (part.size() > best) {
      best = part.size();
      out.clear();
      seen.clear();
    }
    if (part.size() == best && seen.insert(part.bits()).second) out.push_back(part);
  }
  return sorted(out);
}

bool has_minor_brute(const Matroid& m, const Matroid& n) {
  const std::vector<int> labels = m.ground().to_vector();
  const int size = static_cast<int>(labels.size());
  std::uint64_t pow3 = 1;
  for (int i = 0; i < size; ++i) pow3 *= 3;
  for (std::uint64_t code = 0; code < pow3; ++code) {
    ElementSet c, d;
    std::uint64_t x = code;
    for (int i = 0; i < size; ++i) {
      if (x % 3 == 1) c.insert(labels[i]);
      if (x % 3 == 2) d.insert(labels[i]);
      x /= 3;
    }
    if (m.size() - c.size() - d.size() != n.size()) continue;
    const std::vector<ElementSet> b = minor_bases(m, c, d);
    const Matroid minor = Matroid::from_bases(m.ground() - c - d, b);
    if (isomorphic_brute(minor, n)) return true;
  }
  return false;
}

std::vector<ElementSet> circuits_brute(const Matroid& m) {
  const std::vector<ElementSet> bases = m.bases();
  const std::vector<int> labels = m.ground().to_vector();
  const int n = static_cast<int>(labels.size());
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    ElementSet x;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) x.insert(labels[i]);
    }
    if (rank_by_bases(bases, x) == x.size()) continue;
    bool minimal = true;
    for (int e : x) {
      if (rank_by_bases(bases, x.without(e)) != x.size() - 1) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return sorted(out);
}

}  // namespace oracle
