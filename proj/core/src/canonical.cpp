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

#include "matroidkit/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace matroidkit {

namespace {

using Mask = Matroid::Mask;
using Partition = std::vector<std::vector<int>>;

class Search {
 public:
  explicit Search(const Matroid& m) : m_(m), n_(m.size()), w_(n_, std::vector<std::int64_t>(n_)) {
    std::vector<std::vector<std::int64_t>> both(n_, std::vector<std::int64_t>(n_, 0));
    for (Mask b : m.local_bases()) {
      for (Mask x = b; x; x &= x - 1) {
        const int e = std::countr_zero(x);
        for (Mask y = b; y; y &= y - 1) both[e][std::countr_zero(y)]++;
      }
    }
    for (int e = 0; e < n_; ++e) {
      for (int f = 0; f < n_; ++f) {
        const Mask pair = (Mask{1} << e) | (Mask{1} << f);
        w_[e][f] = both[e][f] * 8 + m.local_rank(pair) + (e == f ? 4 : 0);
      }
    }
  }

  CanonicalForm run() {
    Partition root(1);
    root[0].resize(n_);
    std::iota(root[0].begin(), root[0].end(), 0);
    std::vector<int> seq;
    dfs(root, seq);
    CanonicalForm out;
    out.n = n_;
    out.r = m_.rank();
    out.bases = best_enc_;
    out.order.assign(n_, 0);
    for (int e = 0; e < n_; ++e) out.order[best_lab_[e]] = m_.label(e);
    return out;
  }

 private:
  Partition refine(Partition p) const {
    std::vector<int> cell_of(n_);
    while (true) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        for (int e : p[c]) cell_of[e] = static_cast<int>(c);
      }
      std::vector<std::vector<std::int64_t>> key(n_);
      for (int e = 0; e < n_; ++e) {
        key[e].push_back(cell_of[e]);
        for (const auto& cell : p) {
          std::vector<std::int64_t> vals;
          vals.reserve(cell.size());
          for (int f : cell) vals.push_back(w_[e][f]);
          std::sort(vals.begin(), vals.end());
          key[e].insert(key[e].end(), vals.begin(), vals.end());
          key[e].push_back(-1);
        }
      }
      Partition next;
      for (auto cell : p) {
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return key[a] < key[b]; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || key[cell[i]] != key[cell[start]]) {
            next.emplace_back(cell.begin() + start, cell.begin() + i);
            start = i;
          }
        }
      }
      if (next.size() == p.size()) return next;
      p = std::move(next);
    }
  }

  std::vector<Mask> encode(const std::vector<int>& lab) const {
    std::array<Mask, 256> lo{}, hi{};
    for (int v = 0; v < 256; ++v) {
      for (int bit = 0; bit < 8; ++bit) {
        if (!(v & (1 << bit))) continue;
        if (bit < n_) lo[v] |= Mask{1} << lab[bit];
        if (bit + 8 < n_) hi[v] |= Mask{1} << lab[bit + 8];
      }
    }
    std::vector<Mask> enc;
    enc.reserve(m_.local_bases().size());
    for (Mask b : m_.local_bases()) enc.push_back(lo[b & 255] | hi[(b >> 8) & 255]);
    std::sort(enc.begin(), enc.end());
    return enc;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void record_automorphism(const std::vector<int>& ref_lab, const std::vector<int>& lab) {
    std::vector<int> inv(n_);
    for (int e = 0; e < n_; ++e) inv[ref_lab[e]] = e;
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int e = 0; e < n_; ++e) {
      gamma[e] = inv[lab[e]];
      identity = identity && gamma[e] == e;
    }
    if (!identity) autos_.push_back(std::move(gamma));
  }

  int find(std::vector<int>& uf, int x) const {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  std::vector<int> orbits_fixing(const std::vector<int>& seq) const {
    std::vector<int> uf(n_);
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& g : autos_) {
      bool fixes = true;
      for (int v : seq) fixes = fixes && g[v] == v;
      if (!fixes) continue;
      for (int e = 0; e < n_; ++e) {
        const int a = find(uf, e);
        const int b = find(uf, g[e]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int e = 0; e < n_; ++e) uf[e] = find(uf, e);
    return uf;
  }

  // Returns -1 to continue normally, or the depth of the node that should
  // resume its child loop.
  int dfs(const Partition& input, std::vector<int>& seq) {
    const int depth = static_cast<int>(seq.size());
    Partition p = refine(input);
    if (static_cast<int>(p.size()) == n_) {
      std::vector<int> lab(n_);
      for (int c = 0; c < n_; ++c) lab[p[c][0]] = c;
      std::vector<Mask> enc = encode(lab);
      if (!have_first_) {
        have_first_ = true;
        first_seq_ = best_seq_ = seq;
        first_lab_ = best_lab_ = lab;
        first_enc_ = best_enc_ = std::move(enc);
        return -1;
      }
      if (enc == first_enc_) {
        record_automorphism(first_lab_, lab);
        return common_prefix(seq, first_seq_);
      }
      if (enc == best_enc_) {
        record_automorphism(best_lab_, lab);
        return common_prefix(seq, best_seq_);
      }
      if (enc < best_enc_) {
        best_seq_ = seq;
        best_lab_ = lab;
        best_enc_ = std::move(enc);
      }
      return -1;
    }
    std::size_t target = 0;
    while (p[target].size() == 1) ++target;
    const std::vector<int> cell = p[target];
    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty() && !autos_.empty()) {
        const std::vector<int> orbit = orbits_fixing(seq);
        bool seen = false;
        for (int u : explored) seen = seen || orbit[u] == orbit[v];
        if (seen) continue;
      }
      explored.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != target) {
          child.push_back(p[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cell) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      seq.push_back(v);
      const int jump = dfs(child, seq);
      seq.pop_back();
      if (jump != -1 && jump < depth) return jump;
    }
    return -1;
  }

  const Matroid& m_;
  int n_;
  std::vector<std::vector<std::int64_t>> w_;
  bool have_first_ = false;
  std::vector<int> first_seq_, best_seq_, first_lab_, best_lab_;
  std::vector<Mask> first_enc_, best_enc_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

std::size_t CanonicalForm::hash() const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n * 131 + r);
  for (Mask b : bases) h = (h ^ b) * 1099511628211ull;
  return h;
}

CanonicalForm canonical_form(const Matroid& m) {
  if (m.size() == 0) {
    CanonicalForm out;
    out.bases = {0};
    return out;
  }
  return Search(m).run();
}

std::optional<std::map<int, int>> is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.basis_count() != b.basis_count()) {
    return std::nullopt;
  }
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (!(ca == cb)) return std::nullopt;
  std::map<int, int> phi;
  for (int i = 0; i < ca.n; ++i) phi[ca.order[i]] = cb.order[i];
  return phi;
}

bool is_isomorphism(const Matroid& a, const Matroid& b, const std::map<int, int>& phi) {
  if (a.size() != b.size() || a.basis_count() != b.basis_count()) return false;
  ElementSet image;
  for (int e : a.ground()) {
    auto it = phi.find(e);
    if (it == phi.end() || !b.ground().contains(it->second) || image.contains(it->second)) {
      return false;
    }
    image.insert(it->second);
  }
  for (const ElementSet& basis : a.bases()) {
    ElementSet mapped;
    for (int e : basis) mapped.insert(phi.at(e));
    if (!b.is_basis(mapped)) return false;
  }
  return true;
}

}  // namespace matroidkit
