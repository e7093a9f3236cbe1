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

#include "matroidkit/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace matroidkit {

namespace {

int popcount(Matroid::Mask m) { return std::popcount(m); }

void check_ground(ElementSet ground) {
  if (ground.size() > Matroid::kMaxElements) {
    throw std::invalid_argument("ground set has " + std::to_string(ground.size()) +
                                " elements; at most " +
                                std::to_string(Matroid::kMaxElements) + " are supported");
  }
}

}  // namespace

std::string MatroidBuilder::check_rank_axioms(int n, const std::vector<std::uint8_t>& t) {
  const Matroid::Mask full = n == 0 ? 0 : ((Matroid::Mask{1} << n) - 1);
  if (t.size() != static_cast<std::size_t>(full) + 1) return "rank table has the wrong size";
  if (t[0] != 0) return "rank of the empty set is not zero";
  for (Matroid::Mask x = 0; x <= full; ++x) {
    for (int e = 0; e < n; ++e) {
      const Matroid::Mask be = Matroid::Mask{1} << e;
      if (x & be) continue;
      const int d = t[x | be] - t[x];
      if (d < 0 || d > 1) {
        return "rank increases by " + std::to_string(d) + " when adding one element";
      }
      for (int f = e + 1; f < n; ++f) {
        const Matroid::Mask bf = Matroid::Mask{1} << f;
        if (x & bf) continue;
        if (t[x | be] + t[x | bf] < t[x | be | bf] + t[x]) return "rank is not submodular";
      }
    }
    if (x == full) break;
  }
  return {};
}

Matroid Matroid::from_table(ElementSet ground, std::vector<std::uint8_t> table) {
  auto d = std::make_shared<Data>();
  d->ground = ground;
  d->n = ground.size();
  int i = 0;
  for (int l : ground) d->labels[i++] = l;
  d->rank = std::move(table);
  const Mask full = d->n == 0 ? 0 : ((Mask{1} << d->n) - 1);
  d->r = d->rank[full];
  for (Mask m = 0;; ++m) {
    if (popcount(m) == d->r && d->rank[m] == d->r) d->bases.push_back(m);
    if (m == full) break;
  }
  return Matroid(std::move(d));
}

Matroid Matroid::from_bases(ElementSet ground, const std::vector<ElementSet>& bases) {
  check_ground(ground);
  if (bases.empty()) throw InvalidMatroid("a matroid has at least one basis");
  const int r = bases.front().size();
  for (const ElementSet& b : bases) {
    if (!(b - ground).empty()) {
      throw InvalidMatroid("basis " + b.to_string() + " is not contained in the ground set");
    }
    if (b.size() != r) throw InvalidMatroid("bases have different sizes");
  }
  const int n = ground.size();
  const Mask full = n == 0 ? 0 : ((Mask{1} << n) - 1);
  std::vector<std::uint8_t> indep(static_cast<std::size_t>(full) + 1, 0);
  Matroid scratch = from_table(ground, std::vector<std::uint8_t>(indep.size(), 0));
  for (const ElementSet& b : bases) indep[scratch.to_local(b)] = 1;
  for (Mask m = full;; --m) {
    if (!indep[m]) {
      for (int e = 0; e < n; ++e) {
        const Mask be = Mask{1} << e;
        if (!(m & be) && indep[m | be]) {
          indep[m] = 1;
          break;
        }
      }
    }
    if (m == 0) break;
  }
  std::vector<std::uint8_t> table(indep.size(), 0);
  for (Mask m = 1; m <= full && m != 0; ++m) {
    if (indep[m]) {
      table[m] = static_cast<std::uint8_t>(popcount(m));
    } else {
      int best = 0;
      for (Mask rest = m; rest; rest &= rest - 1) {
        best = std::max<int>(best, table[m & ~(rest & -rest)]);
      }
      table[m] = static_cast<std::uint8_t>(best);
    }
    if (m == full) break;
  }
  if (MatroidBuilder::check_rank_axioms(n, table).empty()) return from_table(ground, std::move(table));

  // The family is not a matroid; locate an exchange-axiom violation.
  std::vector<std::uint8_t> is_basis(indep.size(), 0);
  std::vector<Mask> local;
  for (const ElementSet& b : bases) {
    const Mask m = scratch.to_local(b);
    if (!is_basis[m]) local.push_back(m);
    is_basis[m] = 1;
  }
  std::sort(local.begin(), local.end());
  for (Mask b1 : local) {
    for (int e = 0; e < n; ++e) {
      const Mask be = Mask{1} << e;
      if (!(b1 & be)) continue;
      Mask good = 0;
      for (int f = 0; f < n; ++f) {
        const Mask bf = Mask{1} << f;
        if (!(b1 & bf) && is_basis[(b1 & ~be) | bf]) good |= bf;
      }
      for (Mask b2 : local) {
        if ((b2 & be) == 0 && ((b2 & ~b1) & good) == 0) {
          throw InvalidMatroid("basis exchange fails", scratch.to_labels(b1), scratch.to_labels(b2),
                               scratch.label(e));
        }
      }
    }
  }
  throw InvalidMatroid("the basis family does not satisfy the matroid axioms");
}

Matroid Matroid::from_rank_function(ElementSet ground, const std::function<int(Mask)>& rank) {
  check_ground(ground);
  const int n = ground.size();
  const Mask full = n == 0 ? 0 : ((Mask{1} << n) - 1);
  std::vector<std::uint8_t> table(static_cast<std::size_t>(full) + 1);
  for (Mask m = 0;; ++m) {
    const int v = rank(m);
    if (v < 0 || v > popcount(m)) throw InvalidMatroid("rank value out of range");
    table[m] = static_cast<std::uint8_t>(v);
    if (m == full) break;
  }
  const std::string problem = MatroidBuilder::check_rank_axioms(n, table);
  if (!problem.empty()) throw InvalidMatroid(problem);
  return from_table(ground, std::move(table));
}

Matroid Matroid::free_matroid(ElementSet ground) {
  check_ground(ground);
  const std::size_t size = std::size_t{1} << ground.size();
  std::vector<std::uint8_t> table(size);
  for (std::size_t m = 0; m < size; ++m) table[m] = static_cast<std::uint8_t>(std::popcount(m));
  return from_table(ground, std::move(table));
}

Matroid::Mask Matroid::to_local(ElementSet x) const {
  if (!(x - d_->ground).empty()) {
    throw std::invalid_argument("set " + x.to_string() + " is not contained in the ground set " +
                                d_->ground.to_string());
  }
  Mask out = 0;
  const std::uint64_t g = d_->ground.bits();
  for (int l : x) out |= Mask{1} << std::popcount(g & ((std::uint64_t{1} << l) - 1));
  return out;
}

ElementSet Matroid::to_labels(Mask m) const {
  ElementSet out;
  for (; m; m &= m - 1) out.insert(d_->labels[std::countr_zero(m)]);
  return out;
}

int Matroid::position(int label) const {
  if (!d_->ground.contains(label)) {
    throw std::invalid_argument("element " + std::to_string(label) + " is not in the ground set");
  }
  return std::popcount(d_->ground.bits() & ((std::uint64_t{1} << label) - 1));
}

int Matroid::corank(ElementSet x) const {
  return x.size() + rank(ground() - x) - rank();
}

ElementSet Matroid::closure(ElementSet x) const {
  const Mask m = to_local(x);
  const int r = d_->rank[m];
  Mask out = m;
  for (int e = 0; e < d_->n; ++e) {
    const Mask be = Mask{1} << e;
    if (!(m & be) && d_->rank[m | be] == r) out |= be;
  }
  return to_labels(out);
}

ElementSet Matroid::coclosure(ElementSet x) const {
  const int r = corank(x);
  ElementSet out = x;
  for (int e : ground() - x) {
    if (corank(x.with(e)) == r) out.insert(e);
  }
  return out;
}

bool Matroid::is_circuit(ElementSet x) const {
  if (x.empty() || is_independent(x)) return false;
  for (int e : x) {
    if (!is_independent(x.without(e))) return false;
  }
  return true;
}

bool Matroid::is_cocircuit(ElementSet x) const {
  if (x.empty()) return false;
  const ElementSet h = ground() - x;
  return rank(h) == rank() - 1 && closure(h) == h;
}

std::vector<ElementSet> Matroid::bases() const {
  std::vector<ElementSet> out;
  out.reserve(d_->bases.size());
  for (Mask m : d_->bases) out.push_back(to_labels(m));
  return out;
}

std::vector<ElementSet> Matroid::circuits() const {
  std::vector<ElementSet> out;
  const Mask full = full_mask();
  const auto& t = d_->rank;
  for (Mask m = 1; m <= full && m != 0; ++m) {
    const int sz = popcount(m);
    if (t[m] == sz) continue;
    bool minimal = true;
    for (Mask rest = m; rest && minimal; rest &= rest - 1) {
      const Mask without = m & ~(rest & -rest);
      minimal = t[without] == sz - 1;
    }
    if (minimal) out.push_back(to_labels(m));
    if (m == full) break;
  }
  return out;
}

std::vector<ElementSet> Matroid::cocircuits() const { return dual().circuits(); }

std::vector<ElementSet> Matroid::triangles() const {
  std::vector<ElementSet> out;
  for (const ElementSet& c : circuits()) {
    if (c.size() == 3) out.push_back(c);
  }
  return out;
}

std::vector<ElementSet> Matroid::triads() const { return dual().triangles(); }

Matroid Matroid::dual() const {
  const Mask full = full_mask();
  std::vector<std::uint8_t> table(d_->rank.size());
  for (Mask m = 0;; ++m) {
    table[m] = static_cast<std::uint8_t>(popcount(m) + d_->rank[full & ~m] - d_->r);
    if (m == full) break;
  }
  return from_table(d_->ground, std::move(table));
}

Matroid Matroid::minor(ElementSet c, ElementSet d) const {
  if (c.meets(d)) throw std::invalid_argument("contraction and deletion sets must be disjoint");
  const Mask cm = to_local(c);
  to_local(d);
  const ElementSet ground2 = ground() - c - d;
  const int n2 = ground2.size();
  std::vector<Mask> parent(n2);
  {
    int i = 0;
    for (int l : ground2) parent[i++] = Mask{1} << position(l);
  }
  const int rc = d_->rank[cm];
  const std::size_t size = std::size_t{1} << n2;
  std::vector<std::uint8_t> table(size);
  std::vector<Mask> lifted(size, 0);
  for (std::size_t m = 1; m < size; ++m) {
    const int low = std::countr_zero(m);
    lifted[m] = lifted[m & (m - 1)] | parent[low];
  }
  for (std::size_t m = 0; m < size; ++m) {
    table[m] = static_cast<std::uint8_t>(d_->rank[lifted[m] | cm] - rc);
  }
  return from_table(ground2, std::move(table));
}

Matroid Matroid::relabeled(const std::map<int, int>& mapping) const {
  ElementSet ground2;
  std::vector<int> target(d_->n);
  for (int i = 0; i < d_->n; ++i) {
    auto it = mapping.find(d_->labels[i]);
    if (it == mapping.end()) {
      throw std::invalid_argument("relabeling does not cover element " +
                                  std::to_string(d_->labels[i]));
    }
    if (ground2.contains(it->second)) throw std::invalid_argument("relabeling is not injective");
    ground2.insert(it->second);
    target[i] = it->second;
  }
  std::vector<Mask> newbit(d_->n);
  for (int i = 0; i < d_->n; ++i) {
    newbit[i] = Mask{1} << std::popcount(ground2.bits() & ((std::uint64_t{1} << target[i]) - 1));
  }
  const std::size_t size = d_->rank.size();
  std::vector<std::uint8_t> table(size);
  std::vector<Mask> image(size, 0);
  for (std::size_t m = 1; m < size; ++m) {
    image[m] = image[m & (m - 1)] | newbit[std::countr_zero(m)];
  }
  for (std::size_t m = 0; m < size; ++m) table[image[m]] = d_->rank[m];
  return from_table(ground2, std::move(table));
}

bool operator==(const Matroid& a, const Matroid& b) {
  return a.d_ == b.d_ || (a.d_->ground == b.d_->ground && a.d_->rank == b.d_->rank);
}

std::string Matroid::summary() const {
  std::ostringstream os;
  os << "rank " << rank() << " on " << ground().to_string() << ", " << basis_count() << " bases";
  return os.str();
}

bool are_parallel(const Matroid& m, int e, int f) {
  return e != f && m.is_circuit(ElementSet{e, f});
}

bool are_in_series(const Matroid& m, int e, int f) {
  return e != f && m.is_cocircuit(ElementSet{e, f});
}

Matroid simplify(const Matroid& m) {
  ElementSet drop;
  for (int e : m.ground()) {
    if (drop.contains(e)) continue;
    if (m.is_loop(e)) {
      drop.insert(e);
      continue;
    }
    for (int f : m.ground()) {
      if (f > e && !drop.contains(f) && are_parallel(m, e, f)) drop.insert(f);
    }
  }
  return m.deletion(drop);
}

Matroid cosimplify(const Matroid& m) { return simplify(m.dual()).dual(); }

}  // namespace matroidkit
