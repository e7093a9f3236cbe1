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

#include "matroidkit/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "matroidkit/catalog.hpp"

namespace matroidkit {

std::vector<ElementSet> segments(const Matroid& m) {
  std::set<ElementSet> lines;
  const ElementSet loops = m.closure(ElementSet{});
  const std::vector<int> e = (m.ground() - loops).to_vector();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (m.rank(ElementSet{e[i], e[j]}) == 2) lines.insert(m.closure(ElementSet{e[i], e[j]}) - loops);
    }
  }
  std::vector<ElementSet> out;
  for (ElementSet line : lines) {
    std::vector<std::vector<int>> classes;
    ElementSet rest = line;
    while (!rest.empty()) {
      const int x = rest.min();
      const ElementSet cls = m.closure(ElementSet::single(x)) & rest;
      classes.push_back(cls.to_vector());
      rest -= cls;
    }
    if (classes.size() < 3) continue;
    std::vector<std::size_t> pick(classes.size(), 0);
    while (true) {
      ElementSet s;
      for (std::size_t k = 0; k < classes.size(); ++k) s.insert(classes[k][pick[k]]);
      out.push_back(s);
      std::size_t k = 0;
      while (k < classes.size() && ++pick[k] == classes[k].size()) pick[k++] = 0;
      if (k == classes.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

std::vector<ElementSet> cosegments(const Matroid& m) { return segments(m.dual()); }

std::vector<ElementSet> triangle_triads(const Matroid& m) {
  std::vector<ElementSet> out;
  const std::vector<ElementSet> triads = m.triads();
  for (ElementSet t : m.triangles()) {
    if (std::find(triads.begin(), triads.end(), t) != triads.end()) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

ElementSet FanOrdering::ends() const {
  if (elements.size() < 4) return {};
  return ElementSet{elements.front(), elements.back()};
}

ElementSet FanOrdering::internal() const {
  if (elements.size() < 4) return {};
  return ElementSet(std::vector<int>(elements.begin() + 1, elements.end() - 1));
}

namespace {

struct TripleKinds {
  std::unordered_set<std::uint64_t> triangles;
  std::unordered_set<std::uint64_t> triads;

  explicit TripleKinds(const Matroid& m) {
    for (ElementSet t : m.triangles()) triangles.insert(t.bits());
    for (ElementSet t : m.triads()) triads.insert(t.bits());
  }
  bool triangle(int a, int b, int c) const { return triangles.contains(ElementSet{a, b, c}.bits()); }
  bool triad(int a, int b, int c) const { return triads.contains(ElementSet{a, b, c}.bits()); }
};

bool ordering_ok(const TripleKinds& k, const std::vector<int>& f) {
  if (f.size() < 3 || ElementSet(f).size() != static_cast<int>(f.size())) return false;
  if (!k.triangle(f[0], f[1], f[2]) && !k.triad(f[0], f[1], f[2])) return false;
  for (std::size_t i = 0; i + 3 < f.size(); ++i) {
    if (k.triangle(f[i], f[i + 1], f[i + 2]) && !k.triad(f[i + 1], f[i + 2], f[i + 3])) return false;
    if (k.triad(f[i], f[i + 1], f[i + 2]) && !k.triangle(f[i + 1], f[i + 2], f[i + 3])) return false;
  }
  return true;
}

// Depth-first over all fan orderings; `visit` sees every ordering once.
template <typename Visit>
void for_each_fan_ordering(const Matroid& m, const TripleKinds& k, Budget& budget, Visit&& visit) {
  const std::vector<int> e = m.ground().to_vector();
  std::vector<int> seq;
  auto extend = [&](auto&& self) -> void {
    budget.spend();
    visit(seq);
    const std::size_t n = seq.size();
    const bool tri = k.triangle(seq[n - 3], seq[n - 2], seq[n - 1]);
    const bool triad = k.triad(seq[n - 3], seq[n - 2], seq[n - 1]);
    for (int x : e) {
      if (std::find(seq.begin(), seq.end(), x) != seq.end()) continue;
      if (tri && !k.triad(seq[n - 2], seq[n - 1], x)) continue;
      if (triad && !k.triangle(seq[n - 2], seq[n - 1], x)) continue;
      seq.push_back(x);
      self(self);
      seq.pop_back();
    }
  };
  std::vector<ElementSet> starts = m.triangles();
  for (ElementSet t : m.triads()) {
    if (std::find(starts.begin(), starts.end(), t) == starts.end()) starts.push_back(t);
  }
  for (ElementSet t : starts) {
    std::vector<int> v = t.to_vector();
    do {
      seq = v;
      extend(extend);
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

std::vector<ElementSet> maximal_only(const std::set<ElementSet>& all) {
  std::vector<ElementSet> out;
  for (ElementSet f : all) {
    bool contained = false;
    for (ElementSet g : all) contained = contained || (g != f && g.contains(f));
    if (!contained) out.push_back(f);
  }
  return out;
}

}  // namespace

bool is_fan_ordering(const Matroid& m, const std::vector<int>& order) {
  for (int x : order) {
    if (!m.ground().contains(x)) return false;
  }
  return ordering_ok(TripleKinds(m), order);
}

std::vector<ElementSet> fan_sets(const Matroid& m, std::uint64_t budget) {
  const TripleKinds k(m);
  Budget b(budget);
  std::set<ElementSet> all;
  for_each_fan_ordering(m, k, b, [&](const std::vector<int>& seq) { all.insert(ElementSet(seq)); });
  std::vector<ElementSet> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

bool is_maximal_fan(const Matroid& m, ElementSet f, std::uint64_t budget) {
  const std::vector<ElementSet> all = fan_sets(m, budget);
  if (std::find(all.begin(), all.end(), f) == all.end()) return false;
  return std::none_of(all.begin(), all.end(), [&](ElementSet g) { return g != f && g.contains(f); });
}

std::vector<FanOrdering> fans(const Matroid& m, std::uint64_t budget) {
  const TripleKinds k(m);
  Budget b(budget);
  std::set<ElementSet> all;
  std::vector<std::vector<int>> orderings;
  for_each_fan_ordering(m, k, b, [&](const std::vector<int>& seq) {
    all.insert(ElementSet(seq));
    orderings.push_back(seq);
  });
  const std::vector<ElementSet> maximal = maximal_only(all);
  const std::set<std::vector<int>> valid(orderings.begin(), orderings.end());
  std::set<std::vector<int>> chosen;
  for (const auto& seq : valid) {
    if (std::find(maximal.begin(), maximal.end(), ElementSet(seq)) == maximal.end()) continue;
    std::vector<int> rev(seq.rbegin(), seq.rend());
    chosen.insert(valid.contains(rev) ? std::min(seq, rev) : seq);
  }
  std::vector<FanOrdering> out;
  for (const auto& seq : chosen) {
    out.push_back({seq, k.triangle(seq[0], seq[1], seq[2]), true});
  }
  return out;
}

namespace {

// The K4 copy on local bits 0..5 = a, b, c, a', b', c'.
struct K4Tables {
  std::array<int, 64> rank{};
  std::array<std::uint8_t, 64> closure_in_t{};

  K4Tables() {
    const Matroid k4 = graphic({{0, 2, 3}, {1, 1, 3}, {2, 1, 2}, {3, 1, 4}, {4, 2, 4}, {5, 3, 4}});
    for (int x = 0; x < 64; ++x) {
      const ElementSet s = ElementSet::from_bits(static_cast<std::uint64_t>(x));
      rank[x] = k4.rank(s);
      closure_in_t[x] = static_cast<std::uint8_t>(k4.closure(s).bits() & 7u);
    }
  }
};

const K4Tables& k4_tables() {
  static const K4Tables tables;
  return tables;
}

// Rank in P_T(M, M(K4)) of x1 ∪ x2, where x1 ⊆ E(M) and x2 is a K4-local
// mask whose T part agrees with x1 ∩ T.
int parallel_connection_rank(const Matroid& m, const std::array<int, 3>& t, ElementSet x1, unsigned x2) {
  const K4Tables& k = k4_tables();
  const unsigned y = k.closure_in_t[x2];
  ElementSet joined = x1;
  for (int i = 0; i < 3; ++i) {
    if (y & (1u << i)) joined.insert(t[i]);
  }
  return m.rank(joined) + k.rank[x2] - k.rank[y];
}

std::array<int, 3> triangle_or_throw(const Matroid& m, ElementSet t) {
  if (t.size() != 3 || !m.ground().contains(t) || !m.is_circuit(t)) {
    throw std::invalid_argument(t.to_string() + " is not a triangle");
  }
  const std::vector<int> v = t.to_vector();
  return {v[0], v[1], v[2]};
}

}  // namespace

Matroid gen_parallel_connection_mk4(const Matroid& m, std::array<int, 3> t, std::array<int, 3> primes) {
  triangle_or_throw(m, ElementSet{t[0], t[1], t[2]});
  const ElementSet p{primes[0], primes[1], primes[2]};
  if (p.size() != 3 || p.meets(m.ground())) {
    throw std::invalid_argument("primed labels must be three new labels");
  }
  const ElementSet ground = m.ground() | p;
  if (ground.size() > Matroid::kMaxElements) {
    throw std::invalid_argument("generalized parallel connection would exceed 16 elements");
  }
  std::vector<int> labels = ground.to_vector();
  return Matroid::from_rank_function(ground, [&](Matroid::Mask mask) {
    ElementSet x1;
    unsigned x2 = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!(mask & (Matroid::Mask{1} << i))) continue;
      const int e = labels[i];
      for (int j = 0; j < 3; ++j) {
        if (e == t[j]) x2 |= 1u << j;
        if (e == primes[j]) x2 |= 1u << (3 + j);
      }
      if (!p.contains(e)) x1.insert(e);
    }
    return parallel_connection_rank(m, t, x1, x2);
  });
}

bool is_coindependent_triangle(const Matroid& m, ElementSet t) {
  return t.size() == 3 && m.ground().contains(t) && m.is_circuit(t) && m.rank(m.ground() - t) == m.rank();
}

bool is_independent_triad(const Matroid& m, ElementSet t) {
  return t.size() == 3 && m.ground().contains(t) && m.is_cocircuit(t) && m.rank(t) == 3;
}

Matroid delta_y(const Matroid& m, ElementSet t) {
  const std::array<int, 3> tri = triangle_or_throw(m, t);
  if (!is_coindependent_triangle(m, t)) {
    throw std::invalid_argument(t.to_string() + " is not a coindependent triangle");
  }
  const std::vector<int> labels = m.ground().to_vector();
  return Matroid::from_rank_function(m.ground(), [&](Matroid::Mask mask) {
    ElementSet x1;
    unsigned x2 = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!(mask & (Matroid::Mask{1} << i))) continue;
      const int e = labels[i];
      bool primed = false;
      for (int j = 0; j < 3; ++j) {
        if (e == tri[j]) {
          x2 |= 1u << (3 + j);
          primed = true;
        }
      }
      if (!primed) x1.insert(e);
    }
    return parallel_connection_rank(m, tri, x1, x2);
  });
}

Matroid wye_delta(const Matroid& m, ElementSet t) {
  if (!is_independent_triad(m, t)) throw std::invalid_argument(t.to_string() + " is not an independent triad");
  return delta_y(m.dual(), t).dual();
}

DeltaOrbit delta_star_orbit(const Matroid& m, int max_steps) {
  if (m.size() > 12) throw std::invalid_argument("orbit generation is limited to 12 elements");
  DeltaOrbit orbit;
  std::vector<Matroid> frontier;
  auto add = [&](const Matroid& x) {
    CanonicalForm f = canonical_form(x);
    if (std::find(orbit.forms.begin(), orbit.forms.end(), f) != orbit.forms.end()) return;
    orbit.forms.push_back(std::move(f));
    orbit.members.push_back(x);
    frontier.push_back(x);
  };
  add(m);
  add(m.dual());
  while (!frontier.empty()) {
    if (orbit.levels == max_steps) return orbit;
    ++orbit.levels;
    std::vector<Matroid> current;
    current.swap(frontier);
    for (const Matroid& x : current) {
      for (ElementSet t : x.triangles()) {
        if (is_coindependent_triangle(x, t)) add(delta_y(x, t));
      }
      for (ElementSet t : x.triads()) {
        if (is_independent_triad(x, t)) add(wye_delta(x, t));
      }
    }
  }
  orbit.fixpoint = true;
  return orbit;
}

}  // namespace matroidkit
