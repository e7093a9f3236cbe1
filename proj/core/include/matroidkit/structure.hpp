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

#ifndef MATROIDKIT_STRUCTURE_HPP_
#define MATROIDKIT_STRUCTURE_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "matroidkit/budget.hpp"
#include "matroidkit/canonical.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// Inclusion-maximal sets of at least three elements all of whose 3-subsets
/// are triangles, ascending by size_lex_less.
std::vector<ElementSet> segments(const Matroid& m);
std::vector<ElementSet> cosegments(const Matroid& m);

/// Three-element sets that are both a triangle and a triad.
std::vector<ElementSet> triangle_triads(const Matroid& m);

struct FanOrdering {
  std::vector<int> elements;
  /// {f1,f2,f3} is a triangle (it may also be a triad).
  bool starts_with_triangle = false;
  bool maximal = false;

  ElementSet set() const { return ElementSet(elements); }
  int size() const { return static_cast<int>(elements.size()); }
  /// {f1, fl}; empty when the fan has fewer than four elements.
  ElementSet ends() const;
  /// {f2..f(l-1)}; empty when the fan has fewer than four elements.
  ElementSet internal() const;

  friend bool operator==(const FanOrdering&, const FanOrdering&) = default;
};

/// Checks conditions (a) and (b) of a fan ordering.
bool is_fan_ordering(const Matroid& m, const std::vector<int>& order);
/// Every set with at least three elements admitting a fan ordering.
std::vector<ElementSet> fan_sets(const Matroid& m, std::uint64_t budget = kDefaultBudget);
bool is_maximal_fan(const Matroid& m, ElementSet f, std::uint64_t budget = kDefaultBudget);

/// All fan orderings of maximal fans, sorted. When the reversal of an
/// ordering is also a fan ordering the pair is reported once, as whichever
/// is lexicographically smaller.
std::vector<FanOrdering> fans(const Matroid& m, std::uint64_t budget = kDefaultBudget);

/// P_T(M, M(K4)) where t = (a,b,c) is a triangle of M and primes[i] labels
/// the edge of the K4 copy opposite t[i], so {a,b',c'}, {a',b,c'} and
/// {a',b',c} are triangles.
Matroid gen_parallel_connection_mk4(const Matroid& m, std::array<int, 3> t, std::array<int, 3> primes);

bool is_coindependent_triangle(const Matroid& m, ElementSet t);
bool is_independent_triad(const Matroid& m, ElementSet t);

/// Delta-Y exchange on a coindependent triangle. The result has the same
/// ground set; each element of T now names its primed counterpart.
Matroid delta_y(const Matroid& m, ElementSet t);
/// Y-Delta exchange on an independent triad, defined through the dual.
Matroid wye_delta(const Matroid& m, ElementSet t);

struct DeltaOrbit {
  /// One representative per isomorphism class, in discovery order.
  std::vector<Matroid> members;
  std::vector<CanonicalForm> forms;
  bool fixpoint = false;
  int levels = 0;
};

/// Breadth-first closure of {M, M*} under Delta-Y and Y-Delta exchanges,
/// up to isomorphism, expanding at most max_steps levels.
DeltaOrbit delta_star_orbit(const Matroid& m, int max_steps);

}  // namespace matroidkit

#endif  // MATROIDKIT_STRUCTURE_HPP_
