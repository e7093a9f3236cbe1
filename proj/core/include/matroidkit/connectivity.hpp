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

#ifndef MATROIDKIT_CONNECTIVITY_HPP_
#define MATROIDKIT_CONNECTIVITY_HPP_

#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// λ(X) = r(X) + r(E−X) − r(M).
int lambda(const Matroid& m, ElementSet x);

bool is_k_separating(const Matroid& m, ElementSet x, int k);
bool is_exactly_k_separating(const Matroid& m, ElementSet x, int k);
/// k-separating with |X|, |E−X| ≥ k.
bool is_k_separation(const Matroid& m, ElementSet x, int k);

struct Separation {
  /// The side containing the least label of E(M).
  ElementSet side;
  ElementSet other;
  int order = 0;
  bool exact = false;
  /// min(r(X), r(Y)) ≥ 3 and order 3.
  bool vertical = false;
  /// min(r*(X), r*(Y)) ≥ 3 and order 3.
  bool cyclic = false;
};

/// Every k-separation, once per complementary pair, in ascending order of
/// the canonical side's positional mask. With `exact_only`, only those with
/// λ = k − 1.
std::vector<Separation> separations(const Matroid& m, int k, bool exact_only = false);

bool is_connected(const Matroid& m);
bool is_3connected(const Matroid& m);

/// Elements f with {e, f} a cocircuit, together with e. A coloop or an
/// element in no series pair gives {e}.
ElementSet series_class(const Matroid& m, int e);
ElementSet parallel_class(const Matroid& m, int e);

/// Connected, and every 2-separation has a side that is a series pair
/// (a 2-element cocircuit).
bool is_3connected_up_to_series_pairs(const Matroid& m);
/// Connected, and every 2-separation has a side of size at least two that
/// lies inside one series class.
bool is_3connected_up_to_series_classes(const Matroid& m);
bool is_3connected_up_to_parallel_pairs(const Matroid& m);
bool is_3connected_up_to_parallel_classes(const Matroid& m);
/// Connected, and every 2-separation has a side inside a series class or
/// inside a parallel class.
bool is_3connected_up_to_series_and_parallel_classes(const Matroid& m);

/// Z ⊆ cl(X−Z) ∩ cl(Y−Z), where (X, Y) partitions E(M) or E(M)−Z.
/// Throws std::invalid_argument otherwise.
bool guts_contains(const Matroid& m, ElementSet x, ElementSet y, ElementSet z);
bool coguts_contains(const Matroid& m, ElementSet x, ElementSet y, ElementSet z);

struct VerticalSeparation {
  ElementSet x;
  int z = -1;
  ElementSet y;
};
bool is_vertical_3sep(const Matroid& m, ElementSet x, int z, ElementSet y);
/// All (X, z, Y) with z in the guts and both (X∪z, Y) and (X, Y∪z) vertical
/// 3-separations. Each unordered {X, Y} appears once, X holding the least
/// label of E−z.
std::vector<VerticalSeparation> vertical_3seps(const Matroid& m);
/// Vertical 3-separations of the dual.
std::vector<VerticalSeparation> cyclic_3seps(const Matroid& m);

/// (X, Y) partitions E(M)−e and k = λ_{M\e}(X). True iff λ_M(X) > k.
bool blocks(const Matroid& m, int e, ElementSet x);
/// λ_M(X) > k and λ_M(X∪e) > k.
bool fully_blocks(const Matroid& m, int e, ElementSet x, ElementSet y);
/// e ∉ cl(X) ∪ cl(Y). Agrees with fully_blocks unless e is a coloop.
bool fully_blocks_by_closure(const Matroid& m, int e, ElementSet x, ElementSet y);

/// Ordered partition of E(M) with every prefix exactly k-separating and
/// |X1|, |Xm| ≥ 2. Throws std::invalid_argument on an empty cell.
bool is_path_of_kseps(const Matroid& m, const std::vector<ElementSet>& cells, int k);

}  // namespace matroidkit

#endif  // MATROIDKIT_CONNECTIVITY_HPP_
