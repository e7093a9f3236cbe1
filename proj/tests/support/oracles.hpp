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

// Slow reference implementations used to cross-check the library. None of
// these call into the library beyond its value types.

#ifndef MATROIDKIT_TESTS_ORACLES_HPP_
#define MATROIDKIT_TESTS_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "matroidkit/element_set.hpp"
#include "matroidkit/matroid.hpp"

namespace oracle {

using matroidkit::ElementSet;
using matroidkit::Matroid;

/// max |X ∩ B| over the listed bases.
int rank_by_bases(const std::vector<ElementSet>& bases, ElementSet x);

/// Direct check of the basis exchange axiom.
bool exchange_axiom_holds(const std::vector<ElementSet>& bases);

/// Rank of integer vectors over GF(p), p prime, by modular elimination.
int prime_field_rank(int p, std::vector<std::vector<std::int64_t>> vectors);

/// Bases of the column matroid of `columns` over GF(p).
std::vector<ElementSet> column_bases(int p, const std::map<int, std::vector<std::int64_t>>& columns);

/// Bases of [I | A] with identity columns labelled by `rows` and A's columns
/// by `cols`, over GF(p).
std::vector<ElementSet> identity_augmented_bases(int p, const std::vector<int>& rows,
                                                 const std::vector<int>& cols,
                                                 const std::vector<std::vector<std::int64_t>>& a);

/// Leibniz expansion over the integers.
std::int64_t leibniz_det(const std::vector<std::vector<std::int64_t>>& a);

/// Isomorphism by trying every bijection (small ground sets only).
bool isomorphic_brute(const Matroid& a, const Matroid& b);

/// Minor containment by trying every (C, D) pair and every bijection.
bool has_minor_brute(const Matroid& m, const Matroid& n);

/// Bases of M / c \ d computed from M's bases without the library's minor code.
std::vector<ElementSet> minor_bases(const Matroid& m, ElementSet c, ElementSet d);

/// Circuits by brute force from the rank-by-bases oracle.
std::vector<ElementSet> circuits_brute(const Matroid& m);

/// Sorted copy for order-independent comparison.
std::vector<ElementSet> sorted(std::vector<ElementSet> family);

}  // namespace oracle

#endif  // MATROIDKIT_TESTS_ORACLES_HPP_
