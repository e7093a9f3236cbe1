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

#ifndef MATROIDKIT_CANONICAL_HPP_
#define MATROIDKIT_CANONICAL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// A relabelling-invariant encoding of a matroid. Two matroids are
/// isomorphic exactly when their encodings (n, r, bases) are equal.
struct CanonicalForm {
  int n = 0;
  int r = 0;
  /// Bases as masks over canonical positions, ascending.
  std::vector<Matroid::Mask> bases;
  /// order[i] is the label placed at canonical position i.
  std::vector<int> order;

  std::size_t hash() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.r == b.r && a.bases == b.bases;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.r != b.r) return a.r < b.r;
    return a.bases < b.bases;
  }
};

/// Least basis encoding over the labelings produced by
/// individualisation-refinement, with automorphism pruning.
CanonicalForm canonical_form(const Matroid& m);

/// A bijection E(a) → E(b) mapping bases onto bases, if one exists.
std::optional<std::map<int, int>> is_isomorphic(const Matroid& a, const Matroid& b);

/// Checks that `phi` is a bijection E(a) → E(b) carrying bases to bases.
bool is_isomorphism(const Matroid& a, const Matroid& b, const std::map<int, int>& phi);

}  // namespace matroidkit

#endif  // MATROIDKIT_CANONICAL_HPP_
