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

#ifndef MATROIDKIT_MINORS_HPP_
#define MATROIDKIT_MINORS_HPP_

#include <optional>
#include <vector>

#include "matroidkit/canonical.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// M / contract \ remove is isomorphic to the target.
struct MinorWitness {
  ElementSet contract;
  ElementSet remove;
  /// Index of the matched target within the family searched.
  int target = 0;
};

/// Minor search against a fixed family of targets. Canonical forms of the
/// targets are computed once, so reuse an instance across many queries.
class MinorOracle {
 public:
  explicit MinorOracle(std::vector<Matroid> targets);

  /// The first target (in family order) that M has as a minor, with the
  /// lexicographically least witness (C first, then D).
  std::optional<MinorWitness> find(const Matroid& m) const;
  bool has(const Matroid& m) const { return find(m).has_value(); }

  const std::vector<Matroid>& targets() const { return targets_; }

 private:
  std::optional<MinorWitness> find_one(const Matroid& m, std::size_t t) const;

  std::vector<Matroid> targets_;
  std::vector<CanonicalForm> forms_;
};

std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n);

}  // namespace matroidkit

#endif  // MATROIDKIT_MINORS_HPP_
