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

#ifndef MATROIDKIT_MATROID_HPP_
#define MATROIDKIT_MATROID_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroidkit/element_set.hpp"

namespace matroidkit {

/// Raised by the validating constructors. When the failure is an
/// exchange-axiom violation, the witness (B1, B2, e) is attached: e ∈ B1−B2
/// and no f ∈ B2−B1 makes (B1−e)∪f a basis.
class InvalidMatroid : public std::invalid_argument {
 public:
  explicit InvalidMatroid(const std::string& what) : std::invalid_argument(what) {}
  InvalidMatroid(const std::string& what, ElementSet b1, ElementSet b2, int e)
      : std::invalid_argument(what), first(b1), second(b2), element(e), has_witness(true) {}

  ElementSet first;
  ElementSet second;
  int element = -1;
  bool has_witness = false;
};

/// A matroid on at most 16 labelled elements, stored as its full rank table.
///
/// Bit i of a local mask is the i-th smallest label of the ground set. The
/// public interface takes label sets; the `local_*` accessors exist for
/// exhaustive scans where the translation would dominate.
class Matroid {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxElements = 16;

  /// Validates equal basis sizes and the exchange axiom.
  static Matroid from_bases(ElementSet ground, const std::vector<ElementSet>& bases);
  /// Builds from a rank oracle on local masks and validates the rank axioms.
  static Matroid from_rank_function(ElementSet ground, const std::function<int(Mask)>& rank);
  /// Every subset independent.
  static Matroid free_matroid(ElementSet ground);

  ElementSet ground() const { return d_->ground; }
  int size() const { return d_->n; }
  int rank() const { return d_->r; }
  int corank() const { return d_->n - d_->r; }

  int rank(ElementSet x) const { return d_->rank[to_local(x)]; }
  /// Rank in the dual.
  int corank(ElementSet x) const;
  ElementSet closure(ElementSet x) const;
  ElementSet coclosure(ElementSet x) const;

  bool is_independent(ElementSet x) const { return rank(x) == x.size(); }
  bool is_basis(ElementSet x) const { return x.size() == rank() && is_independent(x); }
  bool is_spanning(ElementSet x) const { return rank(x) == rank(); }
  bool is_circuit(ElementSet x) const;
  bool is_cocircuit(ElementSet x) const;
  bool is_loop(int e) const { return rank(ElementSet::single(e)) == 0; }
  bool is_coloop(int e) const { return rank(ground().without(e)) < rank(); }
  bool is_flat(ElementSet x) const { return closure(x) == x; }

  /// Bases in ascending order of their local masks.
  std::vector<ElementSet> bases() const;
  std::size_t basis_count() const { return d_->bases.size(); }
  std::vector<ElementSet> circuits() const;
  std::vector<ElementSet> cocircuits() const;
  std::vector<ElementSet> triangles() const;
  std::vector<ElementSet> triads() const;

  Matroid dual() const;
  Matroid deletion(ElementSet d) const { return minor(ElementSet{}, d); }
  Matroid contraction(ElementSet c) const { return minor(c, ElementSet{}); }
  /// M / c \ d for disjoint c, d ⊆ E.
  Matroid minor(ElementSet c, ElementSet d) const;
  Matroid restriction(ElementSet s) const { return deletion(ground() - s); }
  /// Renames elements; `mapping` must be injective on E(M).
  Matroid relabeled(const std::map<int, int>& mapping) const;

  /// Label-exact equality.
  friend bool operator==(const Matroid& a, const Matroid& b);

  int local_rank(Mask m) const { return d_->rank[m]; }
  const std::vector<std::uint8_t>& rank_table() const { return d_->rank; }
  const std::vector<Mask>& local_bases() const { return d_->bases; }
  Mask full_mask() const { return d_->n == 0 ? 0 : ((Mask{1} << d_->n) - 1); }
  Mask to_local(ElementSet x) const;
  ElementSet to_labels(Mask m) const;
  int label(int position) const { return d_->labels[position]; }
  int position(int label) const;

  /// "rank r on {..}, b bases"
  std::string summary() const;

 private:
  struct Data {
    ElementSet ground;
    int n = 0;
    int r = 0;
    std::array<int, kMaxElements> labels{};
    std::vector<std::uint8_t> rank;
    std::vector<Mask> bases;
  };

  explicit Matroid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Matroid from_table(ElementSet ground, std::vector<std::uint8_t> table);

  std::shared_ptr<const Data> d_;

  friend class MatroidBuilder;
};

/// Internal factory for callers that already hold a valid rank table
/// (minors, duals, relabelings). Skips validation.
class MatroidBuilder {
 public:
  static Matroid from_trusted_table(ElementSet ground, std::vector<std::uint8_t> table) {
    return Matroid::from_table(ground, std::move(table));
  }
  /// Checks the rank axioms on a full table; returns an empty string when
  /// valid, else a description of the first violation.
  static std::string check_rank_axioms(int n, const std::vector<std::uint8_t>& table);
};

/// Deletes loops and all but the least label of every parallel class.
Matroid simplify(const Matroid& m);
/// Contracts coloops and all but the least label of every series class.
Matroid cosimplify(const Matroid& m);

/// Elements e ≠ f with {e, f} a circuit / cocircuit.
bool are_parallel(const Matroid& m, int e, int f);
bool are_in_series(const Matroid& m, int e, int f);

}  // namespace matroidkit

#endif  // MATROIDKIT_MATROID_HPP_
