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

#ifndef MATROIDKIT_PMATRIX_HPP_
#define MATROIDKIT_PMATRIX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matroidkit/budget.hpp"
#include "matroidkit/element_set.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/pfield.hpp"

namespace matroidkit {

/// An X×Y matrix over the ring of a partial field, with labelled rows and
/// columns. Row and column order is significant for display and for the
/// sign of determinants of submatrices, but all lookups are by label.
class PMatrix {
 public:
  PMatrix(PartialField field, std::vector<int> rows, std::vector<int> cols,
          std::vector<std::vector<RingValue>> entries);
  static PMatrix from_ints(PartialField field, std::vector<int> rows, std::vector<int> cols,
                           const std::vector<std::vector<std::int64_t>>& entries);

  const PartialField& field() const { return field_; }
  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  ElementSet row_set() const { return row_set_; }
  ElementSet col_set() const { return col_set_; }
  ElementSet ground() const { return row_set_ | col_set_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return static_cast<int>(cols_.size()); }

  const RingValue& entry(int i, int j) const { return entries_[i * cols_.size() + j]; }
  /// Entry A_{xy} by labels.
  const RingValue& at(int x, int y) const;
  int row_index(int x) const;
  int col_index(int y) const;

  /// A[Z]: rows X∩Z and columns Y∩Z, keeping order.
  PMatrix submatrix(ElementSet z) const;
  /// A − Z: rows X−Z and columns Y−Z.
  PMatrix without(ElementSet z) const { return submatrix(ground() - z); }
  /// det A[Z]; throws std::invalid_argument unless A[Z] is square.
  RingValue det(ElementSet z) const;

  std::string to_string() const;

  friend bool operator==(const PMatrix& a, const PMatrix& b);

 private:
  PartialField field_;
  std::vector<int> rows_;
  std::vector<int> cols_;
  ElementSet row_set_;
  ElementSet col_set_;
  std::vector<RingValue> entries_;
};

/// Every square submatrix with its determinant, as Z = rows ∪ cols. The
/// empty submatrix is included with determinant 1.
struct Subdeterminant {
  ElementSet z;
  RingValue value;
};
/// Requires |X| + |Y| ≤ 20.
std::vector<Subdeterminant> all_subdeterminants(const PMatrix& a);

inline constexpr int kMaxPMatrixLabels = 20;

/// Least Z (by size, then lexicographically) with det A[Z] ∉ P, or nullopt
/// when A is a P-matrix. Requires |X| + |Y| ≤ 20.
std::optional<ElementSet> find_non_p_subdeterminant(const PMatrix& a);
bool is_p_matrix(const PMatrix& a);

/// Thrown by operations whose input must be a P-matrix.
class NotPMatrix : public std::invalid_argument {
 public:
  NotPMatrix(const std::string& what, ElementSet witness)
      : std::invalid_argument(what), witness(witness) {}
  ElementSet witness;
};

/// M[I|A]: bases {X} ∪ {X△Z : det A[Z] ≠ 0}, validated by Matroid::from_bases.
Matroid matroid_from(const PMatrix& a);

/// A^{xy}. Row x becomes row y and column y becomes column x, in place.
/// Throws std::invalid_argument if A_{xy} is zero or not a unit of R.
PMatrix pivot(const PMatrix& a, int x, int y);

/// Whether row and column scalings by elements of G carry a1 to a2. Labels
/// must agree as sets; throws std::invalid_argument otherwise.
bool scaling_equivalent(const PMatrix& a1, const PMatrix& a2);

/// A−a and A−b are P-matrices representing M\a and M\b.
bool companion_check(const Matroid& m, const PMatrix& a, int ea, int eb);

enum class IncriminationCondition {
  kDetNotInP,             // (i)
  kDetZeroButBasis,       // (ii)
  kDetNonzeroButDependent // (iii)
};
std::string to_string(IncriminationCondition c);

struct IncriminationWitness {
  ElementSet z;
  IncriminationCondition condition;
};

/// Whether Z incriminates (M, A). A's rows must form a basis of M and its
/// columns the complement; A[Z] must be square.
std::optional<IncriminationWitness> incriminates(const Matroid& m, const PMatrix& a, ElementSet z);

struct Represents {};
using IncriminationStatus = std::variant<Represents, IncriminationWitness>;
/// Either A is a P-matrix with M = M[I|A], or the least incriminating Z.
IncriminationStatus incrimination_status(const Matroid& m, const PMatrix& a);

/// For an incriminating quad {x,y,a,b} (x,y rows; a,b columns) and a
/// nonzero A_{pq}, whether the pivot A^{pq} is allowable.
bool allowable_pivot(const Matroid& m, const PMatrix& a, ElementSet quad, int p, int q);

/// Representations of M over GF(q) in B×B* form for the basis `basis`
/// (default: the lexicographically least basis), one per scaling class, in
/// a fixed order. Requires |E(M)| ≤ 10. Throws BudgetExceeded.
std::vector<PMatrix> enumerate_representations(const Matroid& m, int q,
                                               std::optional<ElementSet> basis = std::nullopt,
                                               std::uint64_t budget = kDefaultBudget);
bool is_representable(const Matroid& m, int q, std::uint64_t budget = kDefaultBudget);

/// M is not GF(q)-representable but every single-element deletion and
/// contraction is.
bool is_excluded_minor(const Matroid& m, int q, std::uint64_t budget = kDefaultBudget);

/// N is a labelled minor of M with E(N) ⊆ E(M), and `n_basis` a basis X' of
/// N. True iff, for every basis X ⊇ X' of M avoiding Y' = E(N)−X' with
/// M/(X−X')\(Y−Y') = N, any two GF(q)-representations A1, A2 of M whose
/// restrictions to X'×Y' are scaling equivalent are themselves scaling
/// equivalent. Throws std::invalid_argument when no such X exists.
bool is_stabilized_by(const Matroid& m, const Matroid& n, ElementSet n_basis, int q,
                      std::uint64_t budget = kDefaultBudget);

}  // namespace matroidkit

#endif  // MATROIDKIT_PMATRIX_HPP_
