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

#ifndef MATROIDKIT_FRAGILITY_HPP_
#define MATROIDKIT_FRAGILITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidkit/budget.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/pmatrix.hpp"

namespace matroidkit {

struct ElementClassification {
  ElementSet deletable;
  ElementSet contractible;
  ElementSet flexible;
  ElementSet essential;
};

/// Per-element deletable/contractible/flexible/essential flags with respect
/// to a family of targets. Throws std::invalid_argument if M has no minor in
/// the family.
ElementClassification classify_elements(const Matroid& m, const std::vector<Matroid>& family);
bool is_fragile(const Matroid& m, const std::vector<Matroid>& family);

/// (N,B)-robust elements. Throws std::invalid_argument if B is not a basis.
ElementSet robust_elements(const Matroid& m, const Matroid& n, ElementSet basis);
/// (N,B)-strong elements: si(M/e) resp. co(M\e) is 3-connected with an N-minor.
ElementSet strong_elements(const Matroid& m, const Matroid& n, ElementSet basis);

/// The data a gadget or basis predicate works with: M, the minor N, the
/// delete pair {a,b}, a basis B of M\a,b, a B×B* companion matrix A of M
/// and {x,y} ⊆ B. The matrix may be omitted in relaxed mode.
struct Context {
  Matroid m;
  Matroid n;
  int a = 0;
  int b = 0;
  ElementSet basis;
  std::optional<PMatrix> matrix;
  int x = 0;
  int y = 0;

  Matroid deletion() const { return m.deletion(ElementSet{a, b}); }
};

/// Empty when every hypothesis holds: M\a,b is 3-connected with an N-minor,
/// B is a basis of M\a,b and of M, {x,y} ⊆ B, A is a companion matrix of M
/// for (a,b) and {x,y,a,b} incriminates (M,A). With `with_matrix` false the
/// last two are skipped.
std::vector<std::string> context_problems(const Context& ctx, bool with_matrix = true);

enum class GadgetType { kI, kII, kIII };
std::string to_string(GadgetType t);

struct Gadget {
  GadgetType type = GadgetType::kI;
  int x = 0;
  int y = 0;
  int u = 0;
  std::optional<int> z;
  std::optional<int> w;
  int blocker = 0;
  bool fully_blocks = false;

  /// The elements in the gadget.
  ElementSet support() const;
};

struct BlockingResult {
  int blocker = 0;
  bool fully_blocks = false;
};

/// Decides which of a, b blocks in g, using closures in M, and whether it
/// fully blocks. Throws std::invalid_argument when neither case holds.
BlockingResult gadget_blocking(const Matroid& m, const Gadget& g, int a, int b);

struct GadgetOptions {
  /// Skip the companion-matrix and incrimination hypotheses. Results in this
  /// mode are not instances of the theorem's conclusion.
  bool relaxed = false;
};

struct GadgetResult {
  enum class Status { kFragile, kGadget, kHypothesesUnmet };
  Status status = Status::kHypothesesUnmet;
  std::optional<Gadget> gadget;
  /// Every (N,B)-strong element of M\a,b in B*-{a,b}, ascending.
  std::vector<int> candidates;
  std::vector<std::string> diagnostics;
  bool relaxed = false;
};
std::string to_string(GadgetResult::Status s);

/// Locates u and the gadget type for {a,b}. Throws std::invalid_argument
/// when, outside relaxed mode, {x,y,a,b} does not incriminate (M,A).
GadgetResult gadget_classify(const Context& ctx, const GadgetOptions& options = {});

struct ConfiningSet {
  ElementSet g;
  /// True for a 4-cosegment, false for a union of two triads.
  bool cosegment = false;
  ElementSet t1;
  ElementSet t2;
  int x1 = 0;
  int y1 = 0;
  /// Whether {x1,y1,a,b} was checked to incriminate a companion matrix.
  bool quad_verified = false;
};

struct IncriminationCheck {
  const Matroid& m;
  const PMatrix& a1;
  int a;
  int b;
};

/// Searches M\a,b (passed as `d`) for a confining set G with G∩B1 = {x1,y1}.
/// Without `check` the incrimination of {x1,y1,a,b} is not verified.
std::optional<ConfiningSet> confining_set_find(const Matroid& d, const Matroid& n, ElementSet b1,
                                               const std::optional<IncriminationCheck>& check = std::nullopt);

struct ClauseResult {
  std::string clause;
  bool ok = false;
  std::string detail;
};

struct MegaGadgetReport {
  bool holds = false;
  std::vector<ClauseResult> clauses;
};

/// Checks each clause of the mega-gadget definition for (x,y,u,u',a,b,b'),
/// with B1 a basis of M\a,b and B2 a basis of M\b,b' for the two gadgets.
/// Gadgets are classified in relaxed mode. Throws std::invalid_argument if
/// M\a,b or M\b,b' is not 3-connected.
MegaGadgetReport mega_gadget_check(const Matroid& m, const Matroid& n, ElementSet b1, ElementSet b2, int x, int y,
                                   int u, int u2, int a, int b, int b2_elem);

/// A basis B' of M\a,b, a pair {x',y'} ⊆ B' and a B'×B'* companion matrix
/// over GF(q) for which {x',y',a,b} incriminates.
struct CompanionWitness {
  ElementSet basis;
  int x = 0;
  int y = 0;
  PMatrix matrix;
};

/// One witness per (B', {x',y'}) that admits an incriminating companion
/// matrix over GF(q), in order of B' then {x',y'}. Requires |E(M)| ≤ 10.
std::vector<CompanionWitness> incriminating_companions(const Matroid& m, int a, int b, int q,
                                                       std::uint64_t budget = kDefaultBudget);

/// q of the context matrix when it is over GF(q), otherwise `q` itself.
/// Throws std::invalid_argument for other partial fields or when q < 2.
int context_field_order(const Context& ctx, int q);

enum class Verdict { kTrue, kFalse, kUndecided };
std::string to_string(Verdict v);

struct BasisVerdict {
  Verdict verdict = Verdict::kUndecided;
  std::string reason;
  std::optional<CompanionWitness> witness;
};

/// Field order q comes from the context matrix, or from `q` when the context
/// has none.
BasisVerdict is_strengthened_basis(const Context& ctx, int q = 0, std::uint64_t budget = kDefaultBudget);
BasisVerdict is_bolstered_basis(const Context& ctx, int q = 0, std::uint64_t budget = kDefaultBudget);

}  // namespace matroidkit

#endif  // MATROIDKIT_FRAGILITY_HPP_
