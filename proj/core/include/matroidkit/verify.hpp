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
#ifndef MATROIDKIT_VERIFY_HPP_
#define MATROIDKIT_VERIFY_HPP_

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "matroidkit/budget.hpp"
#include "matroidkit/catalog.hpp"
#include "matroidkit/fragility.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/pmatrix.hpp"

namespace matroidkit {

enum class Outcome { kPass, kFail, kHypothesesUnmet, kUndecided };
std::string to_string(Outcome o);

/// The result of evaluating one statement on one instance.
///
/// For kHypothesesUnmet, `detail` names the first unmet clause; for
/// kUndecided it carries the budget message; for kFail it says which
/// conclusion the witness violates.
struct VerifyReport {
  std::string statement;
  std::string instance;
  Outcome outcome = Outcome::kPass;
  std::string detail;
  std::vector<ElementSet> witness_sets;
  std::vector<int> witness_elements;
  /// Size-bound hypotheses were skipped; not an instance of the statement.
  bool relaxed = false;
  std::chrono::microseconds elapsed{0};
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  bool relax_size_bounds = false;
};

// Connectivity statements.

/// (X,Y) a 2-separation of M, N a 3-connected minor of M. Some side U meets
/// the located copy of N in at most one element, and every u ∈ U outside
/// cl(V) (resp. cl*(V)) is N-contractible (resp. N-deletable).
VerifyReport verify_minor3conn(const Matroid& m, const Matroid& n, ElementSet x, ElementSet y);
/// Every 3-separation (X,Y) of a 3-connected M meeting both cl(Y) and
/// cl*(Y) on the X side meets each in exactly one element.
VerifyReport verify_gutsandcoguts(const Matroid& m);
/// Searches for a vertical 3-separation (X',z,Y') with |X'∩E(N)| ≤ 1 and
/// Y'∪z closed, where E(N) is the located copy of N in M/z.
VerifyReport verify_nice_vert_sep(const Matroid& m, const Matroid& n, ElementSet x, int z, ElementSet y);
/// An N-fragile M is 3-connected up to series and parallel classes.
VerifyReport verify_genfragileconn(const Matroid& m, const std::vector<Matroid>& family);

// Delta-Y statements.

/// Delta-Y on a coindependent triangle of a 3-connected M gives a matroid
/// that is 3-connected up to series pairs, and 3-connected unless M has a
/// 4-element fan.
VerifyReport verify_dyconn(const Matroid& m, ElementSet t);
/// Y-Delta undoes Delta-Y up to isomorphism.
VerifyReport verify_delta_round_trip(const Matroid& m, ElementSet t);
/// An excluded minor for GF(q) has no 4-element fans.
VerifyReport verify_no4fans(const Matroid& m, int q, const VerifyOptions& options = {});
/// Every member of the Delta-Y class of an excluded minor for GF(q) is an
/// excluded minor. kUndecided when the class is not closed within
/// `max_steps` levels.
VerifyReport verify_osvdelta(const Matroid& m, int q, int max_steps = 6, const VerifyOptions& options = {});

// Representation statements.

/// Either A is a P-matrix representing M, or some Z incriminates (M,A), and
/// not both.
VerifyReport verify_incrimination(const Matroid& m, const PMatrix& a);
/// Every pivot covered by either allowable-pivot lemma for the companion
/// matrix A and the incriminating quad is allowable.
VerifyReport verify_allowable_pivots(const Matroid& m, const PMatrix& a, ElementSet quad);

// Fragility statements.

/// M has at most |E(N)| N-essential elements.
VerifyReport verify_essential_bound(const Matroid& m, const Matroid& n);

// Delete-pair statements. Each first certifies the standing setting: N is
// 3-connected, non-binary and GF(q)-representable, M is an excluded minor
// for GF(q) and M\a,b is 3-connected with an N-minor. That N is a strong
// stabilizer is assumed. The field order comes from the context matrix, or
// from q when the context has none.

VerifyReport verify_nostronginbasis(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_atmosttwostrong(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_confiningset(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_strongprops(const Context& ctx, int v, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_oldwin(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_oldwin2(const Context& ctx, int p, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_easywin(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_switchbxy(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_wmatype1(const Context& ctx, int q = 0, const VerifyOptions& options = {});
/// Uses only M, N and the field: some member of the Delta-Y class of M has
/// no triads and a delete pair whose deletion is 3-connected with a minor
/// in the Delta-Y class of N.
VerifyReport verify_notriads(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_grand_fantasy(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_subfrag3conn(const Context& ctx, int q = 0, const VerifyOptions& options = {});
VerifyReport verify_gadgetsresult(const Context& ctx, int q = 0, const VerifyOptions& options = {});

// Suites.

struct SuiteConfig {
  /// Any of "core", "lemmas", "representation".
  std::vector<std::string> suites;
  int max_n = 8;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  /// 0 selects the available hardware parallelism.
  int threads = 0;
  int random_instances = 200;
  /// Adds size-bound-relaxed runs of the delete-pair statements.
  bool relax_size_bounds = false;
};

struct SuiteReport {
  /// Non-PASS outcomes first, otherwise in generation order.
  std::vector<VerifyReport> reports;
  int count(Outcome o) const;
  /// FAIL outcomes outside relaxed runs.
  int failures() const;
};

/// Deterministic in (config.seed, config.budget, config.max_n). Throws
/// std::invalid_argument on an unknown suite name.
SuiteReport run_suite(const SuiteConfig& config);

/// The 3-connected instances swept by the suites: built-in constructors up
/// to max_n elements, then `random` seeded random matroids.
std::vector<CatalogEntry> suite_catalog(int max_n, std::uint64_t seed, int random);

}  // namespace matroidkit

#endif  // MATROIDKIT_VERIFY_HPP_
