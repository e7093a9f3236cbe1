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
#include "matroidkit/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

#include "matroidkit/catalog.hpp"
#include "matroidkit/canonical.hpp"
#include "matroidkit/connectivity.hpp"
#include "matroidkit/minors.hpp"
#include "matroidkit/structure.hpp"

namespace matroidkit {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "PASS";
    case Outcome::kFail:
      return "FAIL";
    case Outcome::kHypothesesUnmet:
      return "HYPOTHESES_UNMET";
    case Outcome::kUndecided:
      return "UNDECIDED";
  }
  return "?";
}

int SuiteReport::count(Outcome o) const {
  return static_cast<int>(
      std::count_if(reports.begin(), reports.end(), [o](const VerifyReport& r) { return r.outcome == o; }));
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) {
    return r.outcome == Outcome::kFail && !r.relaxed;
  }));
}

namespace {

struct Unmet {
  std::string clause;
};

struct Undecided {
  std::string why;
};

void require(bool ok, const std::string& clause) {
  if (!ok) throw Unmet{clause};
}

VerifyReport run(const std::string& statement, const std::string& instance,
                 const std::function<void(VerifyReport&)>& body) {
  VerifyReport r;
  r.statement = statement;
  r.instance = instance;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Unmet& u) {
    r.outcome = Outcome::kHypothesesUnmet;
    r.detail = u.clause;
    r.witness_sets.clear();
    r.witness_elements.clear();
  } catch (const Undecided& u) {
    r.outcome = Outcome::kUndecided;
    r.detail = u.why;
  } catch (const BudgetExceeded& e) {
    r.outcome = Outcome::kUndecided;
    r.detail = e.what();
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

void fail(VerifyReport& r, std::string detail, std::vector<ElementSet> sets = {}, std::vector<int> elements = {}) {
  r.outcome = Outcome::kFail;
  r.detail = std::move(detail);
  r.witness_sets = std::move(sets);
  r.witness_elements = std::move(elements);
}

void pass(VerifyReport& r, std::string detail, std::vector<ElementSet> sets = {}, std::vector<int> elements = {}) {
  r.outcome = Outcome::kPass;
  r.detail = std::move(detail);
  r.witness_sets = std::move(sets);
  r.witness_elements = std::move(elements);
}

std::string str(int e) { return std::to_string(e); }

/// Ground set of the minor located by the minor search, inside E(M).
std::optional<ElementSet> located_copy(const Matroid& m, const Matroid& n) {
  const auto w = has_minor(m, n);
  if (!w) return std::nullopt;
  return m.ground() - w->contract - w->remove;
}

bool minor_of(const Matroid& m, const Matroid& n) { return has_minor(m, n).has_value(); }

bool n_fragile(const Matroid& m, const Matroid& n) {
  return minor_of(m, n) && is_fragile(m, {n});
}

/// Essential elements, treating every element as essential when M has no
/// N-minor at all.
ElementSet essential_elements(const Matroid& m, const Matroid& n) {
  if (!minor_of(m, n)) return m.ground();
  return classify_elements(m, {n}).essential;
}

std::optional<ElementSet> fan_of_size_four(const Matroid& m, std::uint64_t budget) {
  for (ElementSet f : fan_sets(m, budget)) {
    if (f.size() >= 4) return f;
  }
  return std::nullopt;
}

std::string cache_key(const Matroid& m, int q) {
  std::string key = std::to_string(q) + ":" + std::to_string(m.ground().bits()) + ":";
  key.append(m.rank_table().begin(), m.rank_table().end());
  return key;
}

bool excluded_minor_cached(const Matroid& m, int q, std::uint64_t budget) {
  static std::mutex mu;
  static std::map<std::string, bool> cache;
  const std::string key = cache_key(m, q);
  {
    std::lock_guard<std::mutex> lock(mu);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const bool value = is_excluded_minor(m, q, budget);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, value);
  return value;
}

std::string describe(const Context& ctx) {
  std::string s = "M " + ctx.m.summary() + "; N " + ctx.n.summary() + "; a=" + str(ctx.a) + " b=" + str(ctx.b) +
                  " B=" + ctx.basis.to_string() + " x=" + str(ctx.x) + " y=" + str(ctx.y);
  if (ctx.matrix) s += " A over " + ctx.matrix->field().name();
  return s;
}

// The standing setting of the delete-pair statements. Returns q.
int standing(const Context& ctx, int q, const VerifyOptions& options) {
  int order = 0;
  try {
    order = context_field_order(ctx, q);
  } catch (const std::invalid_argument&) {
    throw Unmet{"a finite field GF(q) is given"};
  }
  require(is_3connected(ctx.n), "N is 3-connected");
  require(minor_of(ctx.n, uniform(2, 4)), "N is non-binary");
  require(is_representable(ctx.n, order, options.budget), "N is GF(" + str(order) + ")-representable");
  require(excluded_minor_cached(ctx.m, order, options.budget),
          "M is an excluded minor for GF(" + str(order) + ")-representability");
  require(ctx.a != ctx.b && ctx.m.ground().contains(ElementSet{ctx.a, ctx.b}), "a and b are distinct elements of M");
  const Matroid d = ctx.deletion();
  require(is_3connected(d), "M\\a,b is 3-connected");
  require(minor_of(d, ctx.n), "M\\a,b has an N-minor");
  return order;
}

void size_bound(const Context& ctx, int extra, const VerifyOptions& options, VerifyReport& r) {
  if (options.relax_size_bounds) {
    r.relaxed = true;
    return;
  }
  require(ctx.m.size() >= ctx.n.size() + extra, "|E(M)| >= |E(N)|+" + str(extra));
}

void companion_clauses(const Context& ctx) {
  const auto problems = context_problems(ctx, true);
  if (!problems.empty()) throw Unmet{problems.front()};
}

void not_fragile(const Context& ctx) { require(!is_fragile(ctx.deletion(), {ctx.n}), "M\\a,b is not N-fragile"); }

/// A context in which the blocker of the gadget is called a.
struct Oriented {
  Context ctx;
  Gadget gadget;
};

// The expanded structural conditions of the delete-pair theorem's outcome
// (ii)(b).
Oriented outcome_iib(const Context& ctx, int q, const VerifyOptions& options) {
  companion_clauses(ctx);
  BasisVerdict bolstered;
  try {
    bolstered = is_bolstered_basis(ctx, q, options.budget);
  } catch (const std::invalid_argument& e) {
    throw Undecided{e.what()};
  }
  if (bolstered.verdict == Verdict::kUndecided) throw Undecided{bolstered.reason};
  require(bolstered.verdict == Verdict::kTrue, "B is a bolstered basis");
  const GadgetResult g = gadget_classify(ctx);
  require(g.status != GadgetResult::Status::kFragile, "M\\a,b is not N-fragile");
  if (g.status != GadgetResult::Status::kGadget) {
    throw Unmet{g.diagnostics.empty() ? "a gadget for {a,b} exists" : g.diagnostics.front()};
  }
  Oriented o{ctx, *g.gadget};
  if (o.gadget.blocker == ctx.b) std::swap(o.ctx.a, o.ctx.b);
  return o;
}

void no_triads(const Context& ctx) { require(ctx.m.triads().empty(), "M has no triads"); }

}  // namespace

// ---------------------------------------------------------------------------
// Connectivity statements.

VerifyReport verify_minor3conn(const Matroid& m, const Matroid& n, ElementSet x, ElementSet y) {
  return run("minor3conn", m.summary(), [&](VerifyReport& r) {
    require((x & y).empty() && (x | y) == m.ground() && is_k_separation(m, x, 2), "(X,Y) is a 2-separation of M");
    require(is_3connected(n), "N is 3-connected");
    const auto copy = located_copy(m, n);
    require(copy.has_value(), "N is a minor of M");
    std::optional<std::pair<int, std::string>> violation;
    for (const auto& [u_side, v_side] : {std::pair{x, y}, std::pair{y, x}}) {
      if ((u_side & *copy).size() > 1) continue;
      const ElementSet cl = m.closure(v_side);
      const ElementSet cocl = m.coclosure(v_side);
      std::optional<std::pair<int, std::string>> here;
      for (int u : u_side) {
        if (!cl.contains(u) && !minor_of(m.contraction(ElementSet::single(u)), n)) {
          here = {u, "u=" + str(u) + " lies outside cl(V) but is not N-contractible"};
          break;
        }
        if (!cocl.contains(u) && !minor_of(m.deletion(ElementSet::single(u)), n)) {
          here = {u, "u=" + str(u) + " lies outside cl*(V) but is not N-deletable"};
          break;
        }
      }
      if (!here) {
        pass(r, "U=" + u_side.to_string() + " meets E(N) in " + str((u_side & *copy).size()) + " element(s)",
             {u_side, *copy});
        return;
      }
      if (!violation) violation = here;
    }
    if (!violation) {
      fail(r, "both sides meet the located copy of N in two or more elements", {x & *copy, y & *copy});
      return;
    }
    fail(r, violation->second, {*copy}, {violation->first});
  });
}

VerifyReport verify_gutsandcoguts(const Matroid& m) {
  return run("gutsandcoguts", m.summary(), [&](VerifyReport& r) {
    require(is_3connected(m), "M is 3-connected");
    int checked = 0;
    for (const Separation& s : separations(m, 3)) {
      for (const auto& [xs, ys] : {std::pair{s.side, s.other}, std::pair{s.other, s.side}}) {
        const ElementSet guts = xs & m.closure(ys);
        const ElementSet coguts = xs & m.coclosure(ys);
        if (guts.empty() || coguts.empty()) continue;
        ++checked;
        if (guts.size() != 1 || coguts.size() != 1) {
          fail(r, "X meets cl(Y) in " + str(guts.size()) + " and cl*(Y) in " + str(coguts.size()) + " elements",
               {xs, guts, coguts});
          return;
        }
      }
    }
    pass(r, str(checked) + " separation side(s) meet both cl(Y) and cl*(Y)");
  });
}

VerifyReport verify_nice_vert_sep(const Matroid& m, const Matroid& n, ElementSet x, int z, ElementSet y) {
  return run("niceVertSep", m.summary(), [&](VerifyReport& r) {
    require(is_3connected(m), "M is 3-connected");
    require(is_vertical_3sep(m, x, z, y), "(X,z,Y) is a vertical 3-separation of M");
    require(is_3connected(n), "N is 3-connected");
    const auto copy = located_copy(m.contraction(ElementSet::single(z)), n);
    require(copy.has_value(), "N is a minor of M/z");
    for (const VerticalSeparation& v : vertical_3seps(m)) {
      if (v.z != z) continue;
      for (const auto& [xs, ys] : {std::pair{v.x, v.y}, std::pair{v.y, v.x}}) {
        if ((xs & *copy).size() > 1) continue;
        const ElementSet closed = ys.with(z);
        if (m.closure(closed) != closed || !is_vertical_3sep(m, xs, z, ys)) continue;
        pass(r, "X'=" + xs.to_string() + " and Y'=" + ys.to_string(), {xs, ys, *copy}, {z});
        return;
      }
    }
    fail(r, "no vertical 3-separation (X',z,Y') with |X'∩E(N)| <= 1 and Y'∪z closed", {*copy}, {z});
  });
}

VerifyReport verify_genfragileconn(const Matroid& m, const std::vector<Matroid>& family) {
  return run("genfragileconn", m.summary(), [&](VerifyReport& r) {
    require(!family.empty(), "the family is non-empty");
    for (const Matroid& n : family) require(is_3connected(n), "every member of the family is 3-connected");
    for (const Matroid& n : family) require(n.size() >= 4, "every member of the family has at least 4 elements");
    require(MinorOracle(family).has(m), "M has a minor in the family");
    require(is_fragile(m, family), "M is fragile");
    if (is_3connected_up_to_series_and_parallel_classes(m)) {
      pass(r, "M is 3-connected up to series and parallel classes");
      return;
    }
    for (const Separation& s : separations(m, 2)) {
      auto is_class = [&](ElementSet side) {
        const int e = side.min();
        return side.size() >= 2 && (series_class(m, e) == side || parallel_class(m, e) == side);
      };
      if (!is_class(s.side) && !is_class(s.other)) {
        fail(r, "2-separation with neither side a series or parallel class", {s.side, s.other});
        return;
      }
    }
    fail(r, "connectivity predicate failed without a separating witness");
  });
}

// ---------------------------------------------------------------------------
// Delta-Y statements.

VerifyReport verify_dyconn(const Matroid& m, ElementSet t) {
  return run("dyconn", m.summary() + " T=" + t.to_string(), [&](VerifyReport& r) {
    require(is_3connected(m), "M is 3-connected");
    require(is_coindependent_triangle(m, t), "T is a coindependent triangle of M");
    const Matroid md = delta_y(m, t);
    if (!is_3connected_up_to_series_pairs(md)) {
      fail(r, "Delta-Y result is not 3-connected up to series pairs", {t});
      return;
    }
    if (is_3connected(md)) {
      pass(r, "Delta-Y result is 3-connected", {t});
      return;
    }
    const auto fan = fan_of_size_four(m, kDefaultBudget);
    if (!fan) {
      fail(r, "Delta-Y result is not 3-connected but M has no 4-element fan", {t});
      return;
    }
    pass(r, "Delta-Y result has series pairs; M has the fan " + fan->to_string(), {t, *fan});
  });
}

VerifyReport verify_delta_round_trip(const Matroid& m, ElementSet t) {
  return run("delta_round_trip", m.summary() + " T=" + t.to_string(), [&](VerifyReport& r) {
    require(is_coindependent_triangle(m, t), "T is a coindependent triangle of M");
    const Matroid md = delta_y(m, t);
    if (!is_independent_triad(md, t)) {
      fail(r, "T is not an independent triad after Delta-Y", {t});
      return;
    }
    const Matroid back = wye_delta(md, t);
    if (!is_isomorphic(back, m)) {
      fail(r, "Y-Delta of the Delta-Y result is not isomorphic to M", {t});
      return;
    }
    pass(r, back == m ? "round trip is the identity on labels" : "round trip is an isomorphism", {t});
  });
}

VerifyReport verify_no4fans(const Matroid& m, int q, const VerifyOptions& options) {
  return run("no4fans", m.summary() + " GF(" + str(q) + ")", [&](VerifyReport& r) {
    require(excluded_minor_cached(m, q, options.budget), "M is an excluded minor for GF(" + str(q) + ")");
    require(m.size() >= 5, "|E(M)| >= 5");
    if (const auto fan = fan_of_size_four(m, options.budget)) {
      fail(r, "M has a fan with at least 4 elements", {*fan});
      return;
    }
    pass(r, "no fan has 4 or more elements");
  });
}

VerifyReport verify_osvdelta(const Matroid& m, int q, int max_steps, const VerifyOptions& options) {
  return run("osvdelta", m.summary() + " GF(" + str(q) + ")", [&](VerifyReport& r) {
    require(excluded_minor_cached(m, q, options.budget), "M is an excluded minor for GF(" + str(q) + ")");
    DeltaOrbit orbit;
    try {
      orbit = delta_star_orbit(m, max_steps);
    } catch (const std::invalid_argument& e) {
      throw Undecided{e.what()};
    }
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      if (!excluded_minor_cached(orbit.members[i], q, options.budget)) {
        fail(r, "class member " + str(static_cast<int>(i)) + " (" + orbit.members[i].summary() +
                    ") is not an excluded minor");
        return;
      }
    }
    if (!orbit.fixpoint) {
      throw Undecided{"class not closed after " + str(max_steps) + " levels; " +
                      str(static_cast<int>(orbit.members.size())) + " members certified"};
    }
    pass(r, str(static_cast<int>(orbit.members.size())) + " class member(s) certified as excluded minors");
  });
}

// ---------------------------------------------------------------------------
// Representation statements.

VerifyReport verify_incrimination(const Matroid& m, const PMatrix& a) {
  return run("incrimination", m.summary() + " A over " + a.field().name(), [&](VerifyReport& r) {
    require((a.row_set() | a.col_set()) == m.ground(), "A is indexed by E(M)");
    require(m.is_basis(a.row_set()), "the rows of A form a basis of M");
    const bool represents = is_p_matrix(a) && matroid_from(a) == m;
    const IncriminationStatus status = incrimination_status(m, a);
    if (std::holds_alternative<Represents>(status)) {
      if (!represents) {
        fail(r, "reported REPRESENTS but A does not represent M");
        return;
      }
      pass(r, "A is a P-matrix and represents M");
      return;
    }
    const auto& w = std::get<IncriminationWitness>(status);
    if (represents) {
      fail(r, "A represents M yet Z incriminates", {w.z});
      return;
    }
    if (!incriminates(m, a, w.z)) {
      fail(r, "reported witness does not incriminate on re-check", {w.z});
      return;
    }
    pass(r, "Z=" + w.z.to_string() + " incriminates (" + to_string(w.condition) + ")", {w.z});
  });
}

VerifyReport verify_allowable_pivots(const Matroid& m, const PMatrix& a, ElementSet quad) {
  return run("allowable_pivots", m.summary() + " quad=" + quad.to_string(), [&](VerifyReport& r) {
    const ElementSet rows = a.row_set();
    const ElementSet cols = a.col_set();
    require(quad.size() == 4 && (quad & rows).size() == 2 && (quad & cols).size() == 2,
            "{x,y} ⊆ B and {a,b} ⊆ B* with the quad of four elements");
    require((rows | cols) == m.ground() && m.is_basis(rows), "the rows of A form a basis of M");
    const auto xy = (quad & rows).to_vector();
    const auto ab = (quad & cols).to_vector();
    require(companion_check(m, a, ab[0], ab[1]), "A is a companion matrix of M for (a,b)");
    require(incriminates(m, a, quad).has_value(), "{x,y,a,b} incriminates (M,A)");
    const PartialField& f = a.field();
    int covered = 0;
    for (int p : rows) {
      for (int qq : cols) {
        if (qq == ab[0] || qq == ab[1]) continue;
        if (f.is_zero(a.at(p, qq))) continue;
        const bool row_lemma = p == xy[0] || p == xy[1];
        const bool zero_lemma =
            !row_lemma && ((f.is_zero(a.at(p, ab[0])) && f.is_zero(a.at(p, ab[1]))) ||
                           (f.is_zero(a.at(xy[0], qq)) && f.is_zero(a.at(xy[1], qq))));
        if (!row_lemma && !zero_lemma) continue;
        ++covered;
        if (!allowable_pivot(m, a, quad, p, qq)) {
          fail(r, std::string(row_lemma ? "x/y-row" : "zero-pattern") + " pivot on (" + str(p) + "," + str(qq) +
                      ") is not allowable",
               {quad}, {p, qq});
          return;
        }
      }
    }
    pass(r, str(covered) + " covered pivot(s) allowable");
  });
}

// ---------------------------------------------------------------------------
// Fragility statements.

VerifyReport verify_essential_bound(const Matroid& m, const Matroid& n) {
  return run("essential_bound", m.summary() + " N " + n.summary(), [&](VerifyReport& r) {
    require(minor_of(m, n), "M has an N-minor");
    const ElementSet ess = classify_elements(m, {n}).essential;
    if (ess.size() > n.size()) {
      fail(r, str(ess.size()) + " N-essential elements exceed |E(N)|", {ess});
      return;
    }
    pass(r, str(ess.size()) + " N-essential element(s)", {ess});
  });
}

// ---------------------------------------------------------------------------
// Delete-pair statements.

VerifyReport verify_nostronginbasis(const Context& ctx, int q, const VerifyOptions& options) {
  return run("nostronginbasis", describe(ctx), [&](VerifyReport& r) {
    standing(ctx, q, options);
    companion_clauses(ctx);
    const ElementSet strong = strong_elements(ctx.deletion(), ctx.n, ctx.basis) - ElementSet{ctx.x, ctx.y};
    const ElementSet bad = strong & ctx.basis;
    if (!bad.empty()) {
      fail(r, "(N,B)-strong element(s) in B outside {x,y}", {bad});
      return;
    }
    pass(r, "strong elements outside {x,y}: " + strong.to_string(), {strong});
  });
}

VerifyReport verify_atmosttwostrong(const Context& ctx, int q, const VerifyOptions& options) {
  return run("atmosttwostrong", describe(ctx), [&](VerifyReport& r) {
    standing(ctx, q, options);
    companion_clauses(ctx);
    const ElementSet strong = strong_elements(ctx.deletion(), ctx.n, ctx.basis) - ElementSet{ctx.x, ctx.y};
    if (strong.size() > 2) {
      fail(r, str(strong.size()) + " (N,B)-strong elements outside {x,y}", {strong});
      return;
    }
    pass(r, "strong elements outside {x,y}: " + strong.to_string(), {strong});
  });
}

VerifyReport verify_confiningset(const Context& ctx, int q, const VerifyOptions& options) {
  return run("confiningset", describe(ctx), [&](VerifyReport& r) {
    const int order = standing(ctx, q, options);
    const Matroid d = ctx.deletion();
    std::vector<CompanionWitness> companions;
    try {
      companions = incriminating_companions(ctx.m, ctx.a, ctx.b, order, options.budget);
    } catch (const std::invalid_argument& e) {
      throw Undecided{e.what()};
    }
    std::optional<ConfiningSet> found;
    for (const CompanionWitness& w : companions) {
      found = confining_set_find(d, ctx.n, w.basis, IncriminationCheck{ctx.m, w.matrix, ctx.a, ctx.b});
      if (found) break;
    }
    require(found.has_value(), "M\\a,b has a confining set");
    if (ctx.m.size() > ctx.n.size() + 9) {
      fail(r, "confining set exists but |E(M)| > |E(N)|+9", {found->g});
      return;
    }
    pass(r, std::string(found->cosegment ? "4-cosegment " : "two-triad set ") + found->g.to_string(), {found->g});
  });
}

VerifyReport verify_strongprops(const Context& ctx, int v, int q, const VerifyOptions& options) {
  return run("strongprops", describe(ctx) + " v=" + str(v), [&](VerifyReport& r) {
    standing(ctx, q, options);
    size_bound(ctx, 10, options, r);
    companion_clauses(ctx);
    const Matroid d = ctx.deletion();
    require(d.ground().contains(v) && !ctx.basis.contains(v), "v ∈ B*-{a,b}");
    require(strong_elements(d, ctx.n, ctx.basis).contains(v), "v is (N,B)-strong in M\\a,b");
    const ElementSet xy{ctx.x, ctx.y};
    bool first_holds = false;
    for (ElementSet t : d.triads()) {
      if (!t.contains(v)) continue;
      const ElementSet meet = t & ctx.basis;
      if (meet.empty() || !xy.contains(meet)) continue;
      first_holds = true;
      for (const auto& [e, f] : {std::pair{ctx.a, ctx.b}, std::pair{ctx.b, ctx.a}}) {
        const ElementSet s = t.without(v).with(e);
        const Matroid mfv = ctx.m.deletion(ElementSet{f, v});
        if (mfv.is_circuit(s) && mfv.is_cocircuit(s)) {
          pass(r, "triad " + t.to_string() + "; " + s.to_string() + " is a triangle-triad of M\\" + str(f) + "," +
                      str(v),
               {t, s}, {e, f});
          return;
        }
      }
    }
    if (!first_holds) {
      fail(r, "no triad of M\\a,b through v meets B inside {x,y}", {}, {v});
      return;
    }
    fail(r, "no qualifying triad yields a triangle-triad after deleting f and v", {}, {v});
  });
}

VerifyReport verify_oldwin(const Context& ctx, int q, const VerifyOptions& options) {
  return run("oldwin", describe(ctx), [&](VerifyReport& r) {
    standing(ctx, q, options);
    outcome_iib(ctx, q, options);
    require(ctx.m.closure(ElementSet{ctx.x, ctx.y}).contains(ElementSet{ctx.a, ctx.b}), "{a,b} ⊆ cl_M({x,y})");
    if (ctx.m.size() > ctx.n.size() + 8) {
      fail(r, "|E(M)| > |E(N)|+8");
      return;
    }
    pass(r, "|E(M)| <= |E(N)|+8");
  });
}

VerifyReport verify_oldwin2(const Context& ctx, int p, int q, const VerifyOptions& options) {
  return run("oldwin2", describe(ctx) + " p=" + str(p), [&](VerifyReport& r) {
    standing(ctx, q, options);
    const Oriented o = outcome_iib(ctx, q, options);
    const ElementSet xy{ctx.x, ctx.y};
    require(ctx.basis.contains(p) && !xy.contains(p) && ctx.m.closure(xy.with(o.gadget.u)).contains(p),
            "p ∈ (B-{x,y}) ∩ cl({u,x,y})");
    require(ctx.m.closure(xy.with(p)).contains(ElementSet{ctx.a, ctx.b}), "{a,b} ⊆ cl_M({p,x,y})");
    if (ctx.m.size() > ctx.n.size() + 8) {
      fail(r, "|E(M)| > |E(N)|+8", {}, {p});
      return;
    }
    pass(r, "|E(M)| <= |E(N)|+8", {}, {p});
  });
}

VerifyReport verify_easywin(const Context& ctx, int q, const VerifyOptions& options) {
  return run("easywin", describe(ctx), [&](VerifyReport& r) {
    standing(ctx, q, options);
    size_bound(ctx, 10, options, r);
    not_fragile(ctx);
    const Oriented o = outcome_iib(ctx, q, options);
    const ElementSet bxy{o.ctx.b, o.ctx.x, o.ctx.y};
    const ElementSet cl = o.ctx.m.closure(bxy);
    if (cl != bxy) {
      fail(r, "cl_M({b,x,y}) has extra elements", {bxy, cl - bxy});
      return;
    }
    pass(r, "cl_M({b,x,y}) = " + bxy.to_string(), {bxy});
  });
}

VerifyReport verify_switchbxy(const Context& ctx, int q, const VerifyOptions& options) {
  return run("switchbxy", describe(ctx), [&](VerifyReport& r) {
    standing(ctx, q, options);
    size_bound(ctx, 10, options, r);
    not_fragile(ctx);
    const Oriented o = outcome_iib(ctx, q, options);
    for (int e : {o.ctx.x, o.ctx.y}) {
      const Matroid del = o.ctx.m.deletion(ElementSet{o.ctx.a, e});
      if (!is_3connected(del) || !minor_of(del, ctx.n)) {
        fail(r, "M\\a," + str(e) + " is not 3-connected with an N-minor", {}, {o.ctx.a, e});
        return;
      }
    }
    pass(r, "M\\a,x and M\\a,y are 3-connected with N-minors", {}, {o.ctx.a});
  });
}

VerifyReport verify_wmatype1(const Context& ctx, int q, const VerifyOptions& options) {
  return run("wmatype1", describe(ctx), [&](VerifyReport& r) {
    const int order = standing(ctx, q, options);
    size_bound(ctx, 10, options, r);
    not_fragile(ctx);
    const Oriented o = outcome_iib(ctx, q, options);
    if (o.gadget.type == GadgetType::kI) {
      pass(r, "the gadget for {a,b} is Type I", {o.gadget.support()});
      return;
    }
    const int a = o.ctx.a;
    const int x = o.ctx.x;
    const Matroid del = ctx.m.deletion(ElementSet{a, x});
    if (!is_3connected(del) || !minor_of(del, ctx.n) || is_fragile(del, {ctx.n})) {
      fail(r, "gadget is Type " + to_string(o.gadget.type) + " and M\\a,x is not a non-fragile 3-connected N-deletion",
           {}, {a, x});
      return;
    }
    std::vector<CompanionWitness> companions;
    try {
      companions = incriminating_companions(ctx.m, a, x, order, options.budget);
    } catch (const std::invalid_argument& e) {
      throw Undecided{e.what()};
    }
    for (const CompanionWitness& w : companions) {
      const Context switched{ctx.m, ctx.n, a, x, w.basis, w.matrix, w.x, w.y};
      const BasisVerdict bv = is_bolstered_basis(switched, order, options.budget);
      if (bv.verdict == Verdict::kUndecided) throw Undecided{bv.reason};
      if (bv.verdict != Verdict::kTrue) continue;
      const GadgetResult g = gadget_classify(switched);
      if (g.status == GadgetResult::Status::kGadget && g.gadget->type == GadgetType::kI) {
        pass(r, "the gadget for {a,x} is Type I with basis " + w.basis.to_string(), {w.basis}, {a, x});
        return;
      }
    }
    fail(r, "no bolstered context for {a,x} has a Type I gadget", {}, {a, x});
  });
}

VerifyReport verify_notriads(const Context& ctx, int q, const VerifyOptions& options) {
  return run("notriads", describe(ctx), [&](VerifyReport& r) {
    int order = 0;
    try {
      order = context_field_order(ctx, q);
    } catch (const std::invalid_argument&) {
      throw Unmet{"a finite field GF(q) is given"};
    }
    require(is_3connected(ctx.n), "N is 3-connected");
    require(minor_of(ctx.n, uniform(2, 4)), "N is non-binary");
    require(excluded_minor_cached(ctx.m, order, options.budget),
            "M is an excluded minor for GF(" + str(order) + ")-representability");
    require(minor_of(ctx.m, ctx.n), "M has an N-minor");
    size_bound(ctx, 10, options, r);
    DeltaOrbit orbit;
    DeltaOrbit targets;
    try {
      orbit = delta_star_orbit(ctx.m, 6);
      targets = delta_star_orbit(ctx.n, 6);
    } catch (const std::invalid_argument& e) {
      throw Undecided{e.what()};
    }
    const MinorOracle oracle(targets.members);
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      const Matroid& m1 = orbit.members[i];
      if (!m1.triads().empty()) continue;
      const auto elems = m1.ground().to_vector();
      for (std::size_t p = 0; p < elems.size(); ++p) {
        for (std::size_t s = p + 1; s < elems.size(); ++s) {
          const Matroid d = m1.deletion(ElementSet{elems[p], elems[s]});
          if (is_3connected(d) && oracle.has(d)) {
            pass(r, "class member " + str(static_cast<int>(i)) + " has no triads; delete pair {" + str(elems[p]) +
                        "," + str(elems[s]) + "}",
                 {}, {elems[p], elems[s]});
            return;
          }
        }
      }
    }
    if (!orbit.fixpoint || !targets.fixpoint) throw Undecided{"Delta-Y class not closed within 6 levels"};
    fail(r, "no triad-free member of the Delta-Y class has a suitable delete pair");
  });
}

VerifyReport verify_grand_fantasy(const Context& ctx, int q, const VerifyOptions& options) {
  return run("grand_fantasy", describe(ctx), [&](VerifyReport& r) {
    standing(ctx, q, options);
    no_triads(ctx);
    size_bound(ctx, 11, options, r);
    not_fragile(ctx);
    const Oriented o = outcome_iib(ctx, q, options);
    require(o.gadget.type == GadgetType::kI, "the gadget for {a,b} is Type I");
    const Matroid d = ctx.deletion();
    const ElementSet u = ElementSet::single(o.gadget.u);
    const ElementSet ess = essential_elements(d.deletion(u), ctx.n) | essential_elements(d.contraction(u), ctx.n);
    const ElementSet rest = ctx.basis - ElementSet{ctx.x, ctx.y};
    if (!ess.contains(rest)) {
      fail(r, "element(s) of B-{x,y} essential in neither M\\a,b\\u nor M\\a,b/u", {rest - ess}, {o.gadget.u});
      return;
    }
    pass(r, "every element of " + rest.to_string() + " is essential after removing u", {rest}, {o.gadget.u});
  });
}

VerifyReport verify_subfrag3conn(const Context& ctx, int q, const VerifyOptions& options) {
  return run("subfrag3conn", describe(ctx), [&](VerifyReport& r) {
    standing(ctx, q, options);
    size_bound(ctx, 10, options, r);
    not_fragile(ctx);
    const Oriented o = outcome_iib(ctx, q, options);
    require(o.gadget.type == GadgetType::kI, "the gadget for {a,b} is Type I");
    const Matroid base = ctx.deletion().deletion(ElementSet::single(o.gadget.u)).contraction(ElementSet{o.ctx.x});
    require(!n_fragile(base, ctx.n), "M\\a,b,u/x is not N-fragile");
    const ElementSet y = ElementSet::single(o.ctx.y);
    for (const Matroid& m1 : {base.contraction(y), base.deletion(y)}) {
      if (is_3connected(m1) && n_fragile(m1, ctx.n)) {
        pass(r, "a 3-connected N-fragile minor remains after removing y", {m1.ground()});
        return;
      }
    }
    fail(r, "neither M\\a,b,u/x/y nor M\\a,b,u/x\\y is 3-connected and N-fragile", {}, {o.gadget.u, o.ctx.x, o.ctx.y});
  });
}

VerifyReport verify_gadgetsresult(const Context& ctx, int q, const VerifyOptions& options) {
  return run("gadgetsresult", describe(ctx), [&](VerifyReport& r) {
    standing(ctx, q, options);
    no_triads(ctx);
    size_bound(ctx, 11, options, r);
    not_fragile(ctx);
    if (ctx.m.rank() <= 6) {
      pass(r, "r(M) <= 6");
      return;
    }
    Budget budget(options.budget);
    const auto elems = ctx.m.ground().to_vector();
    const int n = static_cast<int>(elems.size());
    for (int k = 0; k <= 5; ++k) {
      std::vector<int> pick(k);
      std::function<bool(int, int)> choose = [&](int start, int depth) -> bool {
        if (depth == k) {
          for (int split = 0; split < (1 << k); ++split) {
            budget.spend();
            ElementSet c, del;
            for (int i = 0; i < k; ++i) ((split >> i) & 1 ? c : del).insert(pick[i]);
            const Matroid m1 = ctx.m.minor(c, del);
            if (!minor_of(m1, ctx.n) || !is_fragile(m1, {ctx.n})) continue;
            if (essential_elements(m1, ctx.n).size() < 3) continue;
            if (!is_3connected_up_to_parallel_classes(m1)) continue;
            pass(r, "fragile minor M/C\\D with C=" + c.to_string() + " D=" + del.to_string(), {c, del});
            return true;
          }
          return false;
        }
        for (int i = start; i < n; ++i) {
          pick[depth] = elems[i];
          if (choose(i + 1, depth + 1)) return true;
        }
        return false;
      };
      if (choose(0, 0)) return;
    }
    fail(r, "no N-fragile minor with three essential elements within five removals");
  });
}

// ---------------------------------------------------------------------------
// Suites.

std::vector<CatalogEntry> suite_catalog(int max_n, std::uint64_t seed, int random) {
  std::vector<CatalogEntry> out;
  for (CatalogEntry& e : builtin_catalog()) {
    if (e.matroid.size() <= max_n) out.push_back(std::move(e));
  }
  for (int r = 5; 2 * r <= max_n; ++r) {
    out.push_back({"W" + str(r), wheel(r)});
    out.push_back({"W^" + str(r), whirl(r)});
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random; ++i) {
    const int n = std::uniform_int_distribution<int>(std::min(5, max_n), max_n)(rng);
    const int r = std::uniform_int_distribution<int>(2, std::max(2, n - 2))(rng);
    if (i % 2 == 0) {
      out.push_back({"random-paving-" + str(i), random_sparse_paving(rng, r, n, 3 * n)});
    } else {
      const int q = std::array<int, 4>{2, 3, 4, 5}[std::uniform_int_distribution<int>(0, 3)(rng)];
      out.push_back({"random-gf" + str(q) + "-" + str(i), random_gf_matroid(rng, q, r, n)});
    }
  }
  return out;
}

namespace {

using Task = std::function<VerifyReport()>;

Task named(std::string instance, Task t) {
  return [instance = std::move(instance), t = std::move(t)] {
    VerifyReport r = t();
    r.instance = instance;
    return r;
  };
}

// Companion enumeration happens while tasks are generated; when it runs out
// of budget the suite records an UNDECIDED "context_search" report instead.
std::optional<std::vector<CompanionWitness>> companions_or_undecided(const Matroid& m, int a, int b, int q,
                                                                     std::uint64_t budget, const std::string& instance,
                                                                     std::vector<Task>& tasks) {
  try {
    return incriminating_companions(m, a, b, q, budget);
  } catch (const BudgetExceeded& e) {
    const std::string why = e.what();
    tasks.push_back([instance, why] {
      return run("context_search", instance, [&](VerifyReport&) { throw Undecided{why}; });
    });
    return std::nullopt;
  }
}

const std::vector<std::pair<std::string, Matroid>>& target_family() {
  static const std::vector<std::pair<std::string, Matroid>> family = {
      {"U2,4", uniform(2, 4)}, {"M(K4)", mk4()}, {"W^3", whirl(3)}, {"U2,5", uniform(2, 5)},
      {"U3,5", uniform(3, 5)}, {"F7", fano()},   {"F7*", fano().dual()}};
  return family;
}

void core_tasks(const SuiteConfig& config, std::vector<Task>& tasks) {
  const VerifyOptions options{config.budget, false};
  constexpr std::size_t kPerKind = 4;
  for (const CatalogEntry& entry : suite_catalog(config.max_n, config.seed, config.random_instances)) {
    const Matroid m = entry.matroid;
    const std::string& name = entry.name;
    tasks.push_back(named(name, [m] { return verify_gutsandcoguts(m); }));
    std::vector<std::pair<std::string, Matroid>> minors;
    for (const auto& [tn, t] : target_family()) {
      if (t.size() <= m.size() && minor_of(m, t)) minors.emplace_back(tn, t);
    }
    const auto two = separations(m, 2);
    if (!minors.empty()) {
      for (std::size_t i = 0; i < std::min(kPerKind, two.size()); ++i) {
        const Separation s = two[i];
        const auto& [tn, t] = minors.front();
        tasks.push_back(named(name + " N=" + tn + " X=" + s.side.to_string(),
                              [m, t, s] { return verify_minor3conn(m, t, s.side, s.other); }));
      }
    }
    if (is_3connected(m)) {
      const auto vert = vertical_3seps(m);
      for (std::size_t i = 0; i < std::min(kPerKind, vert.size()); ++i) {
        const VerticalSeparation v = vert[i];
        const Matroid mz = m.contraction(ElementSet::single(v.z));
        for (const auto& [tn, t] : target_family()) {
          if (t.size() > mz.size() || !minor_of(mz, t)) continue;
          tasks.push_back(named(name + " N=" + tn + " z=" + str(v.z),
                                [m, t, v] { return verify_nice_vert_sep(m, t, v.x, v.z, v.y); }));
          break;
        }
      }
      int triangles = 0;
      for (ElementSet t : m.triangles()) {
        if (!is_coindependent_triangle(m, t) || triangles++ >= static_cast<int>(kPerKind)) continue;
        tasks.push_back(named(name + " T=" + t.to_string(), [m, t] { return verify_dyconn(m, t); }));
        tasks.push_back(named(name + " T=" + t.to_string(), [m, t] { return verify_delta_round_trip(m, t); }));
      }
    }
    for (const auto& [tn, t] : minors) {
      tasks.push_back(named(name + " N=" + tn, [m, t] { return verify_genfragileconn(m, {t}); }));
      tasks.push_back(named(name + " N=" + tn, [m, t] { return verify_essential_bound(m, t); }));
    }
  }
  const std::vector<std::tuple<std::string, Matroid, int>> excluded = {
      {"U2,4", uniform(2, 4), 2}, {"U2,5", uniform(2, 5), 3}, {"U3,5", uniform(3, 5), 3}};
  for (const auto& [name, m, q] : excluded) {
    tasks.push_back(named(name + " GF(" + str(q) + ")", [m, q, options] { return verify_no4fans(m, q, options); }));
    tasks.push_back(named(name + " GF(" + str(q) + ")", [m, q, options] { return verify_osvdelta(m, q, 6, options); }));
  }
}

struct ExcludedSeed {
  std::string name;
  Matroid m;
  int q;
};

std::vector<ExcludedSeed> excluded_seeds(int max_n) {
  std::vector<ExcludedSeed> out;
  const std::vector<ExcludedSeed> all = {
      {"U2,4", uniform(2, 4), 2}, {"U2,5", uniform(2, 5), 3}, {"U3,5", uniform(3, 5), 3},
      {"U2,6", uniform(2, 6), 4}, {"F7", fano(), 3},           {"F7*", fano().dual(), 3},
      {"F7-", nonfano(), 4},      {"P8", p8(), 4}};
  for (const ExcludedSeed& s : all) {
    if (s.m.size() <= std::max(max_n, 6)) out.push_back(s);
  }
  return out;
}

void lemma_tasks(const SuiteConfig& config, std::vector<Task>& tasks) {
  const Matroid n = uniform(2, 4);
  std::vector<VerifyOptions> modes = {{config.budget, false}};
  if (config.relax_size_bounds) modes.push_back({config.budget, true});
  for (const ExcludedSeed& seed : excluded_seeds(config.max_n)) {
    const Matroid m = seed.m;
    const int q = seed.q;
    const auto elems = m.ground().to_vector();
    for (const VerifyOptions& options : modes) {
      const Context whole{m, n, elems[0], elems[1], ElementSet{}, std::nullopt, 0, 0};
      tasks.push_back(named(seed.name + " GF(" + str(q) + ")", [whole, q, options] {
        return verify_notriads(whole, q, options);
      }));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        const int a = elems[i];
        const int b = elems[j];
        const Matroid d = m.deletion(ElementSet{a, b});
        if (!is_3connected(d) || !minor_of(d, n)) continue;
        const auto companions = companions_or_undecided(
            m, a, b, q, config.budget, seed.name + " GF(" + str(q) + ") a=" + str(a) + " b=" + str(b), tasks);
        if (!companions) continue;
        for (const CompanionWitness& w : *companions) {
          const Context ctx{m, n, a, b, w.basis, w.matrix, w.x, w.y};
          const std::string label = seed.name + " GF(" + str(q) + ") a=" + str(a) + " b=" + str(b) +
                                    " B=" + w.basis.to_string() + " x=" + str(w.x) + " y=" + str(w.y);
          for (const VerifyOptions& options : modes) {
            const std::string tag = label + (options.relax_size_bounds ? " [relaxed]" : "");
            auto add = [&](auto fn) { tasks.push_back(named(tag, [ctx, options, fn] { return fn(ctx, options); })); };
            add([](const Context& c, const VerifyOptions& o) { return verify_nostronginbasis(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_atmosttwostrong(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_confiningset(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_oldwin(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_easywin(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_switchbxy(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_wmatype1(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_grand_fantasy(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_subfrag3conn(c, 0, o); });
            add([](const Context& c, const VerifyOptions& o) { return verify_gadgetsresult(c, 0, o); });
            for (int v : (d.ground() - w.basis)) {
              tasks.push_back(named(tag + " v=" + str(v), [ctx, v, options] {
                return verify_strongprops(ctx, v, 0, options);
              }));
            }
            for (int p : (w.basis - ElementSet{w.x, w.y})) {
              tasks.push_back(named(tag + " p=" + str(p), [ctx, p, options] {
                return verify_oldwin2(ctx, p, 0, options);
              }));
            }
          }
        }
      }
    }
  }
}

PMatrix random_matrix(std::mt19937_64& rng, const PartialField& f, int rows, int cols, bool signed_entries) {
  std::vector<int> rlabels(rows), clabels(cols);
  for (int i = 0; i < rows; ++i) rlabels[i] = i + 1;
  for (int j = 0; j < cols; ++j) clabels[j] = rows + j + 1;
  std::vector<std::vector<std::int64_t>> ints(rows, std::vector<std::int64_t>(cols));
  std::uniform_int_distribution<int> pick(signed_entries ? -1 : 0, signed_entries ? 1 : f.order(0) - 1);
  for (auto& row : ints) {
    for (auto& v : row) v = pick(rng);
  }
  return PMatrix::from_ints(f, rlabels, clabels, ints);
}

void representation_tasks(const SuiteConfig& config, std::vector<Task>& tasks) {
  const VerifyOptions options{config.budget, false};
  for (const ExcludedSeed& seed : excluded_seeds(config.max_n)) {
    const Matroid m = seed.m;
    const int q = seed.q;
    const std::string label = seed.name + " GF(" + str(q) + ")";
    tasks.push_back(named(label, [m, q, options] { return verify_osvdelta(m, q, 6, options); }));
    tasks.push_back(named(label, [m, q, options] { return verify_no4fans(m, q, options); }));
    if (m.size() > 7) continue;
    const auto elems = m.ground().to_vector();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        const int a = elems[i];
        const int b = elems[j];
        const auto companions = companions_or_undecided(m, a, b, q, config.budget,
                                                        label + " a=" + str(a) + " b=" + str(b), tasks);
        if (!companions) continue;
        for (const CompanionWitness& w : *companions) {
          const ElementSet quad{w.x, w.y, a, b};
          const PMatrix matrix = w.matrix;
          tasks.push_back(named(label + " B=" + w.basis.to_string() + " quad=" + quad.to_string(),
                                [m, matrix, quad] { return verify_allowable_pivots(m, matrix, quad); }));
        }
      }
    }
  }
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::vector<PartialField> fields = {PartialField::gf(2), PartialField::gf(3), PartialField::regular()};
  for (int i = 0; i < config.random_instances; ++i) {
    const PartialField& f = fields[i % fields.size()];
    const bool is_regular = f.kind(0) != FieldKind::kGF;
    const int total = std::uniform_int_distribution<int>(3, std::min(8, std::max(3, config.max_n)))(rng);
    const int rows = std::uniform_int_distribution<int>(1, total - 1)(rng);
    PMatrix a = random_matrix(rng, f, rows, total - rows, is_regular);
    if (!is_p_matrix(a)) continue;
    const Matroid m = matroid_from(a);
    const std::string label = "random-" + f.name() + "-" + str(i);
    tasks.push_back(named(label, [m, a] { return verify_incrimination(m, a); }));
    PMatrix corrupted = random_matrix(rng, f, rows, total - rows, is_regular);
    tasks.push_back(named(label + " corrupted", [m, corrupted] { return verify_incrimination(m, corrupted); }));
  }
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  std::vector<Task> tasks;
  for (const std::string& suite : config.suites) {
    if (suite == "core") {
      core_tasks(config, tasks);
    } else if (suite == "lemmas") {
      lemma_tasks(config, tasks);
    } else if (suite == "representation") {
      representation_tasks(config, tasks);
    } else {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
  }
  SuiteReport out;
  out.reports.resize(tasks.size());
  int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) out.reports[i] = tasks[i]();
      });
    }
  }
  std::stable_partition(out.reports.begin(), out.reports.end(),
                        [](const VerifyReport& r) { return r.outcome != Outcome::kPass; });
  return out;
}

}  // namespace matroidkit
