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

#include "matroidkit/fragility.hpp"

#include <algorithm>
#include <stdexcept>

#include "matroidkit/connectivity.hpp"
#include "matroidkit/minors.hpp"
#include "matroidkit/structure.hpp"

namespace matroidkit {

ElementClassification classify_elements(const Matroid& m, const std::vector<Matroid>& family) {
  const MinorOracle oracle(family);
  if (!oracle.has(m)) throw std::invalid_argument("M has no minor in the target family");
  ElementClassification c;
  for (int e : m.ground()) {
    const ElementSet s = ElementSet::single(e);
    const bool del = oracle.has(m.deletion(s));
    const bool con = oracle.has(m.contraction(s));
    if (del) c.deletable.insert(e);
    if (con) c.contractible.insert(e);
    if (del && con) c.flexible.insert(e);
    if (!del && !con) c.essential.insert(e);
  }
  return c;
}

bool is_fragile(const Matroid& m, const std::vector<Matroid>& family) {
  return classify_elements(m, family).flexible.empty();
}

namespace {

void require_basis(const Matroid& m, ElementSet basis) {
  if (!m.is_basis(basis)) throw std::invalid_argument(basis.to_string() + " is not a basis");
}

std::string label_list(ElementSet s) { return s.to_string(); }

}  // namespace

ElementSet robust_elements(const Matroid& m, const Matroid& n, ElementSet basis) {
  require_basis(m, basis);
  const MinorOracle oracle({n});
  ElementSet out;
  for (int e : m.ground()) {
    const ElementSet s = ElementSet::single(e);
    if (oracle.has(basis.contains(e) ? m.contraction(s) : m.deletion(s))) out.insert(e);
  }
  return out;
}

ElementSet strong_elements(const Matroid& m, const Matroid& n, ElementSet basis) {
  require_basis(m, basis);
  const MinorOracle oracle({n});
  ElementSet out;
  for (int e : m.ground()) {
    const ElementSet s = ElementSet::single(e);
    const Matroid reduced = basis.contains(e) ? simplify(m.contraction(s)) : cosimplify(m.deletion(s));
    if (is_3connected(reduced) && oracle.has(reduced)) out.insert(e);
  }
  return out;
}

std::vector<std::string> context_problems(const Context& ctx, bool with_matrix) {
  std::vector<std::string> out;
  const ElementSet ab{ctx.a, ctx.b};
  if (ctx.a == ctx.b || !ctx.m.ground().contains(ab)) {
    out.push_back("a and b must be distinct elements of M");
    return out;
  }
  const Matroid d = ctx.deletion();
  if (!is_3connected(d)) out.push_back("M\\a,b is not 3-connected");
  if (!has_minor(d, ctx.n)) out.push_back("M\\a,b has no N-minor");
  if (!d.ground().contains(ctx.basis) || !d.is_basis(ctx.basis)) {
    out.push_back("B is not a basis of M\\a,b");
  } else if (!ctx.m.is_basis(ctx.basis)) {
    out.push_back("B is not a basis of M");
  }
  if (ctx.x == ctx.y || !ctx.basis.contains(ElementSet{ctx.x, ctx.y})) out.push_back("{x,y} is not a pair inside B");
  if (!with_matrix || !out.empty()) return out;
  if (!ctx.matrix) {
    out.push_back("no companion matrix given");
    return out;
  }
  const PMatrix& a = *ctx.matrix;
  if (a.row_set() != ctx.basis || a.ground() != ctx.m.ground()) {
    out.push_back("A is not a B×B* matrix over E(M)");
    return out;
  }
  if (!companion_check(ctx.m, a, ctx.a, ctx.b)) out.push_back("A is not a companion matrix of M for (a,b)");
  if (!incriminates(ctx.m, a, ElementSet{ctx.x, ctx.y, ctx.a, ctx.b})) out.push_back("{x,y,a,b} does not incriminate (M,A)");
  return out;
}

std::string to_string(GadgetType t) {
  switch (t) {
    case GadgetType::kI:
      return "I";
    case GadgetType::kII:
      return "II";
    case GadgetType::kIII:
      return "III";
  }
  return "?";
}

std::string to_string(GadgetResult::Status s) {
  switch (s) {
    case GadgetResult::Status::kFragile:
      return "FRAGILE";
    case GadgetResult::Status::kGadget:
      return "GADGET";
    case GadgetResult::Status::kHypothesesUnmet:
      return "HYPOTHESES_UNMET";
  }
  return "?";
}

ElementSet Gadget::support() const {
  ElementSet s{x, y, u};
  if (type != GadgetType::kI && z) s.insert(*z);
  if (type == GadgetType::kIII && w) s.insert(*w);
  return s;
}

BlockingResult gadget_blocking(const Matroid& m, const Gadget& g, int a, int b) {
  const ElementSet support = g.support();
  const ElementSet guts = m.closure(ElementSet{g.x, g.y});
  const bool a_blocks = guts.contains(b) && m.coclosure(support.with(b)).contains(a);
  const bool b_blocks = guts.contains(a) && m.coclosure(support.with(a)).contains(b);
  if (!a_blocks && !b_blocks) {
    throw std::invalid_argument("neither a nor b blocks in the gadget");
  }
  const int blocker = a_blocks ? a : b;
  return {blocker, !m.closure(support).contains(blocker)};
}

namespace {

struct FanShapes {
  std::vector<ElementSet> fan_sets;

  bool maximal_fan(const Matroid& d, const std::vector<int>& order) const {
    if (!is_fan_ordering(d, order)) return false;
    const ElementSet f(order);
    return std::none_of(fan_sets.begin(), fan_sets.end(), [&](ElementSet g) { return g != f && g.contains(f); });
  }
};

}  // namespace

GadgetResult gadget_classify(const Context& ctx, const GadgetOptions& options) {
  GadgetResult result;
  result.relaxed = options.relaxed;
  if (!options.relaxed) {
    if (!ctx.matrix) throw std::invalid_argument("context has no companion matrix");
    if (!incriminates(ctx.m, *ctx.matrix, ElementSet{ctx.x, ctx.y, ctx.a, ctx.b})) {
      throw std::invalid_argument("{x,y,a,b} does not incriminate (M,A)");
    }
  }
  result.diagnostics = context_problems(ctx, !options.relaxed);
  if (!result.diagnostics.empty()) return result;

  const Matroid d = ctx.deletion();
  const int x = ctx.x;
  const int y = ctx.y;
  if (is_fragile(d, {ctx.n})) {
    result.status = GadgetResult::Status::kFragile;
    return result;
  }
  const ElementSet bstar = d.ground() - ctx.basis;
  const ElementSet strong = strong_elements(d, ctx.n, ctx.basis) & bstar;
  result.candidates = strong.to_vector();
  if (strong.empty()) {
    result.diagnostics.push_back("no (N,B)-strong element in B*-{a,b}");
    return result;
  }
  const ElementSet robust = robust_elements(d, ctx.n, ctx.basis);
  const std::vector<ElementSet> triads = d.triads();
  const FanShapes shapes{fan_sets(d)};
  const ElementSet others = ctx.basis - ElementSet{x, y};

  for (int u : result.candidates) {
    const std::string tag = "u=" + std::to_string(u) + ": ";
    const ElementSet uxy{u, x, y};
    bool unique = true;
    for (ElementSet t : triads) unique = unique && (!t.contains(u) || t == uxy);
    if (!unique || !d.is_cocircuit(uxy)) {
      result.diagnostics.push_back(tag + "{u,x,y} is not the unique triad of M\\a,b containing u");
      continue;
    }
    if (!ctx.m.is_cocircuit(ElementSet{x, y, u, ctx.a, ctx.b})) {
      result.diagnostics.push_back(tag + "{x,y,u,a,b} is not a cocircuit of M");
      continue;
    }
    if (!ctx.m.is_circuit(ElementSet{ctx.a, x, y}) && !ctx.m.is_circuit(ElementSet{ctx.b, x, y})) {
      result.diagnostics.push_back(tag + "no triangle {d,x,y} with d in {a,b}");
      continue;
    }

    std::optional<std::pair<int, int>> iii_robust_w, iii_any;
    for (int z : others) {
      for (int w : bstar - ElementSet::single(u)) {
        if (!(robust - ElementSet{u, x, y, z, w}).empty()) continue;
        if (!shapes.maximal_fan(d, {w, z, x, u, y})) continue;
        if (!iii_any) iii_any = {z, w};
        if (!iii_robust_w && robust.contains(w)) iii_robust_w = {z, w};
      }
    }
    std::optional<int> ii_z;
    for (int z : others) {
      if (!(robust - ElementSet{u, x, y, z}).empty()) continue;
      if (shapes.maximal_fan(d, {z, u, x, y})) {
        ii_z = z;
        break;
      }
    }
    Gadget g;
    g.x = x;
    g.y = y;
    g.u = u;
    if (iii_robust_w) {
      g.type = GadgetType::kIII;
      g.z = iii_robust_w->first;
      g.w = iii_robust_w->second;
    } else if (ii_z && robust.contains(*ii_z)) {
      g.type = GadgetType::kII;
      g.z = ii_z;
    } else if (iii_any && robust.contains(iii_any->first)) {
      g.type = GadgetType::kII;
      g.z = iii_any->first;
    } else if ((robust - uxy).empty()) {
      g.type = GadgetType::kI;
    } else {
      result.diagnostics.push_back(tag + "robust elements " + label_list(robust - uxy) +
                                   " lie outside every allowed gadget shape");
      continue;
    }
    try {
      const BlockingResult blocking = gadget_blocking(ctx.m, g, ctx.a, ctx.b);
      g.blocker = blocking.blocker;
      g.fully_blocks = blocking.fully_blocks;
    } catch (const std::invalid_argument& e) {
      result.diagnostics.push_back(tag + e.what());
      continue;
    }
    result.status = GadgetResult::Status::kGadget;
    result.gadget = g;
    return result;
  }
  return result;
}

std::optional<ConfiningSet> confining_set_find(const Matroid& d, const Matroid& n, ElementSet b1,
                                               const std::optional<IncriminationCheck>& check) {
  require_basis(d, b1);
  std::vector<ConfiningSet> found;
  for (ElementSet c : cosegments(d)) {
    const std::vector<int> v = c.to_vector();
    const std::size_t k = v.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (std::size_t l = j + 1; l < k; ++l) {
          for (std::size_t h = l + 1; h < k; ++h) {
            const ElementSet g{v[i], v[j], v[l], v[h]};
            if ((g & b1).size() != 2) continue;
            ConfiningSet cs;
            cs.g = g;
            cs.cosegment = true;
            found.push_back(cs);
          }
        }
      }
    }
  }
  const std::vector<ElementSet> triads = d.triads();
  std::optional<ElementSet> strong;
  for (std::size_t i = 0; i < triads.size(); ++i) {
    for (std::size_t j = i + 1; j < triads.size(); ++j) {
      if ((triads[i] & triads[j]).size() != 1) continue;
      const ElementSet g = triads[i] | triads[j];
      if ((g & b1).size() != 2) continue;
      if (!strong) strong = strong_elements(d, n, b1);
      if (!(g - b1).meets(*strong)) continue;
      ConfiningSet cs;
      cs.g = g;
      cs.t1 = triads[i];
      cs.t2 = triads[j];
      found.push_back(cs);
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const ConfiningSet& p, const ConfiningSet& q) { return size_lex_less(p.g, q.g); });
  for (ConfiningSet& cs : found) {
    const std::vector<int> xy = (cs.g & b1).to_vector();
    cs.x1 = xy[0];
    cs.y1 = xy[1];
    if (check) {
      if (!incriminates(check->m, check->a1, ElementSet{cs.x1, cs.y1, check->a, check->b})) continue;
      cs.quad_verified = true;
    }
    return cs;
  }
  return std::nullopt;
}

MegaGadgetReport mega_gadget_check(const Matroid& m, const Matroid& n, ElementSet b1, ElementSet b2, int x, int y,
                                   int u, int u2, int a, int b, int b2_elem) {
  MegaGadgetReport report;
  auto clause = [&](std::string name, bool ok, std::string detail = {}) {
    report.clauses.push_back({std::move(name), ok, std::move(detail)});
  };
  const ElementSet outer{a, b, b2_elem};
  const ElementSet inner{x, y, u, u2};
  const bool distinct = outer.size() == 3 && inner.size() == 4 && !outer.meets(inner) &&
                        m.ground().contains(outer | inner);
  clause("distinct", distinct, "x,y,u,u' distinct elements of M\\a,b,b'");
  if (!distinct) return report;
  const Matroid dab = m.deletion(ElementSet{a, b});
  const Matroid dbb = m.deletion(ElementSet{b, b2_elem});
  if (!is_3connected(dab)) throw std::invalid_argument("M\\a,b is not 3-connected");
  if (!is_3connected(dbb)) throw std::invalid_argument("M\\b,b' is not 3-connected");
  clause("M\\a,b not N-fragile", has_minor(dab, n) && !is_fragile(dab, {n}));
  clause("M\\b,b' not N-fragile", has_minor(dbb, n) && !is_fragile(dbb, {n}));

  auto classify = [&](int p, int q, ElementSet basis, int gx, int gy) {
    Context ctx{m, n, p, q, basis, std::nullopt, gx, gy};
    return gadget_classify(ctx, {.relaxed = true});
  };
  const GadgetResult g1 = classify(a, b, b1, x, y);
  const bool g1_ok = g1.status == GadgetResult::Status::kGadget && g1.gadget->type == GadgetType::kI &&
                     g1.gadget->u == u;
  clause("gadget for {a,b} is ({x,y},u) of Type I", g1_ok,
         g1.gadget ? "classified as Type " + to_string(g1.gadget->type) + " with u=" + std::to_string(g1.gadget->u)
                   : to_string(g1.status));
  clause("b in cl({x,y})", m.closure(ElementSet{x, y}).contains(b));
  {
    Gadget g{GadgetType::kI, x, y, u, std::nullopt, std::nullopt, 0, false};
    bool ok = false;
    std::string detail;
    try {
      const BlockingResult r = gadget_blocking(m, g, a, b);
      ok = r.blocker == a && r.fully_blocks;
      detail = "blocker " + std::to_string(r.blocker) + (r.fully_blocks ? ", fully" : ", not fully");
    } catch (const std::invalid_argument& e) {
      detail = e.what();
    }
    clause("a fully blocks in ({x,y},u)", ok, detail);
  }

  std::optional<Gadget> second;
  for (auto [gx, gy] : {std::pair{u, y}, std::pair{y, u}}) {
    const GadgetResult r = classify(b, b2_elem, b2, gx, gy);
    if (r.status != GadgetResult::Status::kGadget || r.gadget->u != u2) continue;
    if (r.gadget->type == GadgetType::kI ||
        (r.gadget->type == GadgetType::kII && r.gadget->z && *r.gadget->z == a)) {
      second = r.gadget;
      break;
    }
  }
  clause("gadget for {b,b'} is ({u,y},u') of Type I, or (u,y,u',a) or (y,u,u',a) of Type II", second.has_value(),
         second ? "Type " + to_string(second->type) : "no matching classification");
  clause("b' in cl({u,y})", m.closure(ElementSet{u, y}).contains(b2_elem));
  {
    bool ok = false;
    std::string detail = "no gadget";
    if (second) {
      try {
        const BlockingResult r = gadget_blocking(m, *second, b, b2_elem);
        ok = r.blocker == b && r.fully_blocks;
        detail = "blocker " + std::to_string(r.blocker) + (r.fully_blocks ? ", fully" : ", not fully");
      } catch (const std::invalid_argument& e) {
        detail = e.what();
      }
    }
    clause("b fully blocks in the gadget for {b,b'}", ok, detail);
  }
  report.holds = std::all_of(report.clauses.begin(), report.clauses.end(), [](const ClauseResult& c) { return c.ok; });
  return report;
}

namespace {

PMatrix with_columns(const PMatrix& r, int a, const std::vector<RingValue>& va, int b,
                     const std::vector<RingValue>& vb) {
  std::vector<int> cols = r.cols();
  cols.push_back(a);
  if (!vb.empty()) cols.push_back(b);
  std::sort(cols.begin(), cols.end());
  std::vector<std::vector<RingValue>> e(r.num_rows());
  for (int i = 0; i < r.num_rows(); ++i) {
    for (int c : cols) {
      if (c == a) {
        e[i].push_back(va[i]);
      } else if (c == b && !vb.empty()) {
        e[i].push_back(vb[i]);
      } else {
        e[i].push_back(r.at(r.rows()[i], c));
      }
    }
  }
  return PMatrix(r.field(), r.rows(), std::move(cols), std::move(e));
}

// Every column over the field whose addition to r represents `target`.
std::vector<std::vector<RingValue>> extensions(const PMatrix& r, int label, const Matroid& target, Budget& budget) {
  const std::vector<RingValue> elems = r.field().elements();
  const int rows = r.num_rows();
  std::vector<std::vector<RingValue>> out;
  std::vector<std::size_t> idx(rows, 0);
  while (true) {
    budget.spend();
    std::vector<RingValue> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = elems[idx[i]];
    if (matroid_from(with_columns(r, label, v, -1, {})) == target) out.push_back(v);
    int k = 0;
    while (k < rows && ++idx[k] == elems.size()) idx[k++] = 0;
    if (k == rows) break;
  }
  return out;
}

}  // namespace

int context_field_order(const Context& ctx, int q) {
  if (ctx.matrix) {
    const PartialField& f = ctx.matrix->field();
    if (f.components() != 1 || f.kind(0) != FieldKind::kGF) {
      throw std::invalid_argument("basis predicates need a matrix over a finite field GF(q)");
    }
    return f.order(0);
  }
  if (q < 2) throw std::invalid_argument("no field order given");
  return q;
}

std::vector<CompanionWitness> incriminating_companions(const Matroid& m, int a, int b, int q, std::uint64_t budget) {
  if (m.size() > 10) throw std::invalid_argument("companion search is limited to 10 elements");
  Budget spend(budget);
  const Matroid d = m.deletion(ElementSet{a, b});
  const Matroid del_a = m.deletion(ElementSet::single(a));
  const Matroid del_b = m.deletion(ElementSet::single(b));
  std::vector<ElementSet> bases = d.bases();
  std::sort(bases.begin(), bases.end(), lex_less);
  std::vector<CompanionWitness> out;
  for (ElementSet basis : bases) {
    if (!m.is_basis(basis)) continue;
    const std::vector<int> rows = basis.to_vector();
    std::vector<std::pair<int, int>> pending;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) pending.emplace_back(rows[i], rows[j]);
    }
    for (const PMatrix& r : enumerate_representations(d, q, basis, budget - std::min(budget, spend.used()))) {
      if (pending.empty()) break;
      const auto cols_a = extensions(r, a, del_b, spend);
      if (cols_a.empty()) continue;
      const auto cols_b = extensions(r, b, del_a, spend);
      for (const auto& va : cols_a) {
        for (const auto& vb : cols_b) {
          if (pending.empty()) break;
          spend.spend();
          const PMatrix full = with_columns(r, a, va, b, vb);
          for (auto it = pending.begin(); it != pending.end();) {
            if (incriminates(m, full, ElementSet{it->first, it->second, a, b})) {
              out.push_back({basis, it->first, it->second, full});
              it = pending.erase(it);
            } else {
              ++it;
            }
          }
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CompanionWitness& p, const CompanionWitness& w) {
    if (p.basis != w.basis) return lex_less(p.basis, w.basis);
    return std::pair{p.x, p.y} < std::pair{w.x, w.y};
  });
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "TRUE";
    case Verdict::kFalse:
      return "FALSE";
    case Verdict::kUndecided:
      return "UNDECIDED";
  }
  return "?";
}

BasisVerdict is_strengthened_basis(const Context& ctx, int q, std::uint64_t budget) {
  const int order = context_field_order(ctx, q);
  const Matroid d = ctx.deletion();
  const ElementSet strong = strong_elements(d, ctx.n, ctx.basis) - ElementSet{ctx.x, ctx.y};
  if (strong.size() == 1) {
    const int u = strong.min();
    if (d.is_cocircuit(ElementSet{u, ctx.x, ctx.y})) {
      return {Verdict::kTrue, "clause (i): u=" + std::to_string(u) + " is the only strong element and {u,x,y} is a triad",
              std::nullopt};
    }
    return {Verdict::kFalse, "the only strong element " + std::to_string(u) + " does not form a triad with x,y",
            std::nullopt};
  }
  if (strong.size() > 1) {
    return {Verdict::kFalse, std::to_string(strong.size()) + " strong elements outside {x,y}: " + strong.to_string(),
            std::nullopt};
  }
  std::vector<CompanionWitness> all;
  try {
    all = incriminating_companions(ctx.m, ctx.a, ctx.b, order, budget);
  } catch (const BudgetExceeded& e) {
    return {Verdict::kUndecided, e.what(), std::nullopt};
  }
  for (const CompanionWitness& w : all) {
    const ElementSet s = strong_elements(d, ctx.n, w.basis) - ElementSet{w.x, w.y};
    if (!s.empty()) {
      return {Verdict::kFalse, "basis " + w.basis.to_string() + " has strong elements " + s.to_string(), w};
    }
  }
  return {Verdict::kTrue,
          "clause (ii): no strong elements for any of " + std::to_string(all.size()) + " incriminating companions",
          std::nullopt};
}

BasisVerdict is_bolstered_basis(const Context& ctx, int q, std::uint64_t budget) {
  const BasisVerdict s = is_strengthened_basis(ctx, q, budget);
  if (s.verdict != Verdict::kTrue) {
    return {s.verdict == Verdict::kUndecided ? Verdict::kUndecided : Verdict::kFalse, "not strengthened: " + s.reason,
            s.witness};
  }
  const int order = context_field_order(ctx, q);
  const Matroid d = ctx.deletion();
  const ElementSet xy{ctx.x, ctx.y};
  const ElementSet strong = strong_elements(d, ctx.n, ctx.basis) - xy;
  std::vector<CompanionWitness> all;
  try {
    all = incriminating_companions(ctx.m, ctx.a, ctx.b, order, budget);
  } catch (const BudgetExceeded& e) {
    return {Verdict::kUndecided, e.what(), std::nullopt};
  }
  if (strong.empty()) {
    const int mine = (robust_elements(d, ctx.n, ctx.basis) - xy).size();
    for (const CompanionWitness& w : all) {
      const int theirs = (robust_elements(d, ctx.n, w.basis) - ElementSet{w.x, w.y}).size();
      if (theirs > mine) {
        return {Verdict::kFalse,
                "basis " + w.basis.to_string() + " has " + std::to_string(theirs) + " robust elements, more than " +
                    std::to_string(mine),
                w};
      }
    }
    return {Verdict::kTrue, "no incriminating companion has more robust elements", std::nullopt};
  }
  const int u = strong.min();
  const int mine = robust_elements(d, ctx.n, ctx.basis).size();
  for (const CompanionWitness& w : all) {
    if (ElementSet{w.x, w.y} != xy || w.basis.contains(u)) continue;
    if (strong_elements(d, ctx.n, w.basis) != ElementSet::single(u)) continue;
    const int theirs = robust_elements(d, ctx.n, w.basis).size();
    if (theirs > mine) {
      return {Verdict::kFalse,
              "basis " + w.basis.to_string() + " has " + std::to_string(theirs) + " robust elements, more than " +
                  std::to_string(mine),
              w};
    }
  }
  return {Verdict::kTrue, "no qualifying companion has more robust elements", std::nullopt};
}

}  // namespace matroidkit
