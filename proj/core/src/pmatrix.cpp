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

#include "matroidkit/pmatrix.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace matroidkit {

namespace {

std::string labels_to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

PMatrix::PMatrix(PartialField field, std::vector<int> rows, std::vector<int> cols,
                 std::vector<std::vector<RingValue>> entries)
    : field_(std::move(field)), rows_(std::move(rows)), cols_(std::move(cols)) {
  for (int x : rows_) {
    if (row_set_.contains(x)) throw std::invalid_argument("duplicate row label " + std::to_string(x));
    row_set_.insert(x);
  }
  for (int y : cols_) {
    if (col_set_.contains(y) || row_set_.contains(y)) {
      throw std::invalid_argument("column label " + std::to_string(y) + " is not distinct");
    }
    col_set_.insert(y);
  }
  if (entries.size() != rows_.size()) {
    throw std::invalid_argument("matrix has " + std::to_string(entries.size()) + " rows but " +
                                std::to_string(rows_.size()) + " row labels");
  }
  entries_.reserve(rows_.size() * cols_.size());
  for (const auto& row : entries) {
    if (row.size() != cols_.size()) {
      throw std::invalid_argument("matrix row has " + std::to_string(row.size()) +
                                  " entries but there are " + std::to_string(cols_.size()) +
                                  " column labels");
    }
    for (const RingValue& v : row) {
      field_.validate(v);
      entries_.push_back(v);
    }
  }
}

PMatrix PMatrix::from_ints(PartialField field, std::vector<int> rows, std::vector<int> cols,
                           const std::vector<std::vector<std::int64_t>>& entries) {
  std::vector<std::vector<RingValue>> values;
  for (const auto& row : entries) {
    std::vector<RingValue> r;
    for (std::int64_t v : row) r.push_back(field.from_int(v));
    values.push_back(std::move(r));
  }
  return PMatrix(std::move(field), std::move(rows), std::move(cols), std::move(values));
}

int PMatrix::row_index(int x) const {
  auto it = std::find(rows_.begin(), rows_.end(), x);
  if (it == rows_.end()) throw std::invalid_argument(std::to_string(x) + " is not a row label");
  return static_cast<int>(it - rows_.begin());
}

int PMatrix::col_index(int y) const {
  auto it = std::find(cols_.begin(), cols_.end(), y);
  if (it == cols_.end()) throw std::invalid_argument(std::to_string(y) + " is not a column label");
  return static_cast<int>(it - cols_.begin());
}

const RingValue& PMatrix::at(int x, int y) const { return entry(row_index(x), col_index(y)); }

PMatrix PMatrix::submatrix(ElementSet z) const {
  std::vector<int> r, c;
  std::vector<int> ri, ci;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (z.contains(rows_[i])) {
      r.push_back(rows_[i]);
      ri.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (z.contains(cols_[j])) {
      c.push_back(cols_[j]);
      ci.push_back(static_cast<int>(j));
    }
  }
  std::vector<std::vector<RingValue>> e;
  for (int i : ri) {
    std::vector<RingValue> row;
    for (int j : ci) row.push_back(entry(i, j));
    e.push_back(std::move(row));
  }
  return PMatrix(field_, std::move(r), std::move(c), std::move(e));
}

RingValue PMatrix::det(ElementSet z) const {
  const PMatrix s = submatrix(z);
  if (s.num_rows() != s.num_cols()) {
    throw std::invalid_argument("A[Z] is not square for Z = " + z.to_string());
  }
  return field_.det_value(s.entries_, s.num_rows());
}

std::string PMatrix::to_string() const {
  std::ostringstream os;
  os << field_.name() << " rows " << labels_to_string(rows_) << " cols " << labels_to_string(cols_);
  for (int i = 0; i < num_rows(); ++i) {
    os << "\n  ";
    for (int j = 0; j < num_cols(); ++j) os << (j ? " " : "") << field_.format(entry(i, j));
  }
  return os.str();
}

bool operator==(const PMatrix& a, const PMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

std::vector<Subdeterminant> all_subdeterminants(const PMatrix& a) {
  const int m = a.num_rows();
  const int n = a.num_cols();
  if (m + n > kMaxPMatrixLabels) {
    throw std::invalid_argument("exhaustive subdeterminant enumeration is limited to " +
                                std::to_string(kMaxPMatrixLabels) + " labels");
  }
  const PartialField& f = a.field();
  const std::uint32_t total = std::uint32_t{1} << (m + n);
  const std::uint32_t row_mask = (std::uint32_t{1} << m) - 1;
  std::vector<std::int32_t> index(total, -1);
  std::vector<RingValue> values;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t z = 0; z < total; ++z) {
    const std::uint32_t r = z & row_mask;
    const std::uint32_t c = z >> m;
    const int k = std::popcount(r);
    if (k != std::popcount(c)) continue;
    RingValue v = f.one();
    if (k > 0) {
      v = f.zero();
      const int top = 31 - std::countl_zero(r);
      const std::uint32_t rest_rows = r & ~(std::uint32_t{1} << top);
      int pos = 0;
      for (std::uint32_t cc = c; cc; cc &= cc - 1, ++pos) {
        const int col = std::countr_zero(cc);
        const RingValue& e = a.entry(top, col);
        if (f.is_zero(e)) continue;
        const std::uint32_t sub = rest_rows | ((c & ~(std::uint32_t{1} << col)) << m);
        const RingValue& minor = values[index[sub]];
        if (f.is_zero(minor)) continue;
        RingValue term = f.mul(e, minor);
        if ((k - 1 + pos) % 2) term = f.neg(term);
        v = f.add(v, term);
      }
    }
    index[z] = static_cast<std::int32_t>(values.size());
    values.push_back(v);
    masks.push_back(z);
  }
  std::vector<Subdeterminant> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ElementSet z;
    for (std::uint32_t bits = masks[i]; bits; bits &= bits - 1) {
      const int p = std::countr_zero(bits);
      z.insert(p < m ? a.rows()[p] : a.cols()[p - m]);
    }
    out.push_back({z, values[i]});
  }
  return out;
}

std::optional<ElementSet> find_non_p_subdeterminant(const PMatrix& a) {
  std::optional<ElementSet> best;
  for (const Subdeterminant& s : all_subdeterminants(a)) {
    if (!a.field().contains(s.value) && (!best || size_lex_less(s.z, *best))) best = s.z;
  }
  return best;
}

bool is_p_matrix(const PMatrix& a) { return !find_non_p_subdeterminant(a).has_value(); }

Matroid matroid_from(const PMatrix& a) {
  std::vector<ElementSet> bases;
  std::optional<ElementSet> bad;
  for (const Subdeterminant& s : all_subdeterminants(a)) {
    if (!a.field().contains(s.value)) {
      if (!bad || size_lex_less(s.z, *bad)) bad = s.z;
      continue;
    }
    if (!a.field().is_zero(s.value)) bases.push_back(a.row_set() ^ s.z);
  }
  if (bad) {
    throw NotPMatrix("matrix is not a " + a.field().name() + "-matrix: det A[" + bad->to_string() +
                         "] is outside the partial field",
                     *bad);
  }
  return Matroid::from_bases(a.ground(), bases);
}

PMatrix pivot(const PMatrix& a, int x, int y) {
  const int xi = a.row_index(x);
  const int yj = a.col_index(y);
  const PartialField& f = a.field();
  const RingValue& pv = a.entry(xi, yj);
  if (f.is_zero(pv)) {
    throw std::invalid_argument("cannot pivot on a zero entry A_{" + std::to_string(x) + "," +
                                std::to_string(y) + "}");
  }
  const std::optional<RingValue> inv = f.inverse(pv);
  if (!inv) {
    throw std::invalid_argument("pivot entry " + f.format(pv) + " is not a unit of the ring");
  }
  std::vector<int> rows = a.rows();
  std::vector<int> cols = a.cols();
  rows[xi] = y;
  cols[yj] = x;
  std::vector<std::vector<RingValue>> e(a.num_rows(), std::vector<RingValue>(a.num_cols()));
  for (int u = 0; u < a.num_rows(); ++u) {
    for (int v = 0; v < a.num_cols(); ++v) {
      if (u == xi && v == yj) {
        e[u][v] = *inv;
      } else if (u == xi) {
        e[u][v] = f.mul(*inv, a.entry(xi, v));
      } else if (v == yj) {
        e[u][v] = f.neg(f.mul(*inv, a.entry(u, yj)));
      } else {
        e[u][v] = f.sub(a.entry(u, v), f.mul(f.mul(*inv, a.entry(u, yj)), a.entry(xi, v)));
      }
    }
  }
  return PMatrix(f, std::move(rows), std::move(cols), std::move(e));
}

bool scaling_equivalent(const PMatrix& a1, const PMatrix& a2) {
  if (!(a1.field() == a2.field())) throw std::invalid_argument("matrices are over different fields");
  if (a1.row_set() != a2.row_set() || a1.col_set() != a2.col_set()) {
    throw std::invalid_argument("matrices have different row or column labels");
  }
  const PartialField& f = a1.field();
  const int m = a1.num_rows();
  const int n = a1.num_cols();
  // Work in a1's order; look a2 up by label.
  std::vector<int> r2(m), c2(n);
  for (int i = 0; i < m; ++i) r2[i] = a2.row_index(a1.rows()[i]);
  for (int j = 0; j < n; ++j) c2[j] = a2.col_index(a1.cols()[j]);
  auto v1 = [&](int i, int j) -> const RingValue& { return a1.entry(i, j); };
  auto v2 = [&](int i, int j) -> const RingValue& { return a2.entry(r2[i], c2[j]); };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f.is_zero(v1(i, j)) != f.is_zero(v2(i, j))) return false;
    }
  }
  // Row scale s and column scale t with s_i * a1_ij * t_j = a2_ij.
  std::vector<std::optional<RingValue>> s(m), t(n);
  for (int root = 0; root < m; ++root) {
    if (s[root]) continue;
    s[root] = f.one();
    std::deque<std::pair<bool, int>> queue{{true, root}};
    while (!queue.empty()) {
      auto [is_row, k] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (int j = 0; j < n; ++j) {
          if (f.is_zero(v1(k, j)) || t[j]) continue;
          auto q = f.divide(v2(k, j), f.mul(*s[k], v1(k, j)));
          if (!q || !f.in_group(*q)) return false;
          t[j] = *q;
          queue.push_back({false, j});
        }
      } else {
        for (int i = 0; i < m; ++i) {
          if (f.is_zero(v1(i, k)) || s[i]) continue;
          auto q = f.divide(v2(i, k), f.mul(v1(i, k), *t[k]));
          if (!q || !f.in_group(*q)) return false;
          s[i] = *q;
          queue.push_back({true, i});
        }
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f.is_zero(v1(i, j))) continue;
      if (!(f.mul(f.mul(*s[i], v1(i, j)), *t[j]) == v2(i, j))) return false;
    }
  }
  return true;
}

bool companion_check(const Matroid& m, const PMatrix& a, int ea, int eb) {
  if (ea == eb || !a.col_set().contains(ea) || !a.col_set().contains(eb)) {
    throw std::invalid_argument("a and b must be distinct column labels");
  }
  if (m.ground() != a.ground()) return false;
  for (int e : {ea, eb}) {
    const PMatrix minus = a.without(ElementSet::single(e));
    if (!is_p_matrix(minus)) return false;
    if (!(matroid_from(minus) == m.deletion(ElementSet::single(e)))) return false;
  }
  return true;
}

std::string to_string(IncriminationCondition c) {
  switch (c) {
    case IncriminationCondition::kDetNotInP:
      return "DET_NOT_IN_P";
    case IncriminationCondition::kDetZeroButBasis:
      return "DET_ZERO_BUT_BASIS";
    case IncriminationCondition::kDetNonzeroButDependent:
      return "DET_NONZERO_BUT_DEPENDENT";
  }
  return "?";
}

namespace {

void require_basis_shape(const Matroid& m, const PMatrix& a) {
  if (m.ground() != a.ground()) {
    throw std::invalid_argument("matrix labels " + a.ground().to_string() +
                                " differ from the ground set " + m.ground().to_string());
  }
  if (!m.is_basis(a.row_set())) {
    throw std::invalid_argument("row labels " + a.row_set().to_string() + " are not a basis of M");
  }
}

std::optional<IncriminationCondition> classify(const Matroid& m, const PMatrix& a, ElementSet z,
                                               const RingValue& d) {
  const PartialField& f = a.field();
  if (!f.contains(d)) return IncriminationCondition::kDetNotInP;
  const bool basis = m.is_basis(a.row_set() ^ z);
  if (f.is_zero(d) && basis) return IncriminationCondition::kDetZeroButBasis;
  if (!f.is_zero(d) && !basis) return IncriminationCondition::kDetNonzeroButDependent;
  return std::nullopt;
}

}  // namespace

std::optional<IncriminationWitness> incriminates(const Matroid& m, const PMatrix& a, ElementSet z) {
  require_basis_shape(m, a);
  if (!(z - a.ground()).empty()) throw std::invalid_argument("Z is not inside E(M)");
  if ((z & a.row_set()).size() != (z & a.col_set()).size()) {
    throw std::invalid_argument("A[Z] is not square for Z = " + z.to_string());
  }
  if (auto c = classify(m, a, z, a.det(z))) return IncriminationWitness{z, *c};
  return std::nullopt;
}

IncriminationStatus incrimination_status(const Matroid& m, const PMatrix& a) {
  require_basis_shape(m, a);
  std::optional<IncriminationWitness> best;
  for (const Subdeterminant& s : all_subdeterminants(a)) {
    if (best && size_lex_less(best->z, s.z)) continue;
    if (auto c = classify(m, a, s.z, s.value)) best = IncriminationWitness{s.z, *c};
  }
  if (best) return *best;
  return Represents{};
}

bool allowable_pivot(const Matroid& m, const PMatrix& a, ElementSet quad, int p, int q) {
  if (quad.size() != 4 || (quad & a.row_set()).size() != 2 || (quad & a.col_set()).size() != 2) {
    throw std::invalid_argument("quad must be two row labels and two column labels");
  }
  if (!incriminates(m, a, quad)) {
    throw std::invalid_argument("quad " + quad.to_string() + " does not incriminate (M, A)");
  }
  const PMatrix b = pivot(a, p, q);
  if (!m.is_basis(b.row_set())) return false;
  const ElementSet pq{p, q};
  const ElementSet target = quad.meets(pq) ? quad ^ pq : quad;
  return incriminates(m, b, target).has_value();
}

namespace {

struct RepresentationSearch {
  const Matroid& m;
  PartialField f;
  std::vector<int> rows, cols;
  std::vector<std::vector<RingValue>> a;
  std::vector<std::pair<int, int>> free;
  // checks[t]: submatrices (row mask, col mask) whose last free entry is t;
  // checks.back() holds those fully determined before any choice.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> checks;
  std::vector<RingValue> units;
  Budget budget;
  std::size_t limit;
  std::vector<PMatrix> found;

  bool consistent(std::uint32_t rm, std::uint32_t cm) {
    std::vector<int> ri, ci;
    for (std::uint32_t x = rm; x; x &= x - 1) ri.push_back(std::countr_zero(x));
    for (std::uint32_t x = cm; x; x &= x - 1) ci.push_back(std::countr_zero(x));
    const int k = static_cast<int>(ri.size());
    std::vector<RingValue> sub;
    sub.reserve(k * k);
    ElementSet z;
    for (int i : ri) {
      z.insert(rows[i]);
      for (int j : ci) sub.push_back(a[i][j]);
    }
    for (int j : ci) z.insert(cols[j]);
    const bool nonzero = !f.is_zero(f.det_value(sub, k));
    return nonzero == m.is_basis(ElementSet(rows) ^ z);
  }

  bool run_checks(std::size_t group) {
    for (const auto& [rm, cm] : checks[group]) {
      if (!consistent(rm, cm)) return false;
    }
    return true;
  }

  // Returns true to stop.
  bool dfs(std::size_t t) {
    budget.spend();
    if (t == free.size()) {
      found.emplace_back(f, rows, cols, a);
      return found.size() >= limit;
    }
    const auto [i, j] = free[t];
    for (const RingValue& u : units) {
      a[i][j] = u;
      if (run_checks(t) && dfs(t + 1)) return true;
    }
    a[i][j] = f.zero();
    return false;
  }
};

std::vector<PMatrix> search_representations(const Matroid& m, int q, std::optional<ElementSet> basis,
                                            std::uint64_t budget, std::size_t limit) {
  if (m.size() > 10) {
    throw std::invalid_argument("representation enumeration is limited to 10 elements");
  }
  ElementSet b;
  if (basis) {
    if (!m.is_basis(*basis)) throw std::invalid_argument(basis->to_string() + " is not a basis");
    b = *basis;
  } else {
    std::vector<ElementSet> all = m.bases();
    b = *std::min_element(all.begin(), all.end(), [](ElementSet x, ElementSet y) { return lex_less(x, y); });
  }
  RepresentationSearch s{m, PartialField::gf(q), b.to_vector(), (m.ground() - b).to_vector(),
                         {}, {}, {}, {}, Budget(budget), limit, {}};
  const int rn = static_cast<int>(s.rows.size());
  const int cn = static_cast<int>(s.cols.size());
  std::vector<std::vector<bool>> support(rn, std::vector<bool>(cn));
  for (int i = 0; i < rn; ++i) {
    for (int j = 0; j < cn; ++j) support[i][j] = m.is_basis(b.without(s.rows[i]).with(s.cols[j]));
  }
  // Spanning forest of the support graph, entries fixed to 1.
  s.a.assign(rn, std::vector<RingValue>(cn, s.f.zero()));
  std::vector<bool> row_seen(rn), col_seen(cn);
  std::vector<std::vector<bool>> fixed(rn, std::vector<bool>(cn));
  for (int root = 0; root < rn; ++root) {
    if (row_seen[root]) continue;
    row_seen[root] = true;
    std::deque<std::pair<bool, int>> queue{{true, root}};
    while (!queue.empty()) {
      auto [is_row, k] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (int j = 0; j < cn; ++j) {
          if (support[k][j] && !col_seen[j]) {
            col_seen[j] = true;
            fixed[k][j] = true;
            queue.push_back({false, j});
          }
        }
      } else {
        for (int i = 0; i < rn; ++i) {
          if (support[i][k] && !row_seen[i]) {
            row_seen[i] = true;
            fixed[i][k] = true;
            queue.push_back({true, i});
          }
        }
      }
    }
  }
  std::vector<std::vector<int>> order(rn, std::vector<int>(cn, -1));
  for (int i = 0; i < rn; ++i) {
    for (int j = 0; j < cn; ++j) {
      if (fixed[i][j]) s.a[i][j] = s.f.one();
      if (support[i][j] && !fixed[i][j]) {
        order[i][j] = static_cast<int>(s.free.size());
        s.free.emplace_back(i, j);
      }
    }
  }
  s.checks.assign(s.free.size() + 1, {});
  for (std::uint32_t rm = 1; rm < (1u << rn); ++rm) {
    const int k = std::popcount(rm);
    if (k < 2) continue;
    for (std::uint32_t cm = 1; cm < (1u << cn); ++cm) {
      if (std::popcount(cm) != k) continue;
      int last = -1;
      for (std::uint32_t x = rm; x; x &= x - 1) {
        for (std::uint32_t y = cm; y; y &= y - 1) {
          last = std::max(last, order[std::countr_zero(x)][std::countr_zero(y)]);
        }
      }
      s.checks[last < 0 ? s.free.size() : static_cast<std::size_t>(last)].emplace_back(rm, cm);
    }
  }
  for (int u = 1; u < q; ++u) s.units.push_back(s.f.parse_value(std::to_string(u)));
  if (!s.run_checks(s.free.size())) return {};
  s.dfs(0);
  std::vector<PMatrix> distinct;
  for (const PMatrix& rep : s.found) {
    bool dup = false;
    for (const PMatrix& d : distinct) dup = dup || scaling_equivalent(d, rep);
    if (!dup) distinct.push_back(rep);
  }
  return distinct;
}

}  // namespace

std::vector<PMatrix> enumerate_representations(const Matroid& m, int q, std::optional<ElementSet> basis,
                                               std::uint64_t budget) {
  return search_representations(m, q, basis, budget, static_cast<std::size_t>(-1));
}

bool is_representable(const Matroid& m, int q, std::uint64_t budget) {
  return !search_representations(m, q, std::nullopt, budget, 1).empty();
}

bool is_excluded_minor(const Matroid& m, int q, std::uint64_t budget) {
  if (is_representable(m, q, budget)) return false;
  for (int e : m.ground()) {
    const ElementSet s = ElementSet::single(e);
    if (!is_representable(m.deletion(s), q, budget)) return false;
    if (!is_representable(m.contraction(s), q, budget)) return false;
  }
  return true;
}

bool is_stabilized_by(const Matroid& m, const Matroid& n, ElementSet n_basis, int q,
                      std::uint64_t budget) {
  if (!(n.ground() - m.ground()).empty()) throw std::invalid_argument("E(N) is not inside E(M)");
  if (!n.is_basis(n_basis)) throw std::invalid_argument("X' is not a basis of N");
  const ElementSet y_prime = n.ground() - n_basis;
  bool any = false;
  for (const ElementSet& x : m.bases()) {
    if (!(n_basis - x).empty() || x.meets(y_prime)) continue;
    const ElementSet contract = x - n_basis;
    const ElementSet remove = (m.ground() - x) - y_prime;
    if (!(m.minor(contract, remove) == n)) continue;
    any = true;
    const std::vector<PMatrix> reps = enumerate_representations(m, q, x, budget);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        if (scaling_equivalent(reps[i].submatrix(n.ground()), reps[j].submatrix(n.ground()))) {
          return false;
        }
      }
    }
  }
  if (!any) throw std::invalid_argument("N is not a minor of M in the stated position");
  return true;
}

}  // namespace matroidkit
