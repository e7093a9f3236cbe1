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

#include "matroidkit/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <functional>
#include <stdexcept>

#include "matroidkit/pfield.hpp"

namespace matroidkit {

namespace {

ElementSet range_set(int lo, int hi) {
  ElementSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

// Rank table of a matroid on `ground` given a label-level rank oracle.
template <typename F>
Matroid from_label_rank(ElementSet ground, F&& rank_of) {
  std::vector<int> labels = ground.to_vector();
  return Matroid::from_rank_function(ground, [&](Matroid::Mask m) {
    ElementSet x;
    for (; m; m &= m - 1) x.insert(labels[std::countr_zero(m)]);
    return rank_of(x);
  });
}

class GfTables {
 public:
  explicit GfTables(int q) : q_(q), add_(q * q), mul_(q * q), inv_(q) {
    PartialField f = PartialField::gf(q);
    std::vector<RingValue> v(q);
    for (int i = 0; i < q; ++i) v[i] = f.parse_value(std::to_string(i));
    auto code = [&](const RingValue& x) {
      for (int i = 0; i < q; ++i) {
        if (v[i] == x) return i;
      }
      throw std::logic_error("field value without a code");
    };
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = code(f.add(v[a], v[b]));
        mul_[a * q + b] = code(f.mul(v[a], v[b]));
      }
      if (a != 0) inv_[a] = code(*f.inverse(v[a]));
    }
    neg_.resize(q);
    for (int a = 0; a < q; ++a) neg_[a] = code(f.neg(v[a]));
  }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }

 private:
  int q_;
  std::vector<int> add_, mul_, inv_, neg_;
};

int gf_rank(const GfTables& t, std::vector<std::vector<int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const int iv = t.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const int f = t.neg(t.mul(rows[r][c], iv));
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = t.add(rows[r][k], t.mul(f, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matroid uniform(int r, int n) {
  if (n < 0 || r < 0 || r > n || n > Matroid::kMaxElements) {
    throw std::invalid_argument("uniform matroid U_{" + std::to_string(r) + "," +
                                std::to_string(n) + "} is out of range");
  }
  return from_label_rank(range_set(1, n), [r](ElementSet x) { return std::min(r, x.size()); });
}

Matroid graphic(const std::vector<Edge>& edges) {
  ElementSet ground;
  std::map<int, Edge> by_label;
  for (const Edge& e : edges) {
    if (ground.contains(e.label)) throw std::invalid_argument("duplicate edge label");
    ground.insert(e.label);
    by_label[e.label] = e;
  }
  return from_label_rank(ground, [&](ElementSet x) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int v) {
      auto it = parent.find(v);
      if (it == parent.end()) {
        parent[v] = v;
        return v;
      }
      if (it->second == v) return v;
      const int root = find(it->second);
      parent[v] = root;
      return root;
    };
    int rank = 0;
    for (int l : x) {
      const Edge& e = by_label.at(l);
      const int a = find(e.u);
      const int b = find(e.v);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    return rank;
  });
}

Matroid mk4() {
  return graphic({{1, 1, 2}, {2, 1, 3}, {3, 2, 3}, {4, 1, 4}, {5, 2, 4}, {6, 3, 4}});
}

Matroid gf_vector_matroid(int q, const std::map<int, std::vector<int>>& columns) {
  GfTables t(q);
  ElementSet ground;
  std::size_t dim = columns.empty() ? 0 : columns.begin()->second.size();
  for (const auto& [label, v] : columns) {
    if (v.size() != dim) throw std::invalid_argument("columns have different lengths");
    for (int c : v) {
      if (c < 0 || c >= q) throw std::invalid_argument("field code out of range");
    }
    ground.insert(label);
  }
  return from_label_rank(ground, [&](ElementSet x) {
    std::vector<std::vector<int>> rows;
    for (int l : x) rows.push_back(columns.at(l));
    return gf_rank(t, std::move(rows));
  });
}

Matroid fano() {
  std::map<int, std::vector<int>> cols;
  for (int i = 1; i <= 7; ++i) cols[i] = {i & 1, (i >> 1) & 1, (i >> 2) & 1};
  return gf_vector_matroid(2, cols);
}

Matroid nonfano() { return relax(fano(), ElementSet{3, 5, 6}); }

Matroid wheel(int r) {
  if (r < 2 || 2 * r > Matroid::kMaxElements) throw std::invalid_argument("wheel rank out of range");
  std::vector<Edge> edges;
  for (int i = 1; i <= r; ++i) {
    edges.push_back({2 * i - 1, 0, i});
    edges.push_back({2 * i, i, i % r + 1});
  }
  return graphic(edges);
}

Matroid whirl(int r) {
  ElementSet rim;
  for (int i = 1; i <= r; ++i) rim.insert(2 * i);
  return relax(wheel(r), rim);
}

Matroid relax(const Matroid& m, ElementSet h) {
  if (!m.is_circuit(h) || m.rank(h) != m.rank() - 1 || !m.is_flat(h)) {
    throw std::invalid_argument("set " + h.to_string() + " is not a circuit-hyperplane");
  }
  std::vector<ElementSet> bases = m.bases();
  bases.push_back(h);
  return Matroid::from_bases(m.ground(), bases);
}

Matroid parallel_extension(const Matroid& m, int e, int f) {
  if (!m.ground().contains(e) || m.ground().contains(f)) {
    throw std::invalid_argument("parallel extension needs e in E(M) and f outside it");
  }
  return from_label_rank(m.ground().with(f), [&](ElementSet x) {
    if (!x.contains(f)) return m.rank(x);
    return m.rank(x.without(f).with(e));
  });
}

Matroid series_extension(const Matroid& m, int e, int f) {
  return parallel_extension(m.dual(), e, f).dual();
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.ground().meets(b.ground())) throw std::invalid_argument("ground sets are not disjoint");
  return from_label_rank(a.ground() | b.ground(), [&](ElementSet x) {
    return a.rank(x & a.ground()) + b.rank(x & b.ground());
  });
}

Matroid random_sparse_paving(std::mt19937_64& rng, int r, int n, int attempts) {
  Matroid u = uniform(r, n);
  std::vector<ElementSet> all = u.bases();
  std::vector<ElementSet> chosen;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < attempts; ++i) {
    const ElementSet s = all[pick(rng)];
    bool ok = true;
    for (const ElementSet& c : chosen) {
      if ((s & c).size() > r - 2) {
        ok = false;
        break;
      }
    }
    if (ok) chosen.push_back(s);
  }
  std::vector<ElementSet> bases;
  for (const ElementSet& b : all) {
    if (std::find(chosen.begin(), chosen.end(), b) == chosen.end()) bases.push_back(b);
  }
  return Matroid::from_bases(u.ground(), bases);
}

Matroid random_gf_matroid(std::mt19937_64& rng, int q, int r, int n) {
  std::uniform_int_distribution<int> code(0, q - 1);
  std::map<int, std::vector<int>> cols;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> v(r);
    for (int& c : v) c = code(rng);
    cols[i] = v;
  }
  return gf_vector_matroid(q, cols);
}

Matroid p8() {
  const std::vector<std::vector<int>> a = {{0, 1, 1, 2}, {1, 0, 1, 1}, {1, 1, 0, 1}, {2, 1, 1, 0}};
  std::map<int, std::vector<int>> cols;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> unit(4, 0);
    unit[i] = 1;
    cols[i + 1] = unit;
    std::vector<int> c(4);
    for (int r = 0; r < 4; ++r) c[r] = a[r][i];
    cols[i + 5] = c;
  }
  return gf_vector_matroid(3, cols);
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 2; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      out.push_back({"U" + std::to_string(r) + "," + std::to_string(n), uniform(r, n)});
    }
  }
  out.push_back({"M(K4)", mk4()});
  out.push_back({"F7", fano()});
  out.push_back({"F7*", fano().dual()});
  out.push_back({"F7-", nonfano()});
  out.push_back({"F7-*", nonfano().dual()});
  out.push_back({"W3", wheel(3)});
  out.push_back({"W^3", whirl(3)});
  out.push_back({"W4", wheel(4)});
  out.push_back({"W^4", whirl(4)});
  out.push_back({"P8", p8()});
  out.push_back({"U2,4+series", series_extension(uniform(2, 4), 4, 5)});
  out.push_back({"U2,4+parallel", parallel_extension(uniform(2, 4), 4, 5)});
  out.push_back({"U1,2+U1,2", direct_sum(uniform(1, 2), uniform(1, 2).relabeled({{1, 3}, {2, 4}}))});
  return out;
}

Matroid construct(const std::string& name, const std::vector<int>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw std::invalid_argument("constructor '" + name + "' takes " + std::to_string(k) +
                                  " argument(s)");
    }
  };
  if (name == "uniform") {
    need(2);
    return uniform(args[0], args[1]);
  }
  if (name == "mk4") {
    need(0);
    return mk4();
  }
  if (name == "fano") {
    need(0);
    return fano();
  }
  if (name == "nonfano") {
    need(0);
    return nonfano();
  }
  if (name == "p8") {
    need(0);
    return p8();
  }
  if (name == "wheel") {
    need(1);
    return wheel(args[0]);
  }
  if (name == "whirl") {
    need(1);
    return whirl(args[0]);
  }
  throw std::invalid_argument("unknown constructor '" + name + "'");
}

}  // namespace matroidkit
