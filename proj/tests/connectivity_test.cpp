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

#include "matroidkit/connectivity.hpp"

#include <gtest/gtest.h>

#include <random>

#include "matroidkit/catalog.hpp"
#include "support/oracles.hpp"

namespace matroidkit {
namespace {

int lambda_oracle(const Matroid& m, ElementSet x) {
  const auto b = m.bases();
  return oracle::rank_by_bases(b, x) + oracle::rank_by_bases(b, m.ground() - x) - m.rank();
}

std::vector<ElementSet> subsets(ElementSet ground) {
  std::vector<ElementSet> out;
  const std::vector<int> labels = ground.to_vector();
  for (std::uint32_t mask = 0; mask < (1u << labels.size()); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (mask & (1u << i)) s.insert(labels[i]);
    }
    out.push_back(s);
  }
  return out;
}

TEST(ConnectivityTest, LambdaExamples) {
  const Matroid u24 = uniform(2, 4);
  EXPECT_EQ(lambda(u24, ElementSet{1, 2}), 2);
  EXPECT_EQ(lambda(u24, ElementSet{}), 0);
  const Matroid k4 = mk4();
  for (const ElementSet& t : k4.triangles()) EXPECT_EQ(lambda(k4, t), 2);
}

TEST(ConnectivityTest, LambdaSymmetriesCatalogWide) {
  for (const auto& entry : builtin_catalog()) {
    const Matroid& m = entry.matroid;
    const Matroid d = m.dual();
    for (const ElementSet& x : subsets(m.ground())) {
      ASSERT_EQ(lambda(m, x), lambda(m, m.ground() - x)) << entry.name;
      ASSERT_EQ(lambda(m, x), lambda(d, x)) << entry.name;
      ASSERT_EQ(lambda(m, x), lambda_oracle(m, x)) << entry.name;
    }
  }
}

TEST(ConnectivityTest, LambdaIsSubmodular) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Matroid m = random_gf_matroid(rng, 3, 4, 9);
    for (int pair = 0; pair < 200; ++pair) {
      const ElementSet x = ElementSet::from_bits(rng() & m.ground().bits());
      const ElementSet y = ElementSet::from_bits(rng() & m.ground().bits());
      EXPECT_GE(lambda(m, x) + lambda(m, y), lambda(m, x & y) + lambda(m, x | y));
    }
  }
}

TEST(ConnectivityTest, SeparationsExamples) {
  EXPECT_TRUE(separations(uniform(2, 4), 2).empty());
  EXPECT_TRUE(is_3connected(uniform(2, 4)));
  const Matroid two = direct_sum(uniform(1, 2), uniform(1, 2).relabeled({{1, 3}, {2, 4}}));
  const auto seps = separations(two, 1);
  ASSERT_EQ(seps.size(), 1u);
  EXPECT_EQ(seps[0].side, (ElementSet{1, 2}));
  EXPECT_FALSE(is_connected(two));
  // Small sides are never separations, whatever λ is.
  const Matroid k4 = mk4();
  EXPECT_TRUE(lambda(k4, ElementSet{1}) < 2);
  EXPECT_FALSE(is_k_separation(k4, ElementSet{1}, 2));
}

TEST(ConnectivityTest, SeparationsMatchBruteForce) {
  for (const auto& entry : builtin_catalog()) {
    const Matroid& m = entry.matroid;
    for (int k = 1; k <= 3; ++k) {
      std::vector<ElementSet> expected;
      for (const ElementSet& x : subsets(m.ground())) {
        if (!x.contains(m.ground().min())) continue;
        if (x.size() >= k && m.size() - x.size() >= k && lambda_oracle(m, x) < k) {
          expected.push_back(x);
        }
      }
      std::vector<ElementSet> got;
      for (const Separation& s : separations(m, k)) got.push_back(s.side);
      EXPECT_EQ(oracle::sorted(got), oracle::sorted(expected)) << entry.name << " k=" << k;
    }
  }
}

TEST(ConnectivityTest, ThreeConnectivityPredicates) {
  EXPECT_TRUE(is_3connected(mk4()));
  EXPECT_TRUE(is_3connected(fano()));
  EXPECT_TRUE(is_3connected(wheel(4)));
  const Matroid series = series_extension(uniform(2, 4), 4, 5);
  EXPECT_TRUE(is_connected(series));
  EXPECT_FALSE(is_3connected(series));
  EXPECT_TRUE(is_3connected_up_to_series_pairs(series));
  EXPECT_TRUE(is_3connected_up_to_series_classes(series));
  EXPECT_FALSE(is_3connected_up_to_parallel_pairs(series));
  const Matroid parallel = parallel_extension(uniform(2, 4), 4, 5);
  EXPECT_TRUE(is_3connected_up_to_parallel_pairs(parallel));
  EXPECT_FALSE(is_3connected_up_to_series_pairs(parallel));
  // A series class of size three: its pairs are allowed up to classes but
  // the three-element side is not a pair.
  const Matroid longer = series_extension(series, 5, 6);
  EXPECT_TRUE(is_3connected_up_to_series_classes(longer));
  EXPECT_FALSE(is_3connected_up_to_series_pairs(longer));
  EXPECT_EQ(series_class(longer, 4), (ElementSet{4, 5, 6}));
  // A loop added to a connected matroid disconnects it.
  const Matroid with_loop = direct_sum(uniform(2, 4), uniform(0, 1).relabeled({{1, 9}}));
  EXPECT_FALSE(is_connected(with_loop));
  EXPECT_TRUE(is_connected(uniform(0, 1)));
}

TEST(ConnectivityTest, GutsAndCoguts) {
  const Matroid m = series_extension(uniform(2, 4), 4, 5);
  // A coloop is never in any guts.
  const Matroid c = direct_sum(uniform(2, 4), uniform(1, 1).relabeled({{1, 9}}));
  for (const ElementSet& x : subsets(c.ground().without(9))) {
    EXPECT_FALSE(guts_contains(c, x, c.ground().without(9) - x, ElementSet{9}));
  }
  const Matroid k4 = mk4();
  for (const ElementSet& t : k4.triangles()) {
    for (int z : k4.ground()) {
      if (!guts_contains(k4, t, k4.ground() - t, ElementSet{z})) continue;
      // Guts elements of a triangle side lie in cl(T) ∩ cl(E-T).
      EXPECT_TRUE(k4.closure(t).contains(z));
    }
    EXPECT_FALSE(guts_contains(k4, t, k4.ground() - t, t));
  }
  EXPECT_THROW(guts_contains(m, ElementSet{1}, ElementSet{2}, ElementSet{}), std::invalid_argument);
}

TEST(ConnectivityTest, GutsExcludesCogutsInThreeConnectedMatroids) {
  for (const auto& entry : builtin_catalog()) {
    const Matroid& m = entry.matroid;
    if (m.size() < 5 || !is_3connected(m)) continue;
    for (const Separation& s : separations(m, 3)) {
      for (int z : m.ground()) {
        const ElementSet zs = ElementSet::single(z);
        const ElementSet x = s.side - zs;
        const ElementSet y = s.other - zs;
        if (x.empty() || y.empty()) continue;
        if (guts_contains(m, x, y, zs)) {
          EXPECT_FALSE(coguts_contains(m, x, y, zs)) << entry.name;
        }
      }
    }
  }
}

TEST(ConnectivityTest, GutsAndCogutsLemmaCatalogWide) {
  for (const auto& entry : builtin_catalog()) {
    const Matroid& m = entry.matroid;
    if (!is_3connected(m)) continue;
    for (const Separation& s : separations(m, 3)) {
      for (const auto& [x, y] : {std::pair{s.side, s.other}, std::pair{s.other, s.side}}) {
        const int g = (x & m.closure(y)).size();
        const int c = (x & m.coclosure(y)).size();
        if (g > 0 && c > 0) {
          EXPECT_EQ(g, 1) << entry.name;
          EXPECT_EQ(c, 1) << entry.name;
        }
      }
    }
  }
}

TEST(ConnectivityTest, VerticalSeparations) {
  EXPECT_TRUE(vertical_3seps(uniform(2, 7)).empty());
  EXPECT_TRUE(vertical_3seps(mk4()).empty());
  const Matroid w4 = wheel(4);
  const auto seps = vertical_3seps(w4);
  ASSERT_FALSE(seps.empty());
  bool found = false;
  for (const auto& v : seps) {
    EXPECT_TRUE(is_vertical_3sep(w4, v.x, v.z, v.y));
    EXPECT_TRUE(w4.closure(v.x).contains(v.z) && w4.closure(v.y).contains(v.z));
    found = found || (v.x == ElementSet{1, 2, 3, 4} && v.z == 5 && v.y == ElementSet{6, 7, 8});
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(cyclic_3seps(w4).size(), vertical_3seps(w4.dual()).size());
}

TEST(ConnectivityTest, VerticalSeparationsMatchBruteForce) {
  const Matroid w4 = wheel(4);
  std::size_t expected = 0;
  for (int z : w4.ground()) {
    const ElementSet rest = w4.ground().without(z);
    for (const ElementSet& x : subsets(rest)) {
      if (!x.contains(rest.min())) continue;
      const ElementSet y = rest - x;
      const ElementSet zs = ElementSet::single(z);
      auto vertical = [&](ElementSet a, ElementSet b) {
        return a.size() >= 3 && b.size() >= 3 && lambda_oracle(w4, a) < 3 && w4.rank(a) >= 3 &&
               w4.rank(b) >= 3;
      };
      if (vertical(x | zs, y) && vertical(x, y | zs) && w4.rank(x.with(z)) == w4.rank(x) &&
          w4.rank(y.with(z)) == w4.rank(y)) {
        ++expected;
      }
    }
  }
  EXPECT_EQ(vertical_3seps(w4).size(), expected);
}

TEST(ConnectivityTest, Blocking) {
  std::mt19937_64 rng(37);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid m = random_gf_matroid(rng, 3, 3, 7);
    for (int e : m.ground()) {
      const ElementSet rest = m.ground().without(e);
      for (const ElementSet& x : subsets(rest)) {
        const ElementSet y = rest - x;
        if (blocks(m, e, x)) EXPECT_FALSE(m.closure(y).contains(e));
        if (!m.is_coloop(e)) {
          EXPECT_EQ(fully_blocks(m, e, x, y), fully_blocks_by_closure(m, e, x, y));
          ++compared;
        }
      }
    }
  }
  EXPECT_GT(compared, 1000);
  const Matroid c = direct_sum(uniform(2, 4), uniform(1, 1).relabeled({{1, 9}}));
  EXPECT_TRUE(fully_blocks_by_closure(c, 9, ElementSet{1, 2}, ElementSet{3, 4}));
  EXPECT_FALSE(fully_blocks(c, 9, ElementSet{1, 2}, ElementSet{3, 4}));
}

TEST(ConnectivityTest, PathsOfSeparations) {
  const Matroid u24 = uniform(2, 4);
  EXPECT_EQ(is_path_of_kseps(u24, {{1, 2}, {3, 4}}, 3), is_exactly_k_separating(u24, {1, 2}, 3));
  EXPECT_FALSE(is_path_of_kseps(u24, {{1, 2}, {3}, {4}}, 3));
  EXPECT_THROW(is_path_of_kseps(u24, {{1, 2}, {}, {3, 4}}, 3), std::invalid_argument);
  const Matroid w4 = wheel(4);
  EXPECT_TRUE(is_path_of_kseps(w4, {{1, 2, 3, 4}, {5}, {6, 7, 8}}, 3));
  EXPECT_FALSE(is_path_of_kseps(w4, {{1, 2, 3, 4}, {5}, {6, 7, 8}}, 2));
}

}  // namespace
}  // namespace matroidkit
