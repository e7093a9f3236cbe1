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

#include "matroidkit/pfield.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"

namespace matroidkit {
namespace {

TEST(PartialFieldTest, RegularMembership) {
  const PartialField f = PartialField::regular();
  EXPECT_TRUE(f.contains(f.from_int(-1)));
  EXPECT_TRUE(f.contains(f.zero()));
  // Units of Z are ±1, so 2 is outside G.
  EXPECT_FALSE(f.contains(f.from_int(2)));
  EXPECT_FALSE(f.inverse(f.from_int(2)).has_value());
}

TEST(PartialFieldTest, DyadicMembershipAgainstPowersOfTwo) {
  const PartialField f = PartialField::dyadic();
  std::set<std::int64_t> powers;
  for (int k = 0; k <= 10; ++k) {
    powers.insert(std::int64_t{1} << k);
    powers.insert(-(std::int64_t{1} << k));
  }
  for (std::int64_t v = -40; v <= 40; ++v) {
    EXPECT_EQ(f.contains(f.from_int(v)), v == 0 || powers.count(v) > 0) << v;
  }
  EXPECT_TRUE(f.contains(f.from_int(-8)));
  EXPECT_FALSE(f.contains(f.from_int(3)));
  EXPECT_TRUE(f.contains(f.parse_value("-1/4")));
  EXPECT_FALSE(f.contains(f.parse_value("3/4")));
}

TEST(PartialFieldTest, Multiplication) {
  const PartialField gf3 = PartialField::gf(3);
  EXPECT_EQ(gf3.mul(gf3.from_int(2), gf3.from_int(2)), gf3.one());
  const PartialField d = PartialField::dyadic();
  EXPECT_EQ(d.mul(d.parse_value("1/2"), d.from_int(-4)), d.from_int(-2));
  for (const char* name : {"gf2", "gf4", "gf7", "gf9", "regular", "dyadic", "product(gf2,gf3)"}) {
    const PartialField f = PartialField::parse(name);
    const RingValue a = f.from_int(5);
    EXPECT_EQ(f.mul(a, f.one()), a) << name;
  }
}

TEST(PartialFieldTest, FiniteFieldTablesSatisfyFieldAxioms) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const PartialField f = PartialField::gf(q);
    const auto elems = f.elements();
    ASSERT_EQ(static_cast<int>(elems.size()), q);
    EXPECT_TRUE(f.contains(f.neg(f.one())));
    for (const auto& a : elems) {
      EXPECT_TRUE(f.contains(a));
      if (!f.is_zero(a)) EXPECT_EQ(f.mul(a, *f.inverse(a)), f.one());
      for (const auto& b : elems) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        EXPECT_EQ(f.sub(f.add(a, b), b), a);
        for (const auto& c : elems) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    // Closure of G under products and inverses.
    for (const auto& a : f.group_elements()) {
      for (const auto& b : f.group_elements()) EXPECT_TRUE(f.in_group(f.mul(a, b)));
    }
  }
}

TEST(PartialFieldTest, GroupClosureOnGenerators) {
  const PartialField reg = PartialField::regular();
  const PartialField dy = PartialField::dyadic();
  const std::vector<std::pair<PartialField, std::vector<const char*>>> samples = {
      {reg, {"1", "-1"}},
      {dy, {"1", "-1", "2", "-2", "1/2", "-1/8", "16"}},
  };
  for (const auto& [f, gens] : samples) {
    EXPECT_FALSE(f.in_group(f.zero()));
    EXPECT_TRUE(f.contains(f.zero()));
    for (const char* gtext : gens) {
      const RingValue g = f.parse_value(gtext);
      ASSERT_TRUE(f.inverse(g).has_value());
      EXPECT_TRUE(f.in_group(*f.inverse(g)));
      for (const char* htext : gens) EXPECT_TRUE(f.in_group(f.mul(g, f.parse_value(htext))));
    }
  }
}

TEST(PartialFieldTest, DeterminantExamples) {
  const PartialField reg = PartialField::regular();
  auto v = [&](int x) { return reg.from_int(x); };
  auto d = reg.det({{v(1), v(1)}, {v(-1), v(1)}});
  EXPECT_EQ(d.value, v(2));
  EXPECT_FALSE(d.member);

  auto empty = reg.det(std::vector<std::vector<RingValue>>{});
  EXPECT_EQ(empty.value, reg.one());
  EXPECT_TRUE(empty.member);

  const PartialField gf2 = PartialField::gf(2);
  auto z = gf2.det({{gf2.one(), gf2.one()}, {gf2.one(), gf2.one()}});
  EXPECT_TRUE(gf2.is_zero(z.value));
  EXPECT_TRUE(z.member);

  EXPECT_THROW(reg.det({{v(1), v(2)}}), std::invalid_argument);
}

TEST(PartialFieldTest, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  const PartialField reg = PartialField::regular();
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    std::vector<std::vector<RingValue>> r(n, std::vector<RingValue>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        a[i][j] = entry(rng);
        r[i][j] = reg.from_int(a[i][j]);
      }
    }
    EXPECT_EQ(reg.det(r).value, reg.from_int(oracle::leibniz_det(a)));
  }
}

std::vector<std::vector<RingValue>> multiply(const PartialField& f,
                                             const std::vector<std::vector<RingValue>>& a,
                                             const std::vector<std::vector<RingValue>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<RingValue>> c(n, std::vector<RingValue>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
    }
  }
  return c;
}

TEST(PartialFieldTest, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (const char* name : {"gf2", "gf3", "gf4", "gf5", "gf8", "gf9", "regular", "dyadic",
                           "product(gf3,gf5)"}) {
    const PartialField f = PartialField::parse(name);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::vector<RingValue>> a(3, std::vector<RingValue>(3));
      std::vector<std::vector<RingValue>> b(3, std::vector<RingValue>(3));
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          a[i][j] = f.from_int(entry(rng));
          b[i][j] = f.from_int(entry(rng));
        }
      }
      EXPECT_EQ(f.det(multiply(f, a, b)).value, f.mul(f.det(a).value, f.det(b).value)) << name;
    }
  }
}

TEST(PartialFieldTest, ProductMembershipIsComponentwise) {
  const PartialField p = PartialField::parse("product(regular,gf3)");
  const PartialField reg = PartialField::regular();
  const PartialField gf3 = PartialField::gf(3);
  for (int x = -3; x <= 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const RingValue v = p.parse_value("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      if ((x == 0) == (y == 0)) {
        EXPECT_EQ(p.contains(v), reg.contains(reg.from_int(x)) && gf3.contains(gf3.from_int(y)))
            << x << "," << y;
      } else {
        // Zero in one coordinate only: neither the zero of R nor a unit.
        EXPECT_FALSE(p.contains(v)) << x << "," << y;
      }
    }
  }
}

TEST(PartialFieldTest, ParsingAndFormatting) {
  EXPECT_EQ(PartialField::parse("gf7").name(), "gf7");
  EXPECT_EQ(PartialField::parse("product(gf2,gf3)").name(), "product(gf2,gf3)");
  EXPECT_THROW(PartialField::parse("gf6"), std::invalid_argument);
  EXPECT_THROW(PartialField::parse("h5"), std::invalid_argument);
  const PartialField d = PartialField::dyadic();
  EXPECT_EQ(d.format(d.parse_value("-6/4")), "-3/2");
  EXPECT_THROW(d.parse_value("1/3"), MalformedValue);
  EXPECT_THROW(PartialField::regular().parse_value("1/2"), MalformedValue);
  EXPECT_THROW(PartialField::gf(4).parse_value("4"), MalformedValue);
  EXPECT_THROW(PartialField::gf(3).parse_value("x"), MalformedValue);
  const PartialField g5 = PartialField::gf(5);
  EXPECT_EQ(g5.parse_value("-1"), g5.from_int(4));
}

TEST(PartialFieldTest, OverflowIsReported) {
  const PartialField reg = PartialField::regular();
  RingValue big = reg.from_int(std::int64_t{1} << 40);
  EXPECT_THROW(reg.mul(big, big), std::overflow_error);
}

}  // namespace
}  // namespace matroidkit
