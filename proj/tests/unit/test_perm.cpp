// Copyright 2026 The wreathkit Authors
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

#include <gtest/gtest.h>

#include <random>

#include "wreathkit/count.hpp"
#include "wreathkit/error.hpp"
#include "wreathkit/perm.hpp"

namespace wreathkit {
namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  for (Point i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

TEST(Perm, ParseCycleAndImageNotation) {
  const Perm a = Perm::parse("(0 1)(2 3)", 4);
  EXPECT_EQ(a, Perm(std::vector<Point>{1, 0, 3, 2}));
  EXPECT_EQ(Perm::parse("[1,0,3,2]", 4), a);
  EXPECT_EQ(Perm::parse("()", 3), Perm::identity(3));
  EXPECT_THROW(Perm::parse("(0 4)", 4), Error);
  EXPECT_THROW(Perm::parse("(0 1", 4), Error);
  EXPECT_THROW(Perm(std::vector<Point>{0, 0}), Error);
}

TEST(Perm, RightActionComposition) {
  // (0 1) then (1 2): 0 -> 1 -> 2.
  const Perm a = Perm::parse("(0 1)", 3), b = Perm::parse("(1 2)", 3);
  EXPECT_EQ((a * b)[0], 2u);
  EXPECT_EQ((a * b)[2], 1u);
}

TEST(Perm, OrderAndCycleType) {
  const Perm p = Perm::parse("(0 1 2)(3 4)", 6);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(Perm::parse(p.to_cycle_string(), 6), p);
  EXPECT_EQ(Perm::parse(p.to_image_string(), 6), p);
}

TEST(Perm, GroupAxiomsOnRandomPerms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Perm a = random_perm(9, rng), b = random_perm(9, rng), c = random_perm(9, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a.conjugate_by(b), b.inverse() * a * b);
    // Order oracle: smallest k with a^k = 1.
    Perm x = a;
    std::uint64_t k = 1;
    while (!x.is_identity()) {
      x = x * a;
      ++k;
    }
    EXPECT_EQ(a.order(), k);
  }
}

TEST(Perm, CycleTypeContainment) {
  const std::vector<std::size_t> whole{1, 2, 2, 3}, part{2, 3}, bad{3, 3};
  EXPECT_TRUE(cycle_type_contains(whole, part));
  EXPECT_FALSE(cycle_type_contains(whole, bad));
}

TEST(Count, MatchesBigIntegerArithmetic) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t a = rng() % 5000 + 1, b = rng() % 5000 + 1;
    const unsigned e = static_cast<unsigned>(rng() % 20);
    const BigInt expected = BigInt(a) * boost::multiprecision::pow(BigInt(b), e);
    const Count c = Count::of(a) * Count::of(b).pow(e);
    EXPECT_EQ(*c.exact(), expected);
    EXPECT_EQ(c.to_string(), expected.str());
    EXPECT_TRUE(Count::of(a).divides(c));
    EXPECT_EQ(*Count::of(a).cofactor_in(c).exact(), expected / a);
  }
}

TEST(Count, HugeValuesPrintFactored) {
  const Count d = Count::of(2).pow(65536);
  EXPECT_EQ(d.to_string(), "2^65536");
  EXPECT_EQ(Count::of(2).pow(10).to_string(), "1024");
  EXPECT_EQ((Count::of(2).pow(7) * Count::of(3)).factored(), "2^7 * 3");
  EXPECT_EQ(Count().factored(), "1");
  EXPECT_FALSE(d.as_u64());
}

}  // namespace
}  // namespace wreathkit
