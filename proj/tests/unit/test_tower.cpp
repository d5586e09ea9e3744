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
#include <set>
#include <unordered_set>

#include "wreathkit/catalog.hpp"
#include "wreathkit/error.hpp"
#include "wreathkit/tower.hpp"

namespace wreathkit {
namespace {

Tower pa(const std::string& seq) { return parse_tower("pa:" + seq); }
Tower ia(const std::string& seq) { return parse_tower("ia:" + seq); }

// All structural elements, by closure under right multiplication by generators.
std::vector<TowerElement> structural_elements(const Tower& t) {
  std::unordered_set<TowerElement, TowerElementHash> seen{t.identity()};
  std::vector<TowerElement> all{t.identity()};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& g : t.generators()) {
      TowerElement x = t.compose(all[i], g);
      if (seen.insert(x).second) all.push_back(std::move(x));
    }
  return all;
}

std::size_t closure_size(const PermGroup& g) {
  std::set<Perm> seen{Perm::identity(g.degree())};
  std::vector<Perm> frontier{Perm::identity(g.degree())};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : g.generators())
        if (seen.insert(x * s).second) next.push_back(x * s);
    frontier = std::move(next);
  }
  return seen.size();
}

TEST(Tower, DegreeAndOrderExamples) {
  EXPECT_EQ(pa("C2,C2,C2").degree().to_string(), "16");
  EXPECT_EQ(pa("C2,C2,C2").order().to_string(), "128");
  EXPECT_EQ(ia("C2,C2,C2").degree().to_string(), "8");
  EXPECT_EQ(ia("C2,C2,C2").order().to_string(), "128");
  EXPECT_EQ(pa("C2,C3,C2").degree().to_string(), "512");
  EXPECT_EQ(pa("C2,C3,C2").order().to_string(), "9216");
  EXPECT_EQ(ia("C3,C2").degree().to_string(), "6");
  EXPECT_EQ(ia("C3,C2").order().to_string(), "18");
}

TEST(Tower, ProductActionDoublingSequence) {
  const Tower t = parse_tower("pa:C2", 5);
  const std::vector<std::string> degrees{"2", "4", "16", "65536", "2^65536"};
  const std::vector<std::string> orders{"2", "8", "128", "8388608", "2^65559"};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(t.degree_at(k).to_string(), degrees[k]);
    EXPECT_EQ(t.prefix(k + 1).order().to_string(), orders[k]);
  }
  EXPECT_EQ(t.prefix(4).order(), Count::of(2).pow(23));
}

TEST(Tower, SpecStringsRoundTrip) {
  for (const std::string s : {"pa:C2:reg,C3:reg,C2:reg", "ia:C3:reg,C2:reg", "ia:C2:reg,S3:nat,C2:reg"})
    EXPECT_EQ(parse_tower(s).spec(), s);
  // Imprimitive lists are written like the wreath product: C2 is on top.
  EXPECT_EQ(ia("C3,C2").level(0).degree(), 2u);
  EXPECT_EQ(parse_tower("ia:C3,C2", 3).spec(), "ia:C2:reg,C3:reg,C2:reg");
  EXPECT_THROW(parse_tower("xx:C2"), ParseError);
  EXPECT_THROW(parse_tower("pa:C2,C1"), PreconditionError);
}

TEST(Tower, OrdersMatchEnumeration) {
  const std::vector<Tower> fixtures{pa("C2,C2"),    pa("C2,C2,C2"), pa("C3,C2"),  pa("C2,C3"),  pa("S3,C2"),
                                    pa("C2,S3"),    ia("C2,C2,C2"), ia("C3,C2"),  ia("C2,C3"),  ia("S3,C2"),
                                    ia("C2,S3"),    ia("C2,C2,C3"), ia("A4,C2"),  pa("C2,C2,C3")};
  for (const auto& t : fixtures) {
    const auto order = *t.order().as_u64();
    ASSERT_LE(order, 10'000u) << t.spec();
    const PermGroup flat = t.flatten();
    EXPECT_EQ(closure_size(flat), order) << t.spec();
    const auto elements = structural_elements(t);
    EXPECT_EQ(elements.size(), order) << t.spec();
    // Faithful: distinct structural elements act differently.
    std::set<Perm> images;
    for (const auto& e : elements) images.insert(t.flatten_element(e));
    EXPECT_EQ(images.size(), order) << t.spec();
  }
}

TEST(Tower, ProductActionPointExamples) {
  const Tower t = pa("C2,C2");
  const Perm swap = Perm::parse("(0 1)", 2), id = Perm::identity(2);
  TowerElement base = t.identity();
  base.bases[1] = {swap, id};
  TowerElement top = t.identity();
  top.bases[0][0] = swap;
  for (Point a = 0; a < 2; ++a)
    for (Point b = 0; b < 2; ++b) {
      const TowerPoint x{{a, b}};
      EXPECT_EQ(t.act(x, base), (TowerPoint{{1 - a, b}}));
      EXPECT_EQ(t.act(x, top), (TowerPoint{{b, a}}));
      EXPECT_EQ(t.act(x, t.identity()), x);
    }
}

TEST(Tower, ActionAxiomsExhaustiveOnOrderEight) {
  const Tower t = pa("C2,C2");
  const auto elements = structural_elements(t);
  ASSERT_EQ(elements.size(), 8u);
  std::size_t pairs = 0;
  for (const auto& v : elements)
    for (const auto& w : elements) {
      ++pairs;
      const TowerElement vw = t.compose(v, w);
      for (std::uint64_t i = 0; i < 4; ++i) {
        const TowerPoint x = t.point_at(i);
        EXPECT_EQ(t.act(x, vw), t.act(t.act(x, v), w));
      }
      EXPECT_TRUE(t.is_identity(t.compose(v, t.inverse(v))));
      EXPECT_TRUE(t.is_identity(t.compose(t.inverse(v), v)));
    }
  EXPECT_EQ(pairs, 64u);
}

TEST(Tower, ProjectionIsHomomorphismWithExpectedKernel) {
  for (const Tower& t : {pa("C2,C2,C2"), ia("C2,C2,C2"), pa("C3,C2"), ia("S3,C2")}) {
    const Tower top = t.prefix(t.depth() - 1);
    const auto elements = structural_elements(t);
    std::size_t kernel = 0;
    for (const auto& v : elements) {
      if (top.is_identity(t.project_to_top(v))) ++kernel;
      for (const auto& w : {elements[1], elements[elements.size() / 2], elements.back()})
        EXPECT_EQ(t.project_to_top(t.compose(v, w)), top.compose(t.project_to_top(v), t.project_to_top(w)));
    }
    // Kernel is the bottom base group: |S_bottom| ^ (points above it).
    const auto above = *t.degree_at(t.depth() - 2).as_u64();
    const auto expected = *Count::of(t.bottom().order().convert_to<std::uint64_t>()).pow(above).as_u64();
    EXPECT_EQ(kernel, expected) << t.spec();
  }
  const Tower t = pa("C2,C2,C2");
  EXPECT_EQ(closure_size(t.prefix(2).flatten()), 8u);
}

TEST(Tower, KernelChainDescends) {
  const Tower t = pa("C2,C2,C2");
  const auto elements = structural_elements(t);
  std::vector<std::size_t> kernel_sizes;
  for (std::size_t keep = t.depth(); keep-- > 1;) {
    std::size_t count = 0;
    for (const auto& v : elements) {
      TowerElement p = v;
      p.bases.resize(keep);
      if (t.prefix(keep).is_identity(p)) ++count;
    }
    kernel_sizes.push_back(count);
  }
  // Killing the last level, then the last two: 2^4, then 2^4 * 2^2.
  EXPECT_EQ(kernel_sizes, (std::vector<std::size_t>{16, 64}));
}

TEST(Tower, Transitivity) {
  for (const Tower& t : {pa("C2,C3"), pa("S3,C2,C2"), ia("C3,C2"), ia("C2,C2,C2")}) {
    EXPECT_TRUE(t.is_transitive());
    EXPECT_TRUE(t.flatten().is_transitive());
  }
  const PermGroup intransitive(3, {Perm::parse("(0 1)", 3)});
  const Tower bad(TowerKind::kImprimitive, {parse_group("C2"), intransitive});
  EXPECT_FALSE(bad.is_transitive());
  EXPECT_FALSE(bad.flatten().is_transitive());
}

TEST(Tower, PointMapMatchesFlattening) {
  std::mt19937_64 rng(5);
  for (const Tower& t : {pa("C2,C3,C2"), ia("C2,S3,C3"), pa("S3,C2,C2")}) {
    const auto& gens = t.generators();
    for (int trial = 0; trial < 20; ++trial) {
      TowerElement v = t.identity();
      for (int l = 0; l < 6; ++l) v = t.compose(v, gens[rng() % gens.size()]);
      const Perm flat = t.flatten_element(v);
      const PointMap map(t, v);
      for (Point x = 0; x < flat.degree(); ++x) {
        EXPECT_EQ(map(x), flat[x]);
        EXPECT_EQ(t.point_index(t.act(t.point_at(x), v)), flat[x]);
      }
    }
  }
}

TEST(Tower, FlattenCap) {
  EXPECT_EQ(pa("C2,C2,C2,C2").flatten().degree(), 65536u);
  // (C3, C2, C2, C2) has degree 2^256, printed exactly.
  const Tower big = pa("C3,C2,C2,C2");
  EXPECT_EQ(big.degree().to_string(), (BigInt(1) << 256).str());
  EXPECT_THROW(big.flatten(), CapExceeded);
  EXPECT_THROW(pa("C2,C2,C2").flatten(10), CapExceeded);
}

TEST(Tower, WreathConstructorsCheckInputs) {
  EXPECT_EQ(wreath_imprimitive(parse_group("C3"), parse_group("C2")).order().to_string(), "18");
  EXPECT_EQ(wreath_product_action(parse_group("C2"), parse_group("C2")).order().to_string(), "8");
  EXPECT_THROW(wreath_imprimitive(parse_group("C3"), pa("C2,C2")), PreconditionError);
  EXPECT_THROW(wreath_product_action(parse_group("C1"), parse_group("C2")), PreconditionError);
}

}  // namespace
}  // namespace wreathkit
