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

#include "wreathkit/catalog.hpp"
#include "wreathkit/error.hpp"
#include "wreathkit/perm_iso.hpp"

namespace wreathkit {
namespace {

// Checks a witness from its definition: the bijection intertwines every
// element of H with its image, element by element through the graph.
void expect_witness(const PermGroup& h, const PermGroup& g, const SubgroupWitness& w) {
  ASSERT_EQ(w.equivalence.bijection.size(), h.degree());
  std::vector<Point> sorted = w.equivalence.bijection;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, w.subset);
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    const Perm& x = h.generators()[i];
    const Perm& y = w.equivalence.iso[i];
    EXPECT_TRUE(g.contains(y));
    for (Point d = 0; d < h.degree(); ++d) EXPECT_EQ(w.equivalence.bijection[x[d]], y[w.equivalence.bijection[d]]);
  }
  EXPECT_TRUE(witness_is_valid(h, g, w));
  EXPECT_EQ(PermGroup(g.degree(), w.subgroup_generators).order(), h.order());
}

TEST(PermIso, SwapInsideDoubleTransposition) {
  const PermGroup h = parse_group("C2");
  const PermGroup g(4, {Perm::parse("(0 1)(2 3)", 4)});
  const auto w = perm_iso_to_subgroup(h, g);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->subset, (std::vector<Point>{2, 3}));
  EXPECT_EQ(w->subgroup_generators, (std::vector<Perm>{Perm::parse("(0 1)(2 3)", 4)}));
  expect_witness(h, g, *w);
}

TEST(PermIso, PointStabilizerOfAlt6) {
  const PermGroup a5 = parse_group("A5"), a6 = parse_group("A6");
  const auto w = perm_iso_to_subgroup(a5, a6);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->subset.size(), 5u);
  expect_witness(a5, a6, *w);
  EXPECT_FALSE(perm_iso_to_subgroup(a6, a5));
}

TEST(PermIso, NegativeCases) {
  EXPECT_FALSE(perm_iso_to_subgroup(parse_group("S3"), parse_group("C6")));
  EXPECT_FALSE(perm_iso_to_subgroup(parse_group("C4"), parse_group("S3")));
  // Same abstract group, but C3 acting regularly needs a 3-cycle on an orbit.
  const auto w = perm_iso_to_subgroup(parse_group("C3"), parse_group("S4"));
  ASSERT_TRUE(w);
  expect_witness(parse_group("C3"), parse_group("S4"), *w);
}

TEST(PermIso, SerialAndParallelSearchAgree) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"A5", "A6"}, {"C3", "S4"}, {"S3", "S4"}, {"C2", "PSL2_7"}, {"A4", "A5"}, {"PSL2_7:fano", "PSL2_7:fano"}};
  for (const auto& [a, b] : cases) {
    const PermGroup h = parse_group(a), g = parse_group(b);
    const auto s = perm_iso_to_subgroup(h, g, {.parallel = false});
    const auto p = perm_iso_to_subgroup(h, g, {.parallel = true});
    ASSERT_EQ(s.has_value(), p.has_value()) << a << " " << b;
    if (s) {
      EXPECT_EQ(s->subset, p->subset);
      EXPECT_EQ(s->equivalence.iso, p->equivalence.iso);
      EXPECT_EQ(s->equivalence.bijection, p->equivalence.bijection);
    }
  }
}

TEST(PermIso, ActionsEquivalent) {
  const PermGroup a5 = parse_group("A5");
  // Relabel A5 by a fixed bijection and check that the search undoes it.
  const Perm c = Perm::parse("(0 3 1)(2 4)", 5);
  std::vector<Perm> gens;
  for (const auto& x : a5.generators()) gens.push_back(x.conjugate_by(c));
  const PermGroup b(5, gens);
  const auto e = actions_equivalent(a5, b);
  ASSERT_TRUE(e);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Point d = 0; d < 5; ++d) EXPECT_EQ(e->bijection[a5.generators()[i][d]], e->iso[i][e->bijection[d]]);
  const auto back = inverse_equivalence(a5, b, *e);
  for (Point d = 0; d < 5; ++d) EXPECT_EQ(back.bijection[e->bijection[d]], d);
  EXPECT_FALSE(actions_equivalent(parse_group("PSL2_7:fano"), parse_group("PSL2_7")));
  EXPECT_FALSE(actions_equivalent(parse_group("C4"), PermGroup(4, {Perm::parse("(0 1)", 4), Perm::parse("(2 3)", 4)})));
}

TEST(PermIso, ComposedWitnessIsValid) {
  const PermGroup c2 = parse_group("C2"), s3 = parse_group("S3"), s4 = parse_group("S4");
  const auto w1 = perm_iso_to_subgroup(c2, s3), w2 = perm_iso_to_subgroup(s3, s4);
  ASSERT_TRUE(w1 && w2);
  expect_witness(c2, s4, compose_witnesses(c2, s3, s4, *w1, *w2));
}

TEST(PermIso, HomGraphDetectsBadMaps) {
  const Perm swap = Perm::parse("(0 1)", 2);
  const Perm three = Perm::parse("(0 1 2)", 3);
  const std::vector<Perm> src{swap}, bad{three};
  const auto g = hom_graph(src, 2, bad, 3, 100);
  ASSERT_TRUE(g);
  EXPECT_FALSE(g->well_defined && g->injective);
  const std::vector<Perm> good{Perm::parse("(0 1)", 3)};
  const auto h = hom_graph(src, 2, good, 3, 100);
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->well_defined);
  EXPECT_TRUE(h->injective);
  EXPECT_EQ(h->pairs.size(), 2u);
}

TEST(PermIso, BudgetIsEnforced) {
  EXPECT_THROW(perm_iso_to_subgroup(parse_group("A5"), parse_group("A6"), {.node_budget = 1, .parallel = false}),
               BudgetExceeded);
}

}  // namespace
}  // namespace wreathkit
