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

#include <fstream>
#include <set>
#include <sstream>

#include "wreathkit/catalog.hpp"
#include "wreathkit/embed.hpp"
#include "wreathkit/error.hpp"
#include "wreathkit/kaloujnine.hpp"

namespace wreathkit {
namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(WREATHKIT_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> factor_orders(const CompositionSeries& s) {
  std::vector<std::size_t> out;
  for (const auto& f : s.factors) out.push_back(f.order().convert_to<std::size_t>());
  return out;
}

TEST(Kaloujnine, SeriesValidation) {
  const auto s3 = series_from_json(data("series-s3.json"));
  EXPECT_EQ(factor_orders(s3), (std::vector<std::size_t>{2, 3}));
  const auto c4 = series_from_json(data("series-c4.json"));
  EXPECT_EQ(factor_orders(c4), (std::vector<std::size_t>{2, 2}));
  const auto a4 = series_from_json(data("series-a4.json"));
  EXPECT_EQ(factor_orders(a4), (std::vector<std::size_t>{3, 2, 2}));
  for (const auto& f : a4.factors) EXPECT_TRUE(f.is_transitive());  // regular on coset labels
  EXPECT_THROW(series_from_json(data("series-a4-bad.json")), PreconditionError);

  const PermGroup s4 = parse_group("S4");
  // Non-simple factor S4 / V4 ~ S3.
  EXPECT_THROW(validate_series(s4, {{Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)}, {}}),
               PreconditionError);
  // Last term not trivial.
  EXPECT_THROW(validate_series(s4, {{Perm::parse("(0 1 2)", 4), Perm::parse("(1 2 3)", 4)}}), PreconditionError);
  // A leading copy of G is accepted.
  const auto again = validate_series(parse_group("S3"), {parse_group("S3").generators(), {Perm::parse("(0 1 2)", 3)}, {}});
  EXPECT_EQ(again.length(), 2u);
}

TEST(Kaloujnine, MinimalTransversals) {
  const auto s = series_from_json(data("series-s3.json"));
  const auto t = choose_transversals(s);
  ASSERT_EQ(t.reps.size(), 2u);
  EXPECT_EQ(t.reps[0].size(), 2u);
  EXPECT_TRUE(t.reps[0][0].is_identity());
  // The first odd permutation in the canonical element order.
  Perm first_odd;
  for (const auto& x : s.group.elements())
    if (x.cycle_type() == std::vector<std::size_t>{1, 2}) {
      first_odd = x;
      break;
    }
  EXPECT_EQ(t.reps[0][1], first_odd);
  for (std::size_t n = 0; n < t.reps.size(); ++n) {
    EXPECT_EQ(t.reps[n].size(), s.factors[n].degree());
    for (std::size_t i = 0; i < t.reps[n].size(); ++i) EXPECT_EQ(s.coset_label(n, t.reps[n][i]), i);
  }
}

TEST(Kaloujnine, BoundaryActionBasics) {
  const auto s = series_from_json(data("series-s3.json"));
  const auto t = choose_transversals(s);
  const Perm id = Perm::identity(3);
  for (std::uint64_t i = 0; i < 6; ++i) {
    const TreeWord w = word_at(s, 2, i);
    EXPECT_EQ(word_index(s, w), i);
    EXPECT_EQ(*boundary_act(s, t, w, id), w);
  }
  EXPECT_THROW(boundary_act(s, t, {0, 0, 0}, id), PreconditionError);
  EXPECT_THROW(boundary_act(s, t, {5, 0}, id), PreconditionError);
  EXPECT_THROW(boundary_act(s, t, {0, 0}, Perm::parse("(0 1)(2 3)", 4)), PreconditionError);
}

TEST(Kaloujnine, DepthOneIsTheCosetAction) {
  const auto s = series_from_json(data("series-a4.json"));
  const auto t = choose_transversals(s);
  // Right cosets G_2 x computed directly as element sets.
  const auto& all = s.group.elements();
  std::vector<std::set<Perm>> cosets;
  for (const auto& rep : t.reps[0]) {
    std::set<Perm> c;
    for (const auto& y : s.chain[1].elements()) c.insert(y * rep);
    cosets.push_back(std::move(c));
  }
  for (const auto& g : all)
    for (std::uint32_t i = 0; i < cosets.size(); ++i) {
      const Perm moved = t.reps[0][i] * g;
      const auto image = *boundary_act(s, t, {i}, g);
      EXPECT_TRUE(cosets[image[0]].contains(moved));
    }
}

TEST(Kaloujnine, EmbeddingsIntoFactorTowers) {
  struct Case {
    const char* file;
    std::uint64_t pairs;
    const char* target_order;
    const char* target_degree;
  };
  for (const Case& c : {Case{"series-s3.json", 36, "18", "6"}, Case{"series-c4.json", 16, "8", "4"},
                        Case{"series-a4.json", 144, "1536", "12"}}) {
    const auto s = series_from_json(data(c.file));
    const auto k = embed_via_series(s, choose_transversals(s));
    EXPECT_EQ(k.checked_pairs, c.pairs) << c.file;
    EXPECT_TRUE(k.homomorphism);
    EXPECT_EQ(k.kernel_order, 1u);
    EXPECT_TRUE(k.decomposes);
    EXPECT_EQ(k.embedding.target.order().to_string(), c.target_order);
    EXPECT_EQ(k.embedding.target.degree().to_string(), c.target_degree);
    EXPECT_TRUE(k.embedding.report->pass());
    EXPECT_EQ(k.layer_group.order(), s.group.order());

    // Independent homomorphism oracle on words: act(w, gh) = act(act(w, g), h).
    const auto t = choose_transversals(s);
    const auto& all = s.group.elements();
    for (std::uint64_t i = 0; i < k.layer_group.degree(); ++i) {
      const TreeWord w = word_at(s, s.length(), i);
      for (const auto& g : all)
        for (const auto& h : {all[1], all.back()})
          EXPECT_EQ(*boundary_act(s, t, w, g * h), *boundary_act(s, t, *boundary_act(s, t, w, g), h));
    }
  }
}

TEST(Kaloujnine, TransversalChoiceGivesEquivalentActions) {
  for (const char* file : {"series-s3.json", "series-c4.json", "series-a4.json"}) {
    const auto s = series_from_json(data(file));
    const auto a = embed_via_series(s, choose_transversals(s, TransversalPolicy::kMinimal));
    const auto b = embed_via_series(s, choose_transversals(s, TransversalPolicy::kMaximal));
    EXPECT_TRUE(actions_equivalent(a.layer_group, b.layer_group)) << file;
  }
}

TEST(Kaloujnine, LiteralRecursionLeavesTheSeries) {
  const auto s = series_from_json(data("series-s3.json"));
  const auto t = choose_transversals(s);
  std::size_t undefined = 0;
  for (const auto& g : s.group.elements())
    if (!layer_action(s, t, g, 2, Recursion::kLiteral)) ++undefined;
  EXPECT_EQ(undefined, 6u);
  // At depth one both recursions agree.
  for (const auto& g : s.group.elements())
    EXPECT_EQ(layer_action(s, t, g, 1, Recursion::kLiteral), layer_action(s, t, g, 1, Recursion::kCoset));
}

TEST(Kaloujnine, PipelineIntoProductActionTower) {
  for (const char* file : {"series-s3.json", "series-c4.json"}) {
    const auto s = series_from_json(data(file));
    const auto k = embed_via_series(s, choose_transversals(s));
    std::vector<PermGroup> seq{s.factors.front()};
    seq.insert(seq.end(), s.factors.begin(), s.factors.end());
    const auto t = ia_into_pa(seq, s.length());
    const PEmbedding c = compose(k.embedding, t.embedding);
    EXPECT_GE(c.degree, 1u);
    EXPECT_TRUE(pembedding_verify(c).pass()) << file;
  }
  // For A4 the level-3 target has degree 2^(2^27); the construction stops at the cap.
  const auto a4 = series_from_json(data("series-a4.json"));
  std::vector<PermGroup> seq{a4.factors.front()};
  seq.insert(seq.end(), a4.factors.begin(), a4.factors.end());
  EXPECT_THROW(ia_into_pa(seq, a4.length()), CapExceeded);
}

}  // namespace
}  // namespace wreathkit
