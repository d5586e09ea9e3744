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

#pragma once

#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wreathkit/pembedding.hpp"

namespace wreathkit {

/// A finite composition series G = G_1 > G_2 > ... > G_{N+1} = 1. Factor k is
/// G_k / G_{k+1} acting regularly on its cosets by right multiplication. Coset
/// labels are assigned in the canonical element order of G, so the coset of
/// the identity is label 0.
struct CompositionSeries {
  PermGroup group;
  std::vector<PermGroup> chain;    ///< G_1 .. G_{N+1}
  std::vector<PermGroup> factors;  ///< N factors, on coset labels
  /// cosets[k] sends each element of G_{k+1} (0-based k) to its coset label
  /// modulo G_{k+2}.
  std::vector<std::unordered_map<Perm, std::uint32_t, PermHash>> cosets;

  std::size_t length() const { return factors.size(); }
  std::optional<std::uint32_t> coset_label(std::size_t level, const Perm& g) const;
};

struct SeriesOptions {
  /// Factors up to this order are checked for simplicity by brute force.
  std::uint64_t simplicity_cap = 10'000;
  /// Accept larger factors without a check.
  bool attest_simple = false;
};

/// `chain` lists the terms below G, each by generators (an empty list is
/// the trivial group). A leading term generating G itself is accepted.
/// Throws PreconditionError for a non-normal step, a non-simple factor, a
/// non-descending step or a non-trivial last term.
CompositionSeries validate_series(const PermGroup& g, const std::vector<std::vector<Perm>>& chain,
                                  const SeriesOptions& options = {});

/// Reads `{ "group": spec, "chain": [[generator, ...], ...] }`.
CompositionSeries series_from_json(std::string_view text, const SeriesOptions& options = {});

enum class TransversalPolicy { kMinimal, kMaximal };

/// reps[k][s] represents coset s of G_{k+2} in G_{k+1} (0-based k). The
/// identity coset is always represented by the identity; the other cosets by
/// their first (kMinimal) or last (kMaximal) element in canonical order.
struct TransversalTable {
  std::vector<std::vector<Perm>> reps;
  TransversalPolicy policy = TransversalPolicy::kMinimal;
};

TransversalTable choose_transversals(const CompositionSeries& series,
                                     TransversalPolicy policy = TransversalPolicy::kMinimal);

/// Coset labels (s_N, ..., s_1), deepest letter first.
using TreeWord = std::vector<std::uint32_t>;

enum class Recursion {
  /// g_{n+1} = t_{s_n} g_n u_n^{-1}, which lies in G_{n+1}.
  kCoset,
  /// g_{n+1} = g_n u_n^{-1}; the next representative lookup can leave G_{n+1}.
  kLiteral,
};

/// Image of `word` under g. nullopt when the literal recursion leaves the
/// series; PreconditionError for a malformed word or g outside G.
std::optional<TreeWord> boundary_act(const CompositionSeries& series, const TransversalTable& table,
                                     const TreeWord& word, const Perm& g, Recursion recursion = Recursion::kCoset);

/// Layer-n words in the point order of the imprimitive tower of the first
/// n factors.
std::uint64_t word_index(const CompositionSeries& series, const TreeWord& word);
TreeWord word_at(const CompositionSeries& series, std::size_t depth, std::uint64_t index);

/// The permutation of layer `depth` induced by g; nullopt as for boundary_act.
std::optional<Perm> layer_action(const CompositionSeries& series, const TransversalTable& table, const Perm& g,
                                 std::size_t depth, Recursion recursion = Recursion::kCoset);

/// g as an element of the imprimitive tower of the factors: the base at level
/// n and prefix (s_1..s_{n-1}) is the regular action of g_n on the cosets.
TowerElement decompose(const CompositionSeries& series, const TransversalTable& table, const Perm& g);

/// Imprimitive tower of the factors, top first.
Tower factor_tower(const CompositionSeries& series);

struct KaloujnineEmbedding {
  /// Degree-1 embedding of G acting on layer N into the factor tower.
  PEmbedding embedding;
  PermGroup layer_group;
  std::uint64_t checked_pairs = 0;  ///< (g, h) pairs in the homomorphism check
  bool homomorphism = false;
  std::uint64_t kernel_order = 0;
  bool decomposes = false;  ///< decompose then flatten reproduces every layer permutation
};

/// Throws CapExceeded when |G| exceeds `cap`, Error if a check fails.
KaloujnineEmbedding embed_via_series(const CompositionSeries& series, const TransversalTable& table,
                                     std::uint64_t cap = kMaterializationCap);

}  // namespace wreathkit
