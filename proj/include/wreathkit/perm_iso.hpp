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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wreathkit/perm_group.hpp"

namespace wreathkit {

struct SearchLimits {
  /// Backtracking nodes visited before the search gives up with BudgetExceeded.
  std::uint64_t node_budget = 50'000'000;
  /// Split the first generator's candidates across OpenMP threads. The
  /// returned witness is the same as in the serial search.
  bool parallel = true;
};

/// A permutation isomorphism: `iso[i]` is the image of the i-th generator of
/// the source group, `bijection[d]` the image of source point d.
struct ActionEquivalence {
  std::vector<Perm> iso;
  std::vector<Point> bijection;
};

/// The first (iso, bijection) pair, in canonical search order, identifying
/// the action of H with the action of K. Generator images are searched among
/// the elements of K with matching cycle type.
std::optional<ActionEquivalence> actions_equivalent(const PermGroup& h, const PermGroup& k,
                                                    const SearchLimits& limits = {});

/// Turns a witness for (H, K) into one for (K, H).
ActionEquivalence inverse_equivalence(const PermGroup& h, const PermGroup& k, const ActionEquivalence& e);

/// H is permutationally isomorphic to the subgroup `subgroup` of G acting on
/// the invariant subset `subset`. `equivalence.bijection` maps the points of
/// H into `subset` and `equivalence.iso` gives the images of H's generators,
/// which also generate `subgroup`.
struct SubgroupWitness {
  std::vector<Perm> subgroup_generators;
  std::vector<Point> subset;
  ActionEquivalence equivalence;
};

/// Searches generator images in the canonical element order of G (pruned by
/// element order and cycle type), and for each candidate assembles the
/// invariant subset orbit by orbit, trying target points from the largest
/// down. Returns nullopt when no witness exists; throws BudgetExceeded when
/// the search is cut short.
std::optional<SubgroupWitness> perm_iso_to_subgroup(const PermGroup& h, const PermGroup& g,
                                                    const SearchLimits& limits = {});

/// Witness for (H, F) from witnesses for (H, G) and (G, F).
SubgroupWitness compose_witnesses(const PermGroup& h, const PermGroup& g, const PermGroup& f,
                                  const SubgroupWitness& hg, const SubgroupWitness& gf);

/// Checks gamma(d^x) = gamma(d)^{iota(x)} for every element x of H and every
/// point d, by walking the graph of the generator map. Returns false also
/// when the generator map is not an injective homomorphism.
bool witness_is_valid(const PermGroup& h, const PermGroup& g, const SubgroupWitness& w);

/// Graph {(x, phi(x))} of the map defined on generators, in breadth-first
/// order from (1, 1). nullopt above `cap` pairs.
struct HomGraph {
  std::vector<std::pair<Perm, Perm>> pairs;
  bool well_defined = false;  ///< first components are distinct
  bool injective = false;     ///< second components are distinct
};
std::optional<HomGraph> hom_graph(std::span<const Perm> source_gens, std::size_t source_degree,
                                  std::span<const Perm> target_gens, std::size_t target_degree,
                                  std::uint64_t cap);

}  // namespace wreathkit
