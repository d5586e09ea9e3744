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
#include <string>
#include <vector>

#include "wreathkit/pembedding.hpp"

namespace wreathkit {

/// The number of points assigned to each source point by pembed_wreath:
/// |Omega|^(|Sigma| - r|Delta|) * (|Omega|^r - |Omega|)^(|Delta| - 1).
BigInt pembed_wreath_degree(std::uint64_t omega, std::uint64_t sigma, std::uint64_t delta, std::uint64_t r);

/// From a P-embedding E of H (on Delta) into G (on Sigma) of degree r >= 2,
/// the P-embedding of S wr H (imprimitive, on Omega x Delta) into S wr G
/// (product action, on Omega^Sigma). Gamma-hat(w, e) consists of the
/// functions constant w on Gamma(e), non-constant on every other Gamma(d) and
/// arbitrary elsewhere. H must be an imprimitive tower (or a single group),
/// G a product-action tower (or a single group).
PEmbedding pembed_wreath(const PEmbedding& e, const PermGroup& s);

/// Result of one inverse-system compatibility check between consecutive
/// levels: project(iota_k(v)) == iota_{k-1}(project(v)).
struct CompatibilityCheck {
  std::size_t level = 0;
  std::uint64_t checked = 0;
  bool exhaustive = false;
  bool holds = false;
};

struct TowerEmbedding {
  PEmbedding embedding;              ///< the level-n embedding
  std::vector<PEmbedding> levels;    ///< levels 1..n (levels.back() is `embedding`)
  std::vector<CompatibilityCheck> compatibility;
};

/// seq = (S_0, S_1, ..., S_n). Embeds the imprimitive tower of S_1..S_n into
/// the product-action tower of S_0..S_n. The level-1 map is the diagonal
/// S_1 -> S_1 wr S_0 with Gamma(w) = {f : f(first point) = w}, of degree
/// |Omega_1|^(|Omega_0| - 1); higher levels iterate pembed_wreath.
TowerEmbedding ia_into_pa(const std::vector<PermGroup>& seq, std::size_t n);

/// From degree-1 embeddings of H1 into G1 (single groups) and of H2 into G2
/// (product-action towers or single groups), the degree-1 embedding of
/// H1 wr H2 into G1 wr G2, both in product action. Points off the image of
/// Delta_2 are sent to the first point of Omega_1.
PEmbedding perm_iso_wreath(const PEmbedding& w1, const PEmbedding& w2);

/// The degree-1 embedding of H wr G into H wr (K wr G) (product actions)
/// that is the identity on the common top group G.
PEmbedding insert_middle(const PermGroup& h, const PermGroup& k, const Tower& g);

/// seq = (S_1, ..., S_len); m holds 1-based, strictly increasing indices.
/// Embeds the product-action tower of S_{m(1)}..S_{m(n)} into the one of
/// S_1..S_{m(n)}, with compatibility checks between consecutive levels.
TowerEmbedding subsequence_embed(const std::vector<PermGroup>& seq, const std::vector<std::size_t>& m,
                                 std::size_t n);

struct SelfEmbedding {
  TowerEmbedding tower;
  std::vector<std::size_t> m;  ///< 1-based, m(1..n)
  Count source_order;
  Count target_order;
  Count index;   ///< target order / image order
  bool proper = false;
};

struct SelfEmbedOptions {
  /// Indices j <= n0 use m(j) = j.
  std::size_t n0 = 0;
  /// User-supplied m(1..n); chosen greedily when absent.
  std::optional<std::vector<std::size_t>> m;
  SearchLimits search = {};
};

/// seq = (S_1, ..., S_len). Embeds the product-action tower of S_1..S_n into
/// the one of S_1..S_{m(n)} using, for each j > n0, a witness that S_j is
/// permutationally isomorphic to a subgroup of S_{m(j)}.
SelfEmbedding self_embed(const std::vector<PermGroup>& seq, std::size_t n, const SelfEmbedOptions& options = {});

/// Diagonal degree-1 embedding of S into S wr G (product action) on the
/// constant functions; the identity when G is absent.
PEmbedding diagonal_embedding(const PermGroup& s, const std::optional<Tower>& g);

/// Generator-by-generator check that dropping `source_drop` bottom levels of
/// the source and `target_drop` of the target turns e into `lower`:
/// truncate(iota(v)) == lower(truncate(v)).
bool top_factorization_holds(const PEmbedding& e, const PEmbedding& lower, std::size_t source_drop,
                             std::size_t target_drop);

}  // namespace wreathkit
