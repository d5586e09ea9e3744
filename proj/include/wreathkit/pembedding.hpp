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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wreathkit/perm_iso.hpp"
#include "wreathkit/tower.hpp"

namespace wreathkit {

struct EmbeddingReport {
  std::uint64_t checked_pairs = 0;  ///< (element, point) pairs checked for equivariance
  bool exhaustive = false;
  std::uint64_t seed = 0;
  bool degree = false;        ///< every Gamma(d) has exactly r points of the target
  bool disjointness = false;  ///< the Gamma(d) are pairwise disjoint
  bool homomorphism = false;  ///< iota extends to a homomorphism
  bool injectivity = false;
  bool equivariance = false;
  std::vector<std::string> failures;

  bool pass() const {
    return degree && disjointness && homomorphism && injectivity && equivariance && failures.empty();
  }
};

/// A P-embedding (iota, Gamma) of degree r of `source` into `target`:
/// iota[i] is the image of source.generators()[i], gamma[d] the sorted
/// r-subset of target points assigned to source point d.
struct PEmbedding {
  Tower source;
  Tower target;
  std::size_t degree = 1;
  std::vector<TowerElement> iota;
  std::vector<std::vector<Point>> gamma;
  /// Structural extension of iota to arbitrary source elements, when the
  /// construction provides one.
  std::function<TowerElement(const TowerElement&)> iota_map;
  /// Order of the image when known from the construction.
  std::optional<Count> image_order;
  std::optional<EmbeddingReport> report;

  /// iota(x) through iota_map, or else through a table of the source group
  /// built on first use (small sources only).
  TowerElement apply(const TowerElement& x) const;

 private:
  mutable std::shared_ptr<const std::function<TowerElement(const TowerElement&)>> table_;
};

struct VerifyOptions {
  /// Exhaustive check when |H| * |Delta| is at most this.
  std::uint64_t exhaustive_limit = 1'000'000;
  /// Random (element, point) pairs in sampling mode.
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0x5eed;
  /// Target elements are flattened up to this degree in exhaustive mode.
  std::uint64_t flatten_cap = std::uint64_t{1} << 20;
  kernels::Exec exec = kernels::Exec::kParallel;
};

/// Checks the four defining properties. Failures are reported, not thrown.
EmbeddingReport pembedding_verify(const PEmbedding& e, const VerifyOptions& options = {});

/// The composite H -> F of E1: H -> G and E2: G -> F, of degree r1 * r2.
PEmbedding compose(const PEmbedding& e1, const PEmbedding& e2);

/// Degree-1 P-embedding between two single-level towers from a search witness.
PEmbedding from_witness(const PermGroup& h, const PermGroup& g, const SubgroupWitness& w);

/// Identity embedding of a tower into itself.
PEmbedding identity_embedding(const Tower& t);

/// Table-driven iota for sources whose flattening is enumerable.
std::function<TowerElement(const TowerElement&)> table_iota_map(const Tower& source, const Tower& target,
                                                                const std::vector<TowerElement>& iota);

/// Canonical JSON text (two-space indentation). Parsing then emitting gives
/// the same bytes.
std::string to_json(const PEmbedding& e);
std::string to_json(const EmbeddingReport& r);
PEmbedding pembedding_from_json(std::string_view text);

}  // namespace wreathkit
