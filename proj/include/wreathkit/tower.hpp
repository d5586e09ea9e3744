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
#include <memory>
#include <string_view>
#include <optional>
#include <string>
#include <vector>

#include "wreathkit/count.hpp"
#include "wreathkit/kernels.hpp"
#include "wreathkit/perm_group.hpp"

namespace wreathkit {

enum class TowerKind { kImprimitive, kProductAction };

std::string to_string(TowerKind kind);  // "ia" / "pa"
TowerKind parse_tower_kind(std::string_view text);

/// An element of a tower with levels L_0 (top) .. L_{n-1} (bottom).
/// bases[k] holds one element of L_k per point of the level-(k-1) domain
/// (bases[0] has a single entry). The element acts as base-then-top.
struct TowerElement {
  std::vector<std::vector<Perm>> bases;
  bool operator==(const TowerElement&) const = default;
};

struct TowerElementHash {
  std::size_t operator()(const TowerElement& e) const noexcept;
};

/// A point of the bottom domain.
///   imprimitive: coordinates deepest level first, (w_{n-1}, ..., w_0);
///   product action: the values f(t) for t over the level-(n-2) domain in
///   its canonical order (a single coordinate at depth 1).
struct TowerPoint {
  std::vector<Point> coords;
  bool operator==(const TowerPoint&) const = default;
};

/// Where a tower generator comes from: generator `gen` of level `level`,
/// placed at point `point` of the level-(level-1) domain.
struct GeneratorInfo {
  std::size_t level = 0;
  Point point = 0;
  std::size_t gen = 0;
};

/// Default cap on materialized domains (flatten, point tables).
inline constexpr std::uint64_t kMaterializationCap = 100'000;
/// Elements are stored densely; the level above the bottom must fit this.
inline constexpr std::uint64_t kElementDomainCap = std::uint64_t{1} << 22;

/// An iterated wreath product given by its levels, top first. For the
/// imprimitive kind the levels are S_1..S_n and the group acts on
/// Omega_n x ... x Omega_1; for the product-action kind they are S_0..S_{n-1}
/// and the group acts on the iterated function space. A depth-1 tower is the
/// group itself and compares equal regardless of kind.
class Tower {
 public:
  Tower() = default;
  Tower(TowerKind kind, std::vector<PermGroup> levels);
  static Tower single(PermGroup g);

  TowerKind kind() const { return kind_; }
  std::size_t depth() const { return levels_.size(); }
  const std::vector<PermGroup>& levels() const { return levels_; }
  const PermGroup& level(std::size_t k) const { return levels_.at(k); }
  const PermGroup& bottom() const { return levels_.back(); }

  /// Size of the domain acted on by the first k+1 levels.
  const Count& degree_at(std::size_t k) const { return degrees_.at(k); }
  const Count& degree() const { return degrees_.back(); }
  /// degree_at(k) as an index when it fits in 32 bits.
  std::optional<std::uint64_t> degree_index(std::size_t k) const;
  std::uint64_t degree_u64() const;  ///< throws CapExceeded if it does not fit
  Count order() const;
  bool is_transitive() const;

  /// `pa:C2:reg,C2:reg` style description, in the list order of parse_tower.
  std::string spec() const;

  /// Levels 0..k-1; the target of project_to_top when k = depth()-1.
  Tower prefix(std::size_t k) const;
  /// The same levels with `g` appended at the bottom.
  Tower extended(PermGroup g) const;
  bool operator==(const Tower& other) const;

  // Elements. Require degree_at(depth()-2) <= kElementDomainCap.
  TowerElement identity() const;
  TowerElement compose(const TowerElement& a, const TowerElement& b) const;
  TowerElement inverse(const TowerElement& a) const;
  bool is_identity(const TowerElement& a) const;
  /// Throws PreconditionError when `a` is malformed for this tower.
  void check_element(const TowerElement& a) const;
  bool is_element(const TowerElement& a) const;
  /// Drops the bottom level's base: the map onto prefix(depth()-1).
  TowerElement project_to_top(const TowerElement& a) const;
  /// Embeds an element of prefix(depth()-1) with trivial bottom base.
  TowerElement lift_top(const TowerElement& top) const;
  /// Element with only the bottom base set.
  TowerElement base_element(std::vector<Perm> bottom_base) const;

  /// Generators: those of L_0, then for each level k the generators of L_k
  /// placed at one point of every orbit of the first k levels.
  const std::vector<TowerElement>& generators() const;
  const std::vector<GeneratorInfo>& generator_info() const;

  /// Permutation induced on the domain of the first k+1 levels.
  Perm induced(const TowerElement& a, std::size_t k, kernels::Exec exec = kernels::Exec::kParallel) const;
  /// Permutation of the whole domain; degree must be at most `cap`.
  Perm flatten_element(const TowerElement& a, std::uint64_t cap = kMaterializationCap,
                       kernels::Exec exec = kernels::Exec::kParallel) const;
  /// The tower as an explicit permutation group on 0..degree-1, points in the
  /// order of point_index.
  PermGroup flatten(std::uint64_t cap = kMaterializationCap, kernels::Exec exec = kernels::Exec::kParallel) const;

  // Points.
  TowerPoint act(const TowerPoint& x, const TowerElement& a) const;
  TowerPoint point_at(std::uint64_t index) const;
  std::uint64_t point_index(const TowerPoint& x) const;
  void check_point(const TowerPoint& x) const;

 private:
  void require_elements() const;
  std::size_t top_points(std::size_t k) const;  // number of bases at level k

  TowerKind kind_ = TowerKind::kProductAction;
  std::vector<PermGroup> levels_;
  std::vector<Count> degrees_;
  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

/// Point-index action of one element, precomputed so that each point costs
/// O(depth) (imprimitive) or O(level-(n-2) degree) (product action) without
/// flattening the element. The tower degree must be indexable.
class PointMap {
 public:
  PointMap(const Tower& t, const TowerElement& a);
  std::uint64_t operator()(std::uint64_t index) const;

 private:
  TowerKind kind_;
  std::vector<std::size_t> omegas_;          // level degrees, top first
  std::vector<std::vector<Perm>> bases_;     // imprimitive: all levels; product action: bottom level only
  std::vector<std::uint64_t> weights_;       // product action: |Omega|^(D-1-pi(s))
};

/// S wr H on Omega x Delta. H may itself be an imprimitive tower.
Tower wreath_imprimitive(const PermGroup& s, const Tower& h);
Tower wreath_imprimitive(const PermGroup& s, const PermGroup& h);
/// S wr G in product action on Omega^Sigma. G may itself be a product-action tower.
Tower wreath_product_action(const PermGroup& s, const Tower& g);
Tower wreath_product_action(const PermGroup& s, const PermGroup& g);

/// The n-th iterated wreath product of the first n terms of `seq`.
Tower tower(TowerKind kind, const std::vector<PermGroup>& seq, std::size_t n);

/// Splits on `sep` outside parentheses and brackets.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// Parses `pa:C2,C3,C2` / `ia:C3,C2`. Product-action lists give S_0, S_1, ...
/// top first; imprimitive lists are written like the wreath product, so
/// `ia:C3,C2` is C3 wr C2 with C2 on top. With `level` given, a shorter type
/// sequence is repeated periodically.
Tower parse_tower(std::string_view spec, std::optional<std::size_t> level = std::nullopt);

}  // namespace wreathkit
