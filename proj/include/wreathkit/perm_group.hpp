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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wreathkit/count.hpp"
#include "wreathkit/perm.hpp"

namespace wreathkit {

/// Budgets shared by the enumeration and stabilizer-chain procedures.
struct GroupLimits {
  /// Groups up to this many elements are enumerated breadth-first.
  std::uint64_t enumeration_cap = 1'000'000;
  /// Enumeration also stops once elements * degree exceeds this.
  std::uint64_t enumeration_point_budget = std::uint64_t{1} << 27;
  /// Stabilizer chains are only built up to this degree.
  std::size_t stabilizer_chain_max_degree = std::size_t{1} << 14;
  /// Maximum number of sifts during one stabilizer-chain construction.
  std::uint64_t stabilizer_chain_sift_budget = 20'000'000;
};

/// Base and strong generating set built by the deterministic Schreier-Sims
/// procedure, with Schreier vectors for the transversals.
class StabilizerChain {
 public:
  static StabilizerChain build(std::span<const Perm> generators, std::size_t degree,
                               const GroupLimits& limits = {});

  BigInt order() const;
  bool contains(const Perm& g) const;
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Perm> inverse_gens;
    std::vector<std::int32_t> schreier;  // -1: outside orbit, -2: base point, else generator index
    std::vector<Point> orbit;
  };

  Perm transversal(const Level& level, Point beta) const;
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void rebuild_orbit(Level& level) const;

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

/// Breadth-first closure of `generators` starting from the identity and
/// multiplying by generators on the right, in generator order. This fixes the
/// canonical element order used by every deterministic search. Returns
/// nullopt when the group has more than `cap` elements.
std::optional<std::vector<Perm>> enumerate_elements(std::span<const Perm> generators, std::size_t degree,
                                                    std::uint64_t cap);

/// A permutation group given by generators. Copies share the lazily computed
/// order, element list and stabilizer chain.
class PermGroup {
 public:
  PermGroup();
  PermGroup(Domain domain, std::vector<Perm> generators, std::string spec = {}, GroupLimits limits = {});
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::string spec = {}, GroupLimits limits = {});

  static PermGroup trivial(std::size_t degree);

  const Domain& domain() const { return domain_; }
  std::size_t degree() const { return domain_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const GroupLimits& limits() const { return limits_; }

  /// The catalog spec this group was built from, or the `perm(n):...` form.
  std::string spec() const;
  PermGroup with_spec(std::string spec) const;

  BigInt order() const;
  Count order_count() const;
  bool is_trivial() const;
  bool is_transitive() const;
  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;

  /// Elements in canonical (breadth-first) order. Throws BudgetExceeded when
  /// the order is above the enumeration cap.
  const std::vector<Perm>& elements() const;
  /// Position of `g` in elements(), or nullopt if g is not in the group.
  std::optional<std::size_t> element_index(const Perm& g) const;
  bool contains(const Perm& g) const;
  const StabilizerChain& stabilizer_chain() const;

  /// Same generators and degree.
  bool same_generators(const PermGroup& other) const;

 private:
  struct Cache;
  Domain domain_;
  std::vector<Perm> generators_;
  std::string spec_;
  GroupLimits limits_;
  std::shared_ptr<Cache> cache_;
};

/// Builds the group, computing its order and transitivity eagerly: by
/// breadth-first closure when it stays within the enumeration budget, else
/// through a stabilizer chain.
PermGroup group_from_generators(Domain domain, std::vector<Perm> generators, GroupLimits limits = {});

BigInt group_order(const PermGroup& g);

struct Restriction {
  PermGroup induced;           ///< on 0..|subset|-1, labelled by the original points
  std::vector<Point> points;   ///< sorted subset; induced point i is points[i]
  BigInt kernel_order;         ///< order of the kernel of the restriction map
};

/// The permutation group induced on a G-invariant subset, with the order of
/// the kernel of the restriction map. Throws PreconditionError when the
/// subset is not invariant.
Restriction restrict_to_invariant_subset(const PermGroup& g, std::span<const Point> subset);

/// The induced action of a permutation group on r-subsets of its domain,
/// evaluated on demand.
class SubsetAction {
 public:
  SubsetAction(PermGroup group, std::size_t r);

  std::size_t r() const { return r_; }
  const PermGroup& group() const { return group_; }
  BigInt subset_count() const;

  /// Sorted image {x^g : x in subset}.
  std::vector<Point> image(std::span<const Point> subset, const Perm& g) const;
  /// Orbit of a subset under the group, in discovery order.
  std::vector<std::vector<Point>> orbit(std::span<const Point> subset) const;
  /// The action as a permutation group on all r-subsets in lexicographic
  /// order; throws CapExceeded above `cap` subsets.
  PermGroup materialize(std::uint64_t cap = 100'000) const;

 private:
  PermGroup group_;
  std::size_t r_;
};

SubsetAction induced_action_on_r_subsets(const PermGroup& g, std::size_t r);

}  // namespace wreathkit
