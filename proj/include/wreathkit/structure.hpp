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

#include <span>
#include <vector>

#include "wreathkit/perm_group.hpp"

// Brute-force structural predicates for small permutation groups. All of
// them enumerate elements and throw BudgetExceeded above the enumeration cap.
namespace wreathkit {

/// Smallest normal subgroup of G containing `elements`.
PermGroup normal_closure(const PermGroup& g, std::span<const Perm> elements);
/// Commutator subgroup [G, G].
PermGroup derived_subgroup(const PermGroup& g);
bool is_abelian(const PermGroup& g);
bool is_soluble(const PermGroup& g);
/// True iff every element of `n` conjugated by every generator of `g` stays in `n`.
bool is_normal_in(const PermGroup& n, const PermGroup& g);
/// Simple: non-trivial with no proper non-trivial normal subgroup.
bool is_simple(const PermGroup& g);
/// Representatives of the conjugacy classes, in canonical element order.
std::vector<Perm> conjugacy_class_representatives(const PermGroup& g);

/// Non-abelian simple with every proper subgroup soluble. A minimal
/// insoluble subgroup is two-generated, so only subgroups <x, y> with x
/// running over class representatives are inspected.
bool is_minimal_simple(const PermGroup& g);

}  // namespace wreathkit
