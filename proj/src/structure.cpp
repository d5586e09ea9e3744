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

#include "wreathkit/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "wreathkit/error.hpp"

namespace wreathkit {

PermGroup normal_closure(const PermGroup& g, std::span<const Perm> elements) {
  std::vector<Perm> gens;
  for (const auto& x : elements)
    if (!x.is_identity()) gens.push_back(x);
  while (true) {
    PermGroup n(g.domain(), gens, {}, g.limits());
    std::optional<Perm> missing;
    for (const auto& y : gens) {
      for (const auto& c : g.generators()) {
        Perm z = y.conjugate_by(c);
        if (!n.contains(z)) {
          missing = std::move(z);
          break;
        }
      }
      if (missing) break;
    }
    if (!missing) return n;
    gens.push_back(std::move(*missing));
  }
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> commutators;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      commutators.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(g, commutators);
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_soluble(const PermGroup& g) {
  PermGroup current = g;
  while (!current.is_trivial()) {
    if (is_abelian(current)) return true;
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  for (const auto& y : n.generators())
    for (const auto& c : g.generators())
      if (!n.contains(y.conjugate_by(c))) return false;
  return true;
}

std::vector<Perm> conjugacy_class_representatives(const PermGroup& g) {
  const auto& elements = g.elements();
  std::vector<bool> seen(elements.size(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(elements[i]);
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      const Perm x = elements[stack.back()];
      stack.pop_back();
      for (const auto& c : g.generators()) {
        auto j = *g.element_index(x.conjugate_by(c));
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  return reps;
}

bool is_simple(const PermGroup& g) {
  const BigInt order = g.order();
  if (order == 1) return false;
  bool prime = true;
  for (BigInt d = 2; d * d <= order && prime; ++d) prime = order % d != 0;
  if (prime) return true;
  for (const auto& x : conjugacy_class_representatives(g)) {
    if (x.is_identity()) continue;
    const Perm one[] = {x};
    if (normal_closure(g, one).order() != order) return false;
  }
  return true;
}

bool is_minimal_simple(const PermGroup& g) {
  if (is_abelian(g) || !is_simple(g)) return false;
  const auto& elements = g.elements();
  const std::uint64_t half = elements.size() / 2;
  std::unordered_set<std::size_t> checked;  // hashes of generated subgroups already known to be soluble
  for (const auto& x : conjugacy_class_representatives(g)) {
    if (x.is_identity()) continue;
    for (const auto& y : elements) {
      const Perm pair[] = {x, y};
      // A proper subgroup has at most |G|/2 elements.
      auto sub = enumerate_elements(pair, g.degree(), half);
      if (!sub) continue;
      std::size_t key = sub->size();
      PermHash hash;
      std::vector<std::size_t> hashes;
      for (const auto& z : *sub) hashes.push_back(hash(z));
      std::sort(hashes.begin(), hashes.end());
      for (auto h : hashes) key = key * 1000003u ^ h;
      if (!checked.insert(key).second) continue;
      if (!is_soluble(PermGroup(g.domain(), {x, y}, {}, g.limits()))) return false;
    }
  }
  return true;
}

}  // namespace wreathkit
