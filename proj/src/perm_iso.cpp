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

#include "wreathkit/perm_iso.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "wreathkit/error.hpp"

namespace wreathkit {
namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Perm, Perm>& p) const noexcept {
    PermHash h;
    return h(p.first) * 1000003u ^ h(p.second);
  }
};

enum class TargetOrder { kAscending, kDescending };

struct SearchResult {
  std::vector<Perm> images;
  std::vector<Point> gamma;
};

// Backtracking over generator images and, for each complete choice, over
// the placement of the source orbits in the target domain.
class IsoSearch {
 public:
  IsoSearch(const PermGroup& source, const std::vector<Perm>& target_elements, std::size_t target_degree,
            std::vector<std::vector<std::size_t>> candidates, TargetOrder order, std::uint64_t required_order,
            std::atomic<std::uint64_t>& nodes, std::uint64_t budget)
      : source_(source),
        elements_(target_elements),
        target_degree_(target_degree),
        candidates_(std::move(candidates)),
        order_(order),
        required_order_(required_order),
        orbits_(source.orbits()),
        nodes_(nodes),
        budget_(budget) {}

  // Search with the first generator fixed to candidate `first` (or the
  // whole tree when the source has no generators).
  std::optional<SearchResult> run_from(std::optional<std::size_t> first) {
    chosen_.clear();
    if (first) chosen_.push_back(*first);
    if (choose(chosen_.size())) return result_;
    return std::nullopt;
  }

 private:
  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      throw BudgetExceeded("permutation isomorphism search: node budget exhausted");
  }

  bool choose(std::size_t i) {
    if (i == candidates_.size()) return place_all();
    for (std::size_t c : candidates_[i]) {
      tick();
      chosen_.push_back(c);
      if (choose(i + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool place_all() {
    gamma_.assign(source_.degree(), kUnset);
    used_.assign(target_degree_, false);
    if (!place(0)) return false;
    result_.images.clear();
    for (std::size_t c : chosen_) result_.images.push_back(elements_[c]);
    result_.gamma = gamma_;
    return true;
  }

  bool place(std::size_t orbit_index) {
    if (orbit_index == orbits_.size()) return generated_order_matches();
    const Point rep = orbits_[orbit_index].front();
    const auto n = static_cast<std::int64_t>(target_degree_);
    for (std::int64_t k = 0; k < n; ++k) {
      auto target = static_cast<Point>(order_ == TargetOrder::kAscending ? k : n - 1 - k);
      if (used_[target]) continue;
      tick();
      std::vector<Point> assigned;
      if (propagate(rep, target, assigned) && place(orbit_index + 1)) return true;
      for (Point d : assigned) {
        used_[gamma_[d]] = false;
        gamma_[d] = kUnset;
      }
    }
    return false;
  }

  bool propagate(Point rep, Point target, std::vector<Point>& assigned) {
    gamma_[rep] = target;
    used_[target] = true;
    assigned.push_back(rep);
    const auto& gens = source_.generators();
    for (std::size_t q = 0; q < assigned.size(); ++q) {
      Point d = assigned[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Point d2 = gens[i][d];
        Point t2 = elements_[chosen_[i]][gamma_[d]];
        if (gamma_[d2] == kUnset) {
          if (used_[t2]) return false;
          gamma_[d2] = t2;
          used_[t2] = true;
          assigned.push_back(d2);
        } else if (gamma_[d2] != t2) {
          return false;
        }
      }
    }
    return true;
  }

  bool generated_order_matches() {
    std::vector<Perm> images;
    for (std::size_t c : chosen_) images.push_back(elements_[c]);
    auto closure = enumerate_elements(images, target_degree_, required_order_);
    return closure && closure->size() == required_order_;
  }

  static constexpr Point kUnset = std::numeric_limits<Point>::max();

  const PermGroup& source_;
  const std::vector<Perm>& elements_;
  std::size_t target_degree_;
  std::vector<std::vector<std::size_t>> candidates_;
  TargetOrder order_;
  std::uint64_t required_order_;
  std::vector<std::vector<Point>> orbits_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;

  std::vector<std::size_t> chosen_;
  std::vector<Point> gamma_;
  std::vector<bool> used_;
  SearchResult result_;
};

std::optional<SearchResult> run_search(const PermGroup& source, const PermGroup& target,
                                       std::vector<std::vector<std::size_t>> candidates, TargetOrder order,
                                       const SearchLimits& limits) {
  const auto& elements = target.elements();
  const auto required = static_cast<std::uint64_t>(source.order());
  std::atomic<std::uint64_t> nodes{0};

  if (candidates.empty()) {
    IsoSearch search(source, elements, target.degree(), {}, order, required, nodes, limits.node_budget);
    return search.run_from(std::nullopt);
  }

  const auto first = candidates.front();
  const auto& rest = candidates;
  const auto count = static_cast<std::int64_t>(first.size());

  if (!limits.parallel) {
    IsoSearch search(source, elements, target.degree(), rest, order, required, nodes, limits.node_budget);
    for (std::size_t c : first)
      if (auto r = search.run_from(c)) return r;
    return std::nullopt;
  }

  std::atomic<std::int64_t> best{count};
  std::atomic<bool> exhausted{false};
  std::optional<SearchResult> best_result;
#pragma omp parallel
  {
    IsoSearch search(source, elements, target.degree(), rest, order, required, nodes, limits.node_budget);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < count; ++k) {
      if (k >= best.load() || exhausted.load()) continue;
      try {
        if (auto r = search.run_from(first[static_cast<std::size_t>(k)])) {
#pragma omp critical(wreathkit_iso_best)
          {
            if (k < best.load()) {
              best = k;
              best_result = std::move(r);
            }
          }
        }
      } catch (const BudgetExceeded&) {
        exhausted = true;
      }
    }
  }
  if (exhausted) throw BudgetExceeded("permutation isomorphism search: node budget exhausted");
  return best_result;
}

}  // namespace

std::optional<ActionEquivalence> actions_equivalent(const PermGroup& h, const PermGroup& k,
                                                    const SearchLimits& limits) {
  if (h.degree() != k.degree()) return std::nullopt;
  if (h.same_generators(k)) {
    std::vector<Point> id(h.degree());
    for (Point x = 0; x < id.size(); ++x) id[x] = x;
    return ActionEquivalence{h.generators(), id};
  }
  if (h.order() != k.order()) return std::nullopt;
  const auto& elements = k.elements();
  std::vector<std::vector<std::size_t>> candidates;
  for (const auto& s : h.generators()) {
    auto type = s.cycle_type();
    std::vector<std::size_t> list;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i].cycle_type() == type) list.push_back(i);
    if (list.empty()) return std::nullopt;
    candidates.push_back(std::move(list));
  }
  auto r = run_search(h, k, std::move(candidates), TargetOrder::kAscending, limits);
  if (!r) return std::nullopt;
  return ActionEquivalence{std::move(r->images), std::move(r->gamma)};
}

ActionEquivalence inverse_equivalence(const PermGroup& h, const PermGroup& k, const ActionEquivalence& e) {
  std::vector<Point> inverse(e.bijection.size());
  for (Point d = 0; d < e.bijection.size(); ++d) inverse[e.bijection[d]] = d;
  ActionEquivalence out;
  out.bijection = inverse;
  for (const auto& s : k.generators()) {
    std::vector<Point> images(h.degree());
    for (Point d = 0; d < images.size(); ++d) images[d] = inverse[s[e.bijection[d]]];
    out.iso.emplace_back(std::move(images));
  }
  return out;
}

std::optional<SubgroupWitness> perm_iso_to_subgroup(const PermGroup& h, const PermGroup& g,
                                                    const SearchLimits& limits) {
  auto finish = [](SearchResult r) {
    SubgroupWitness w;
    w.subgroup_generators = r.images;
    w.subset = r.gamma;
    std::sort(w.subset.begin(), w.subset.end());
    w.equivalence = {std::move(r.images), std::move(r.gamma)};
    return w;
  };
  if (h.same_generators(g)) {
    SearchResult r{h.generators(), std::vector<Point>(h.degree())};
    for (Point x = 0; x < h.degree(); ++x) r.gamma[x] = x;
    return finish(std::move(r));
  }
  if (h.degree() > g.degree()) return std::nullopt;
  const BigInt order_h = h.order();
  if (g.order() % order_h != 0) return std::nullopt;

  const auto& elements = g.elements();
  std::vector<std::uint64_t> element_orders(elements.size());
  std::vector<std::vector<std::size_t>> element_types(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    element_orders[i] = elements[i].order();
    element_types[i] = elements[i].cycle_type();
  }
  std::vector<std::vector<std::size_t>> candidates;
  for (const auto& s : h.generators()) {
    const auto order = s.order();
    const auto type = s.cycle_type();
    std::vector<std::size_t> list;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (element_orders[i] == order && cycle_type_contains(element_types[i], type)) list.push_back(i);
    if (list.empty()) return std::nullopt;
    candidates.push_back(std::move(list));
  }
  auto r = run_search(h, g, std::move(candidates), TargetOrder::kDescending, limits);
  if (!r) return std::nullopt;
  return finish(std::move(*r));
}

std::optional<HomGraph> hom_graph(std::span<const Perm> source_gens, std::size_t source_degree,
                                  std::span<const Perm> target_gens, std::size_t target_degree,
                                  std::uint64_t cap) {
  if (source_gens.size() != target_gens.size())
    throw PreconditionError("hom_graph: generator lists of different length");
  HomGraph graph;
  graph.pairs.emplace_back(Perm::identity(source_degree), Perm::identity(target_degree));
  std::unordered_set<std::pair<Perm, Perm>, PairHash> seen{graph.pairs.front()};
  for (std::size_t k = 0; k < graph.pairs.size(); ++k) {
    for (std::size_t i = 0; i < source_gens.size(); ++i) {
      std::pair<Perm, Perm> next{graph.pairs[k].first * source_gens[i], graph.pairs[k].second * target_gens[i]};
      if (seen.insert(next).second) {
        if (graph.pairs.size() >= cap) return std::nullopt;
        graph.pairs.push_back(std::move(next));
      }
    }
  }
  std::unordered_set<Perm, PermHash> firsts, seconds;
  for (const auto& [x, y] : graph.pairs) {
    firsts.insert(x);
    seconds.insert(y);
  }
  graph.well_defined = firsts.size() == graph.pairs.size();
  graph.injective = seconds.size() == graph.pairs.size();
  return graph;
}

bool witness_is_valid(const PermGroup& h, const PermGroup& g, const SubgroupWitness& w) {
  const auto& e = w.equivalence;
  if (e.iso.size() != h.generators().size() || e.bijection.size() != h.degree()) return false;
  for (const auto& y : e.iso)
    if (y.degree() != g.degree() || !g.contains(y)) return false;
  std::vector<bool> used(g.degree(), false);
  for (Point t : e.bijection) {
    if (t >= g.degree() || used[t]) return false;
    used[t] = true;
  }
  auto sorted = e.bijection;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != w.subset || w.subgroup_generators != e.iso) return false;
  auto graph = hom_graph(h.generators(), h.degree(), e.iso, g.degree(), 4'000'000);
  if (!graph || !graph->well_defined || !graph->injective) return false;
  for (const auto& [x, y] : graph->pairs)
    for (Point d = 0; d < h.degree(); ++d)
      if (e.bijection[x[d]] != y[e.bijection[d]]) return false;
  return true;
}

SubgroupWitness compose_witnesses(const PermGroup& h, const PermGroup& g, const PermGroup& f,
                                  const SubgroupWitness& hg, const SubgroupWitness& gf) {
  auto graph = hom_graph(g.generators(), g.degree(), gf.equivalence.iso, f.degree(), g.limits().enumeration_cap);
  if (!graph || !graph->well_defined) throw PreconditionError("compose_witnesses: second witness is not a homomorphism");
  std::unordered_map<Perm, Perm, PermHash> image;
  for (auto& [x, y] : graph->pairs) image.emplace(x, y);
  SubgroupWitness out;
  for (const auto& x : hg.equivalence.iso) {
    auto it = image.find(x);
    if (it == image.end()) throw PreconditionError("compose_witnesses: first witness leaves the middle group");
    out.equivalence.iso.push_back(it->second);
  }
  for (Point d = 0; d < h.degree(); ++d) out.equivalence.bijection.push_back(gf.equivalence.bijection[hg.equivalence.bijection[d]]);
  out.subgroup_generators = out.equivalence.iso;
  out.subset = out.equivalence.bijection;
  std::sort(out.subset.begin(), out.subset.end());
  return out;
}

}  // namespace wreathkit
