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

#include "wreathkit/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "wreathkit/error.hpp"

namespace wreathkit {

// ---------------------------------------------------------------------------
// StabilizerChain

Perm StabilizerChain::transversal(const Level& level, Point beta) const {
  Perm u = Perm::identity(degree_);
  Point p = beta;
  while (level.schreier[p] != -2) {
    auto j = static_cast<std::size_t>(level.schreier[p]);
    u = level.gens[j] * u;
    p = level.inverse_gens[j][p];
  }
  return u;
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    Point beta = g[levels_[i].base];
    if (levels_[i].schreier[beta] == -1) return {std::move(g), i};
    g = g * transversal(levels_[i], beta).inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.inverse_gens.clear();
  for (const auto& s : level.gens) level.inverse_gens.push_back(s.inverse());
  level.schreier.assign(degree_, -1);
  level.orbit.clear();
  level.schreier[level.base] = -2;
  level.orbit.push_back(level.base);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point x = level.orbit[k];
    for (std::size_t j = 0; j < level.gens.size(); ++j) {
      Point y = level.gens[j][x];
      if (level.schreier[y] == -1) {
        level.schreier[y] = static_cast<std::int32_t>(j);
        level.orbit.push_back(y);
      }
    }
  }
}

StabilizerChain StabilizerChain::build(std::span<const Perm> generators, std::size_t degree,
                                       const GroupLimits& limits) {
  if (degree > limits.stabilizer_chain_max_degree)
    throw BudgetExceeded("stabilizer chain: degree " + std::to_string(degree) + " above budget");
  StabilizerChain chain;
  chain.degree_ = degree;

  std::vector<Perm> strong;
  for (const auto& g : generators)
    if (!g.is_identity()) strong.push_back(g);
  if (strong.empty()) return chain;

  auto moved_point = [](const Perm& g) {
    for (Point x = 0; x < g.degree(); ++x)
      if (g[x] != x) return x;
    return Point{0};
  };

  std::vector<Point> base;
  for (const auto& s : strong) {
    bool fixes_base = std::all_of(base.begin(), base.end(), [&](Point b) { return s[b] == b; });
    if (fixes_base) base.push_back(moved_point(s));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level level;
    level.base = base[i];
    for (const auto& s : strong) {
      bool fixes_prefix = true;
      for (std::size_t k = 0; k < i; ++k) fixes_prefix = fixes_prefix && s[base[k]] == base[k];
      if (fixes_prefix) level.gens.push_back(s);
    }
    chain.rebuild_orbit(level);
    chain.levels_.push_back(std::move(level));
  }

  std::uint64_t sifts = 0;
  std::size_t i = chain.levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    const Level& level = chain.levels_[i];
    for (std::size_t k = 0; !restarted && k < level.orbit.size(); ++k) {
      Point beta = level.orbit[k];
      Perm u_beta = chain.transversal(level, beta);
      for (std::size_t j = 0; j < level.gens.size(); ++j) {
        const Perm& s = level.gens[j];
        Point image = s[beta];
        Perm schreier_gen = u_beta * s * chain.transversal(level, image).inverse();
        if (++sifts > limits.stabilizer_chain_sift_budget)
          throw BudgetExceeded("stabilizer chain: sift budget exhausted");
        auto [residue, depth] = chain.strip(std::move(schreier_gen), i + 1);
        if (depth == chain.levels_.size() && residue.is_identity()) continue;
        if (depth == chain.levels_.size()) {
          Level fresh;
          fresh.base = moved_point(residue);
          chain.levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= depth; ++l) {
          chain.levels_[l].gens.push_back(residue);
          chain.rebuild_orbit(chain.levels_[l]);
        }
        i = depth + 1;  // the loop decrement lands on `depth`
        restarted = true;
        break;
      }
    }
  }
  return chain;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& level : levels_) n *= level.orbit.size();
  return n;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, depth] = strip(g, 0);
  return depth == levels_.size() && residue.is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::optional<std::vector<Perm>> enumerate_elements(std::span<const Perm> generators, std::size_t degree,
                                                    std::uint64_t cap) {
  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_set<Perm, PermHash> seen{elements.front()};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& s : generators) {
      Perm y = elements[k] * s;
      if (seen.insert(y).second) {
        if (elements.size() >= cap) return std::nullopt;
        elements.push_back(std::move(y));
      }
    }
  }
  return elements;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Cache {
  std::mutex mutex;
  bool enumeration_attempted = false;
  std::optional<std::vector<Perm>> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;
  std::optional<StabilizerChain> chain;
  std::optional<BigInt> order;
};

PermGroup::PermGroup() : PermGroup(Domain::range(1), {}) {}

PermGroup::PermGroup(Domain domain, std::vector<Perm> generators, std::string spec, GroupLimits limits)
    : domain_(std::move(domain)),
      generators_(std::move(generators)),
      spec_(std::move(spec)),
      limits_(limits),
      cache_(std::make_shared<Cache>()) {
  if (domain_.size() == 0) throw PreconditionError("PermGroup: empty domain");
  for (const auto& g : generators_)
    if (g.degree() != domain_.size())
      throw PreconditionError("PermGroup: generator of degree " + std::to_string(g.degree()) +
                              " on a domain of size " + std::to_string(domain_.size()));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::string spec, GroupLimits limits)
    : PermGroup(Domain::range(degree), std::move(generators), std::move(spec), limits) {}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::string PermGroup::spec() const {
  if (!spec_.empty()) return spec_;
  std::string s = "perm(" + std::to_string(degree()) + "):";
  for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? ";" : "") + generators_[i].to_cycle_string();
  return s;
}

PermGroup PermGroup::with_spec(std::string spec) const {
  PermGroup g = *this;
  g.spec_ = std::move(spec);
  return g;
}

namespace {

std::uint64_t element_budget(const GroupLimits& limits, std::size_t degree) {
  return std::min<std::uint64_t>(limits.enumeration_cap,
                                 std::max<std::uint64_t>(1, limits.enumeration_point_budget / std::max<std::size_t>(degree, 1)));
}

}  // namespace

BigInt PermGroup::order() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->order) return *cache_->order;
    if (!cache_->enumeration_attempted) {
      cache_->enumeration_attempted = true;
      cache_->elements = enumerate_elements(generators_, degree(), element_budget(limits_, degree()));
      if (cache_->elements) {
        for (std::size_t i = 0; i < cache_->elements->size(); ++i) cache_->index.emplace((*cache_->elements)[i], i);
        cache_->order = BigInt(cache_->elements->size());
        return *cache_->order;
      }
    } else if (cache_->elements) {
      cache_->order = BigInt(cache_->elements->size());
      return *cache_->order;
    }
  }
  BigInt n = stabilizer_chain().order();
  std::lock_guard lock(cache_->mutex);
  cache_->order = n;
  return n;
}

Count PermGroup::order_count() const { return Count::of_smooth(order(), degree()); }

bool PermGroup::is_trivial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Perm& g) { return g.is_identity(); });
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> out{x};
  std::vector<bool> seen(degree(), false);
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      Point y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (Point y : o) seen[y] = true;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree(); }

const std::vector<Perm>& PermGroup::elements() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->elements) {
    if (cache_->enumeration_attempted && cache_->order && *cache_->order <= limits_.enumeration_cap) {
      // order came from the chain because of the point budget; enumerate anyway
    } else if (cache_->enumeration_attempted) {
      throw BudgetExceeded("group order above the enumeration cap");
    }
    cache_->enumeration_attempted = true;
    cache_->elements = enumerate_elements(generators_, degree(), limits_.enumeration_cap);
    if (!cache_->elements) throw BudgetExceeded("group order above the enumeration cap");
    for (std::size_t i = 0; i < cache_->elements->size(); ++i) cache_->index.emplace((*cache_->elements)[i], i);
    cache_->order = BigInt(cache_->elements->size());
  }
  return *cache_->elements;
}

std::optional<std::size_t> PermGroup::element_index(const Perm& g) const {
  elements();
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->index.find(g);
  if (it == cache_->index.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree()) return false;
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->elements) return cache_->index.count(g) > 0;
  }
  return stabilizer_chain().contains(g);
}

const StabilizerChain& PermGroup::stabilizer_chain() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->chain) return *cache_->chain;
  }
  auto chain = StabilizerChain::build(generators_, degree(), limits_);
  std::lock_guard lock(cache_->mutex);
  if (!cache_->chain) cache_->chain = std::move(chain);
  return *cache_->chain;
}

bool PermGroup::same_generators(const PermGroup& other) const {
  return degree() == other.degree() && generators_ == other.generators_;
}

PermGroup group_from_generators(Domain domain, std::vector<Perm> generators, GroupLimits limits) {
  PermGroup g(std::move(domain), std::move(generators), {}, limits);
  g.order();
  return g;
}

BigInt group_order(const PermGroup& g) { return g.order(); }

// ---------------------------------------------------------------------------
// Restriction and r-subset action

Restriction restrict_to_invariant_subset(const PermGroup& g, std::span<const Point> subset) {
  std::vector<Point> points(subset.begin(), subset.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw PreconditionError("restrict: empty subset");
  std::vector<std::int64_t> position(g.degree(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= g.degree()) throw PreconditionError("restrict: point outside the domain");
    position[points[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Perm> induced_gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto pos = position[s[points[i]]];
      if (pos < 0) throw PreconditionError("restrict: subset is not invariant under " + s.to_cycle_string());
      images[i] = static_cast<Point>(pos);
    }
    induced_gens.emplace_back(std::move(images));
  }
  std::vector<std::string> labels;
  for (Point p : points) labels.push_back(g.domain().label(p));
  PermGroup induced(Domain(std::move(labels)), std::move(induced_gens), {}, g.limits());
  BigInt kernel = g.order() / induced.order();
  return {std::move(induced), std::move(points), std::move(kernel)};
}

SubsetAction::SubsetAction(PermGroup group, std::size_t r) : group_(std::move(group)), r_(r) {
  if (r_ < 1 || r_ > group_.degree())
    throw PreconditionError("r-subset action: r = " + std::to_string(r_) + " outside 1.." + std::to_string(group_.degree()));
}

BigInt SubsetAction::subset_count() const {
  BigInt n = 1;
  for (std::size_t i = 0; i < r_; ++i) n = n * (group_.degree() - i) / (i + 1);
  return n;
}

std::vector<Point> SubsetAction::image(std::span<const Point> subset, const Perm& g) const {
  if (subset.size() != r_) throw PreconditionError("r-subset action: subset of the wrong size");
  std::vector<Point> out;
  out.reserve(subset.size());
  for (Point x : subset) out.push_back(g[x]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> SubsetAction::orbit(std::span<const Point> subset) const {
  std::vector<Point> start(subset.begin(), subset.end());
  std::sort(start.begin(), start.end());
  std::vector<std::vector<Point>> out{start};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : group_.generators()) {
      auto y = image(out[k], g);
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(std::move(y));
    }
  return out;
}

PermGroup SubsetAction::materialize(std::uint64_t cap) const {
  if (subset_count() > cap) throw CapExceeded("r-subset action: too many subsets to materialize");
  std::vector<std::vector<Point>> subsets;
  std::vector<Point> current(r_);
  std::iota(current.begin(), current.end(), Point{0});
  const auto n = static_cast<Point>(group_.degree());
  while (true) {
    subsets.push_back(current);
    std::size_t i = r_;
    while (i > 0 && current[i - 1] == n - r_ + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t k = i; k < r_; ++k) current[k] = current[k - 1] + 1;
  }
  std::map<std::vector<Point>, Point> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subsets[i], static_cast<Point>(i));
  std::vector<Perm> gens;
  for (const auto& g : group_.generators()) {
    std::vector<Point> images(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) images[i] = index.at(image(subsets[i], g));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(subsets.size(), std::move(gens), {}, group_.limits());
}

SubsetAction induced_action_on_r_subsets(const PermGroup& g, std::size_t r) { return SubsetAction(g, r); }

}  // namespace wreathkit
