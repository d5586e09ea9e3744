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

#include "wreathkit/tower.hpp"

#include <algorithm>

#include <limits>
#include <mutex>

#include "wreathkit/catalog.hpp"
#include "wreathkit/error.hpp"

namespace wreathkit {

std::string to_string(TowerKind kind) { return kind == TowerKind::kImprimitive ? "ia" : "pa"; }

TowerKind parse_tower_kind(std::string_view text) {
  if (text == "ia") return TowerKind::kImprimitive;
  if (text == "pa") return TowerKind::kProductAction;
  throw ParseError("tower kind must be 'ia' or 'pa', got '" + std::string(text) + "'");
}

std::size_t TowerElementHash::operator()(const TowerElement& e) const noexcept {
  PermHash h;
  std::size_t seed = 0;
  for (const auto& level : e.bases)
    for (const auto& p : level) seed = seed * 1000003u ^ h(p);
  return seed;
}

struct Tower::Lazy {
  std::once_flag once;
  std::vector<TowerElement> generators;
  std::vector<GeneratorInfo> info;
};

Tower::Tower(TowerKind kind, std::vector<PermGroup> levels)
    : kind_(kind), levels_(std::move(levels)), lazy_(std::make_shared<Lazy>()) {
  if (levels_.empty()) throw PreconditionError("tower: empty sequence");
  if (levels_.size() > 1)
    for (std::size_t k = 0; k < levels_.size(); ++k)
      if (levels_[k].is_trivial())
        throw PreconditionError("tower: term " + std::to_string(k) + " (" + levels_[k].spec() + ") is trivial");
  degrees_.push_back(Count::of(levels_[0].degree()));
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    const Count omega = Count::of(levels_[k].degree());
    if (kind_ == TowerKind::kImprimitive) {
      degrees_.push_back(omega * degrees_.back());
    } else {
      auto exponent = degrees_.back().exact();
      if (!exponent) throw CapExceeded("tower: level " + std::to_string(k) + " degree is not representable");
      degrees_.push_back(omega.pow(*exponent));
    }
  }
}

Tower Tower::single(PermGroup g) { return Tower(TowerKind::kProductAction, {std::move(g)}); }

std::optional<std::uint64_t> Tower::degree_index(std::size_t k) const {
  auto v = degrees_.at(k).as_u64();
  if (!v || *v > std::numeric_limits<Point>::max()) return std::nullopt;
  return v;
}

std::uint64_t Tower::degree_u64() const {
  auto v = degree_index(depth() - 1);
  if (!v) throw CapExceeded("tower degree " + degree().to_string(40) + " is not indexable");
  return *v;
}

Count Tower::order() const {
  Count n = levels_[0].order_count();
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    auto exponent = degrees_[k - 1].exact();
    if (!exponent) throw CapExceeded("tower: order exponent is not representable");
    n *= levels_[k].order_count().pow(*exponent);
  }
  return n;
}

bool Tower::is_transitive() const {
  if (kind_ == TowerKind::kProductAction) return levels_.back().is_transitive();
  for (const auto& g : levels_)
    if (!g.is_transitive()) return false;
  return true;
}

std::string Tower::spec() const {
  // Imprimitive towers are written like the wreath product, deepest level first.
  std::string s = to_string(kind_) + ":";
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const std::size_t k = kind_ == TowerKind::kImprimitive ? levels_.size() - 1 - i : i;
    s += (i ? "," : "") + levels_[k].spec();
  }
  return s;
}

Tower Tower::prefix(std::size_t k) const {
  if (k == 0 || k > depth()) throw PreconditionError("tower prefix: depth out of range");
  return Tower(kind_, std::vector<PermGroup>(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Tower Tower::extended(PermGroup g) const {
  auto levels = levels_;
  levels.push_back(std::move(g));
  return Tower(kind_, std::move(levels));
}

bool Tower::operator==(const Tower& other) const {
  if (depth() != other.depth()) return false;
  if (depth() > 1 && kind_ != other.kind_) return false;
  for (std::size_t k = 0; k < depth(); ++k)
    if (!levels_[k].same_generators(other.levels_[k])) return false;
  return true;
}

void Tower::require_elements() const {
  if (depth() < 2) return;
  auto d = degree_index(depth() - 2);
  if (!d || *d > kElementDomainCap)
    throw CapExceeded("tower: elements need the level above the bottom to have at most " +
                      std::to_string(kElementDomainCap) + " points");
}

std::size_t Tower::top_points(std::size_t k) const {
  return k == 0 ? 1 : static_cast<std::size_t>(*degree_index(k - 1));
}

TowerElement Tower::identity() const {
  require_elements();
  TowerElement e;
  for (std::size_t k = 0; k < depth(); ++k)
    e.bases.emplace_back(top_points(k), Perm::identity(levels_[k].degree()));
  return e;
}

void Tower::check_element(const TowerElement& a) const {
  require_elements();
  if (a.bases.size() != depth()) throw PreconditionError("tower element: wrong number of levels");
  for (std::size_t k = 0; k < depth(); ++k) {
    if (a.bases[k].size() != top_points(k)) throw PreconditionError("tower element: base of the wrong size");
    for (const auto& p : a.bases[k])
      if (p.degree() != levels_[k].degree()) throw PreconditionError("tower element: base entry on the wrong domain");
  }
}

bool Tower::is_element(const TowerElement& a) const {
  try {
    check_element(a);
  } catch (const PreconditionError&) {
    return false;
  }
  for (std::size_t k = 0; k < depth(); ++k)
    for (const auto& p : a.bases[k])
      if (!levels_[k].contains(p)) return false;
  return true;
}

Perm Tower::induced(const TowerElement& a, std::size_t k, kernels::Exec exec) const {
  if (k >= depth()) throw PreconditionError("induced: level out of range");
  std::vector<Point> current(a.bases[0][0].images().begin(), a.bases[0][0].images().end());
  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t omega = levels_[j].degree();
    current = kind_ == TowerKind::kImprimitive ? kernels::induced_ia(current, a.bases[j], omega, exec)
                                               : kernels::induced_pa(current, a.bases[j], omega, exec);
  }
  return Perm(std::move(current));
}

TowerElement Tower::compose(const TowerElement& a, const TowerElement& b) const {
  check_element(a);
  check_element(b);
  TowerElement c;
  c.bases.push_back({a.bases[0][0] * b.bases[0][0]});
  std::vector<Point> pi(a.bases[0][0].images().begin(), a.bases[0][0].images().end());
  for (std::size_t k = 1; k < depth(); ++k) {
    std::vector<Perm> level(pi.size());
    for (std::size_t t = 0; t < pi.size(); ++t) level[t] = a.bases[k][t] * b.bases[k][pi[t]];
    c.bases.push_back(std::move(level));
    if (k + 1 < depth())
      pi = kind_ == TowerKind::kImprimitive ? kernels::induced_ia(pi, a.bases[k], levels_[k].degree())
                                            : kernels::induced_pa(pi, a.bases[k], levels_[k].degree());
  }
  return c;
}

TowerElement Tower::inverse(const TowerElement& a) const {
  check_element(a);
  TowerElement c;
  c.bases.push_back({a.bases[0][0].inverse()});
  std::vector<Point> pi(a.bases[0][0].images().begin(), a.bases[0][0].images().end());
  for (std::size_t k = 1; k < depth(); ++k) {
    std::vector<Perm> level(pi.size());
    for (std::size_t t = 0; t < pi.size(); ++t) level[pi[t]] = a.bases[k][t].inverse();
    c.bases.push_back(std::move(level));
    if (k + 1 < depth())
      pi = kind_ == TowerKind::kImprimitive ? kernels::induced_ia(pi, a.bases[k], levels_[k].degree())
                                            : kernels::induced_pa(pi, a.bases[k], levels_[k].degree());
  }
  return c;
}

bool Tower::is_identity(const TowerElement& a) const {
  for (const auto& level : a.bases)
    for (const auto& p : level)
      if (!p.is_identity()) return false;
  return true;
}

TowerElement Tower::project_to_top(const TowerElement& a) const {
  if (depth() < 2) throw PreconditionError("project_to_top: a depth-1 tower has no top group");
  check_element(a);
  TowerElement t = a;
  t.bases.pop_back();
  return t;
}

TowerElement Tower::lift_top(const TowerElement& top) const {
  if (depth() < 2) throw PreconditionError("lift_top: a depth-1 tower has no top group");
  prefix(depth() - 1).check_element(top);
  TowerElement e = top;
  e.bases.emplace_back(top_points(depth() - 1), Perm::identity(bottom().degree()));
  return e;
}

TowerElement Tower::base_element(std::vector<Perm> bottom_base) const {
  TowerElement e = identity();
  if (bottom_base.size() != e.bases.back().size()) throw PreconditionError("base_element: wrong number of entries");
  e.bases.back() = std::move(bottom_base);
  check_element(e);
  return e;
}

const std::vector<TowerElement>& Tower::generators() const {
  std::call_once(lazy_->once, [this] {
    require_elements();
    const TowerElement id = identity();
    for (std::size_t j = 0; j < levels_[0].generators().size(); ++j) {
      TowerElement e = id;
      e.bases[0][0] = levels_[0].generators()[j];
      lazy_->generators.push_back(std::move(e));
      lazy_->info.push_back({0, 0, j});
    }
    for (std::size_t k = 1; k < depth(); ++k) {
      // One point per orbit of the first k levels on their domain.
      const std::size_t n = top_points(k);
      std::vector<Perm> moves;
      for (const auto& g : lazy_->generators) moves.push_back(induced(g, k - 1));
      std::vector<bool> seen(n, false);
      std::vector<Point> reps;
      for (Point x = 0; x < n; ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        std::vector<Point> stack{x};
        seen[x] = true;
        while (!stack.empty()) {
          Point y = stack.back();
          stack.pop_back();
          for (const auto& m : moves)
            if (!seen[m[y]]) {
              seen[m[y]] = true;
              stack.push_back(m[y]);
            }
        }
      }
      for (Point rep : reps)
        for (std::size_t j = 0; j < levels_[k].generators().size(); ++j) {
          TowerElement e = id;
          e.bases[k][rep] = levels_[k].generators()[j];
          lazy_->generators.push_back(std::move(e));
          lazy_->info.push_back({k, rep, j});
        }
    }
  });
  return lazy_->generators;
}

const std::vector<GeneratorInfo>& Tower::generator_info() const {
  generators();
  return lazy_->info;
}

Perm Tower::flatten_element(const TowerElement& a, std::uint64_t cap, kernels::Exec exec) const {
  auto d = degree_index(depth() - 1);
  if (!d || *d > cap)
    throw CapExceeded("flatten: degree " + degree().to_string(40) + " exceeds the materialization cap " +
                      std::to_string(cap));
  check_element(a);
  return induced(a, depth() - 1, exec);
}

PermGroup Tower::flatten(std::uint64_t cap, kernels::Exec exec) const {
  auto d = degree_index(depth() - 1);
  if (!d || *d > cap)
    throw CapExceeded("flatten: degree " + degree().to_string(40) + " exceeds the materialization cap " +
                      std::to_string(cap));
  std::vector<Perm> gens;
  for (const auto& g : generators()) gens.push_back(flatten_element(g, cap, exec));
  return PermGroup(static_cast<std::size_t>(*d), std::move(gens), spec(), bottom().limits());
}

void Tower::check_point(const TowerPoint& x) const {
  if (kind_ == TowerKind::kImprimitive || depth() == 1) {
    if (x.coords.size() != depth()) throw PreconditionError("tower point: wrong number of coordinates");
    for (std::size_t i = 0; i < depth(); ++i)
      if (x.coords[i] >= levels_[depth() - 1 - i].degree()) throw PreconditionError("tower point: coordinate out of range");
    return;
  }
  require_elements();
  if (x.coords.size() != top_points(depth() - 1)) throw PreconditionError("tower point: wrong number of values");
  for (Point v : x.coords)
    if (v >= bottom().degree()) throw PreconditionError("tower point: value out of range");
}

TowerPoint Tower::act(const TowerPoint& x, const TowerElement& a) const {
  check_point(x);
  check_element(a);
  TowerPoint out;
  if (depth() == 1) {
    out.coords = {a.bases[0][0][x.coords[0]]};
    return out;
  }
  if (kind_ == TowerKind::kImprimitive) {
    // Walk from the top: `source` is the index of the original prefix point,
    // `image` the index of its image.
    out.coords.resize(depth());
    std::uint64_t source = x.coords[depth() - 1];
    std::uint64_t image = a.bases[0][0][x.coords[depth() - 1]];
    out.coords[depth() - 1] = static_cast<Point>(image);
    for (std::size_t k = 1; k < depth(); ++k) {
      const std::size_t omega = levels_[k].degree();
      const Point w = x.coords[depth() - 1 - k];
      const Point w2 = a.bases[k][source][w];
      out.coords[depth() - 1 - k] = w2;
      source = source * omega + w;
      image = image * omega + w2;
    }
    return out;
  }
  const Perm pi = induced(a, depth() - 2);
  out.coords.resize(x.coords.size());
  for (std::size_t s = 0; s < x.coords.size(); ++s) out.coords[pi[static_cast<Point>(s)]] = a.bases.back()[s][x.coords[s]];
  return out;
}

TowerPoint Tower::point_at(std::uint64_t index) const {
  auto d = degree_index(depth() - 1);
  if (!d || index >= *d) throw PreconditionError("tower point: index out of range");
  TowerPoint x;
  if (kind_ == TowerKind::kImprimitive || depth() == 1) {
    for (std::size_t k = depth(); k-- > 0;) {
      const std::size_t omega = levels_[k].degree();
      x.coords.push_back(static_cast<Point>(index % omega));
      index /= omega;
    }
    return x;
  }
  const std::size_t n = top_points(depth() - 1), omega = bottom().degree();
  x.coords.resize(n);
  for (std::size_t t = n; t-- > 0;) {
    x.coords[t] = static_cast<Point>(index % omega);
    index /= omega;
  }
  return x;
}

std::uint64_t Tower::point_index(const TowerPoint& x) const {
  check_point(x);
  std::uint64_t index = 0;
  if (kind_ == TowerKind::kImprimitive || depth() == 1) {
    for (std::size_t k = 0; k < depth(); ++k) index = index * levels_[k].degree() + x.coords[depth() - 1 - k];
    return index;
  }
  degree_u64();
  for (Point v : x.coords) index = index * bottom().degree() + v;
  return index;
}

// ---------------------------------------------------------------------------

Tower wreath_imprimitive(const PermGroup& s, const Tower& h) {
  if (h.depth() > 1 && h.kind() != TowerKind::kImprimitive)
    throw PreconditionError("wreath_imprimitive: the top group must be an imprimitive tower");
  if (s.is_trivial() || h.level(0).is_trivial()) throw PreconditionError("wreath_imprimitive: trivial input group");
  auto levels = h.levels();
  levels.push_back(s);
  return Tower(TowerKind::kImprimitive, std::move(levels));
}

Tower wreath_imprimitive(const PermGroup& s, const PermGroup& h) { return wreath_imprimitive(s, Tower::single(h)); }

Tower wreath_product_action(const PermGroup& s, const Tower& g) {
  if (g.depth() > 1 && g.kind() != TowerKind::kProductAction)
    throw PreconditionError("wreath_product_action: the top group must be a product-action tower");
  if (s.is_trivial() || g.level(0).is_trivial()) throw PreconditionError("wreath_product_action: trivial input group");
  auto levels = g.levels();
  levels.push_back(s);
  return Tower(TowerKind::kProductAction, std::move(levels));
}

Tower wreath_product_action(const PermGroup& s, const PermGroup& g) {
  return wreath_product_action(s, Tower::single(g));
}

Tower tower(TowerKind kind, const std::vector<PermGroup>& seq, std::size_t n) {
  if (seq.empty()) throw PreconditionError("tower: empty sequence");
  if (n == 0 || n > seq.size())
    throw PreconditionError("tower: level " + std::to_string(n) + " needs " + std::to_string(n) + " terms, " +
                            std::to_string(seq.size()) + " given");
  for (std::size_t k = 0; k < n; ++k)
    if (seq[k].is_trivial()) throw PreconditionError("tower: term " + std::to_string(k) + " is trivial");
  return Tower(kind, std::vector<PermGroup>(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Tower parse_tower(std::string_view spec, std::optional<std::size_t> level) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("tower spec '" + std::string(spec) + "': expected <ia|pa>:<groups>");
  const TowerKind kind = parse_tower_kind(spec.substr(0, colon));
  std::vector<PermGroup> seq;
  for (const auto& item : split_top_level(spec.substr(colon + 1), ',')) {
    if (item.empty()) throw ParseError("tower spec '" + std::string(spec) + "': empty group");
    seq.push_back(parse_group(item));
  }
  if (kind == TowerKind::kImprimitive) std::reverse(seq.begin(), seq.end());
  const std::size_t n = level.value_or(seq.size());
  std::vector<PermGroup> terms;
  for (std::size_t k = 0; k < n; ++k) terms.push_back(seq[k % seq.size()]);
  return tower(kind, terms, n);
}


// ---------------------------------------------------------------------------
// PointMap

PointMap::PointMap(const Tower& t, const TowerElement& a) : kind_(t.kind()) {
  t.degree_u64();
  t.check_element(a);
  for (const auto& g : t.levels()) omegas_.push_back(g.degree());
  if (t.depth() == 1 || kind_ == TowerKind::kImprimitive) {
    kind_ = TowerKind::kImprimitive;
    bases_ = a.bases;
    return;
  }
  const Perm pi = t.induced(a, t.depth() - 2);
  const std::size_t d = pi.degree(), omega = omegas_.back();
  std::vector<std::uint64_t> place(d);
  std::uint64_t w = 1;
  for (std::size_t i = d; i-- > 0;) {
    place[i] = w;
    w *= omega;
  }
  weights_.resize(d);
  for (std::size_t s = 0; s < d; ++s) weights_[s] = place[pi[static_cast<Point>(s)]];
  bases_ = {a.bases.back()};
}

std::uint64_t PointMap::operator()(std::uint64_t index) const {
  if (kind_ == TowerKind::kImprimitive) {
    const std::size_t depth = omegas_.size();
    std::vector<Point> digits(depth);
    for (std::size_t k = depth; k-- > 0;) {
      digits[k] = static_cast<Point>(index % omegas_[k]);
      index /= omegas_[k];
    }
    std::uint64_t source = digits[0];
    std::uint64_t image = bases_[0][0][digits[0]];
    for (std::size_t k = 1; k < depth; ++k) {
      const Point w2 = bases_[k][source][digits[k]];
      source = source * omegas_[k] + digits[k];
      image = image * omegas_[k] + w2;
    }
    return image;
  }
  const std::size_t omega = omegas_.back();
  std::uint64_t image = 0;
  for (std::size_t s = weights_.size(); s-- > 0;) {
    image += weights_[s] * bases_[0][s][static_cast<Point>(index % omega)];
    index /= omega;
  }
  return image;
}

}  // namespace wreathkit
