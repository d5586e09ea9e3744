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

#include "wreathkit/embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "wreathkit/error.hpp"

namespace wreathkit {
namespace {

constexpr std::uint64_t kGammaCap = 50'000'000;
constexpr std::uint64_t kCompatibilityEnumeration = 20'000;
constexpr std::uint64_t kCompatibilitySamples = 200;

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (r > std::numeric_limits<Point>::max() / base) throw CapExceeded("embedding: target domain too large to index");
    r *= base;
  }
  return r;
}

// Place values |Omega|^(D-1-t) of the product-action index.
std::vector<std::uint64_t> place_values(std::uint64_t omega, std::uint64_t d) {
  std::vector<std::uint64_t> w(d);
  std::uint64_t v = 1;
  for (std::uint64_t t = d; t-- > 0;) {
    w[t] = v;
    v *= omega;
  }
  return w;
}

std::vector<Point> digits_of(std::uint64_t index, std::uint64_t base, std::uint64_t count) {
  std::vector<Point> f(count);
  for (std::uint64_t t = count; t-- > 0;) {
    f[t] = static_cast<Point>(index % base);
    index /= base;
  }
  return f;
}

std::optional<std::vector<TowerElement>> enumerate_tower(const Tower& t, std::uint64_t cap) {
  std::vector<TowerElement> out{t.identity()};
  std::unordered_set<TowerElement, TowerElementHash> seen{out.front()};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : t.generators()) {
      TowerElement next = t.compose(out[k], g);
      if (seen.insert(next).second) {
        if (out.size() >= cap) return std::nullopt;
        out.push_back(std::move(next));
      }
    }
  return out;
}

// project^drop(upper(v)) == lower(project(v)) over the source of `upper`.
CompatibilityCheck check_compatibility(std::size_t level, const PEmbedding& upper, const PEmbedding& lower,
                                       std::size_t drop) {
  CompatibilityCheck c;
  c.level = level;
  c.holds = true;
  auto test = [&](const TowerElement& v) {
    TowerElement y = upper.apply(v);
    Tower t = upper.target;
    for (std::size_t i = 0; i < drop; ++i) {
      y = t.project_to_top(y);
      t = t.prefix(t.depth() - 1);
    }
    ++c.checked;
    if (!(y == lower.apply(upper.source.project_to_top(v)))) c.holds = false;
  };
  const auto& source = upper.source;
  if (auto all = enumerate_tower(source, kCompatibilityEnumeration)) {
    c.exhaustive = true;
    for (const auto& v : *all) test(v);
    return c;
  }
  for (const auto& g : source.generators()) test(g);
  std::mt19937_64 rng(level);
  const auto& gens = source.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (std::uint64_t s = 0; s < kCompatibilitySamples && c.holds; ++s) {
    TowerElement v = source.identity();
    for (int l = 0; l < 12; ++l) v = source.compose(v, gens[pick(rng)]);
    test(v);
  }
  return c;
}

void require_degree_one(const PEmbedding& e, const char* what) {
  if (e.degree != 1) throw PreconditionError(std::string(what) + ": a degree-1 embedding is required");
}

}  // namespace

BigInt pembed_wreath_degree(std::uint64_t omega, std::uint64_t sigma, std::uint64_t delta, std::uint64_t r) {
  if (r * delta > sigma) throw PreconditionError("pembed_wreath: r|Delta| exceeds |Sigma|");
  BigInt w = omega;
  return boost::multiprecision::pow(w, static_cast<unsigned>(sigma - r * delta)) *
         boost::multiprecision::pow(boost::multiprecision::pow(w, static_cast<unsigned>(r)) - w,
                                    static_cast<unsigned>(delta - 1));
}

PEmbedding pembed_wreath(const PEmbedding& e, const PermGroup& s) {
  const Tower& h = e.source;
  const Tower& g = e.target;
  if (e.degree < 2) throw PreconditionError("pembed_wreath: degree r = " + std::to_string(e.degree) + " < 2");
  if (s.is_trivial()) throw PreconditionError("pembed_wreath: S is trivial");
  const std::uint64_t n = s.degree(), r = e.degree;
  const std::uint64_t dh = h.degree_u64(), dg = g.degree_u64();
  if (n < 2 || dh < 2) throw PreconditionError("pembed_wreath: min(|Omega|, |Delta|, r) must be at least 2");
  if (r * dh > dg) throw PreconditionError("pembed_wreath: r|Delta| > |Sigma|");
  if (e.gamma.size() != dh) throw PreconditionError("pembed_wreath: gamma does not cover Delta");

  const double log2_n = std::log2(static_cast<double>(n));
  const double log2_rhat = static_cast<double>(dg - r * dh) * log2_n +
                           static_cast<double>(dh - 1) *
                               (static_cast<double>(r) * log2_n + std::log1p(-std::pow(n, 1.0 - r)) / std::log(2.0));
  if (log2_rhat > 64) throw CapExceeded("pembed_wreath: Gamma-hat has more than 2^64 points per source point");
  const BigInt rhat = pembed_wreath_degree(n, dg, dh, r);
  if (rhat < 2) throw Error("pembed_wreath: degree formula gives " + rhat.str() + " < 2");
  if (rhat * dh > kGammaCap) throw CapExceeded("pembed_wreath: Gamma-hat has " + rhat.str() + " points per source point");

  PEmbedding out;
  out.source = wreath_imprimitive(s, h);
  out.target = wreath_product_action(s, g);
  out.degree = static_cast<std::size_t>(rhat);
  checked_pow(n, dg);

  std::vector<std::int64_t> owner(dg, -1);
  for (std::size_t d = 0; d < dh; ++d)
    for (Point p : e.gamma[d]) {
      if (p >= dg || owner[p] != -1) throw PreconditionError("pembed_wreath: gamma is not a disjoint family in Sigma");
      owner[p] = static_cast<std::int64_t>(d);
    }

  if (e.iota.size() != h.generators().size()) throw PreconditionError("pembed_wreath: iota does not match the generators of H");
  for (std::size_t i = 0; i < e.iota.size(); ++i) {
    const PointMap hx(h, h.generators()[i]), gx(g, e.iota[i]);
    for (std::uint64_t d = 0; d < dh; ++d) {
      std::vector<Point> image;
      for (Point p : e.gamma[d]) image.push_back(static_cast<Point>(gx(p)));
      std::sort(image.begin(), image.end());
      auto expected = e.gamma[hx(d)];
      std::sort(expected.begin(), expected.end());
      if (image != expected)
        throw PreconditionError("pembed_wreath: gamma is not equivariant under generator " + std::to_string(i) +
                                " at point " + std::to_string(d));
    }
  }

  // Index contributions of each block, then products of them.
  const auto weight = place_values(n, dg);
  std::vector<std::vector<std::uint64_t>> constant(dh, std::vector<std::uint64_t>(n, 0));
  std::vector<std::vector<std::uint64_t>> non_constant(dh);
  for (std::size_t d = 0; d < dh; ++d) {
    const auto& block = e.gamma[d];
    for (std::uint64_t w = 0; w < n; ++w)
      for (Point p : block) constant[d][w] += w * weight[p];
    const std::uint64_t tuples = checked_pow(n, r);
    for (std::uint64_t code = 0; code < tuples; ++code) {
      auto values = digits_of(code, n, r);
      if (std::all_of(values.begin(), values.end(), [&](Point v) { return v == values[0]; })) continue;
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < r; ++i) sum += values[i] * weight[block[i]];
      non_constant[d].push_back(sum);
    }
  }
  std::vector<std::uint64_t> rest{0};
  for (std::uint64_t p = 0; p < dg; ++p) {
    if (owner[p] != -1) continue;
    std::vector<std::uint64_t> next;
    for (std::uint64_t base : rest)
      for (std::uint64_t w = 0; w < n; ++w) next.push_back(base + w * weight[p]);
    rest = std::move(next);
  }
  auto product = [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> c;
    c.reserve(a.size() * b.size());
    for (auto x : a)
      for (auto y : b) c.push_back(x + y);
    return c;
  };
  out.gamma.resize(dh * n);
  for (std::uint64_t eps = 0; eps < dh; ++eps)
    for (std::uint64_t w = 0; w < n; ++w) {
      std::vector<std::uint64_t> sums{constant[eps][w]};
      for (std::uint64_t d = 0; d < dh; ++d)
        if (d != eps) sums = product(sums, non_constant[d]);
      sums = product(sums, rest);
      std::sort(sums.begin(), sums.end());
      auto& row = out.gamma[eps * n + w];
      row.assign(sums.begin(), sums.end());
      if (row.size() != out.degree) throw Error("pembed_wreath: Gamma-hat size differs from the degree formula");
    }

  const Tower source = out.source, target = out.target;
  const PEmbedding inner = e;
  out.iota_map = [source, target, inner, owner, dg](const TowerElement& v) {
    TowerElement y = inner.apply(source.project_to_top(v));
    const auto& a = v.bases.back();
    std::vector<Perm> t(dg, Perm::identity(source.bottom().degree()));
    for (std::uint64_t p = 0; p < dg; ++p)
      if (owner[p] >= 0) t[p] = a[static_cast<std::size_t>(owner[p])];
    y.bases.push_back(std::move(t));
    return y;
  };
  for (const auto& v : out.source.generators()) out.iota.push_back(out.iota_map(v));
  out.image_order = out.source.order();
  return out;
}

PEmbedding diagonal_embedding(const PermGroup& s, const std::optional<Tower>& g) {
  if (!g) return identity_embedding(Tower::single(s));
  PEmbedding out;
  out.source = Tower::single(s);
  out.target = wreath_product_action(s, *g);
  const std::uint64_t d = g->degree_u64(), n = s.degree();
  checked_pow(n, d);
  std::uint64_t ones = 0;
  for (std::uint64_t w : place_values(n, d)) ones += w;
  for (std::uint64_t w = 0; w < n; ++w) out.gamma.push_back({static_cast<Point>(w * ones)});
  const Tower target = out.target;
  out.iota_map = [target, d](const TowerElement& x) {
    TowerElement y = target.identity();
    y.bases.back().assign(d, x.bases[0][0]);
    return y;
  };
  for (const auto& x : out.source.generators()) out.iota.push_back(out.iota_map(x));
  out.image_order = s.order_count();
  return out;
}

TowerEmbedding ia_into_pa(const std::vector<PermGroup>& seq, std::size_t n) {
  if (n == 0 || seq.size() < n + 1)
    throw PreconditionError("ia_into_pa: level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " terms");
  for (std::size_t k = 0; k <= n; ++k)
    if (seq[k].is_trivial()) throw PreconditionError("ia_into_pa: term " + std::to_string(k) + " is trivial");

  const PermGroup& s0 = seq[0];
  const PermGroup& s1 = seq[1];
  PEmbedding base;
  base.source = Tower::single(s1);
  base.target = wreath_product_action(s1, s0);
  const std::uint64_t d0 = s0.degree(), n1 = s1.degree();
  const std::uint64_t block = checked_pow(n1, d0 - 1);
  base.degree = static_cast<std::size_t>(block);
  for (std::uint64_t w = 0; w < n1; ++w) {
    std::vector<Point> row(block);
    for (std::uint64_t j = 0; j < block; ++j) row[j] = static_cast<Point>(w * block + j);
    base.gamma.push_back(std::move(row));
  }
  const Tower target = base.target;
  base.iota_map = [target, d0](const TowerElement& x) {
    TowerElement y = target.identity();
    y.bases.back().assign(d0, x.bases[0][0]);
    return y;
  };
  for (const auto& x : base.source.generators()) base.iota.push_back(base.iota_map(x));
  base.image_order = s1.order_count();

  TowerEmbedding out;
  out.levels.push_back(base);
  for (std::size_t k = 2; k <= n; ++k) {
    if (out.levels.back().degree < 2)
      throw PreconditionError("ia_into_pa: degree-1 embedding at level " + std::to_string(k - 1));
    out.levels.push_back(pembed_wreath(out.levels.back(), seq[k]));
    out.compatibility.push_back(check_compatibility(k, out.levels[k - 1], out.levels[k - 2], 1));
  }
  out.embedding = out.levels.back();
  return out;
}

PEmbedding perm_iso_wreath(const PEmbedding& w1, const PEmbedding& w2) {
  require_degree_one(w1, "perm_iso_wreath");
  require_degree_one(w2, "perm_iso_wreath");
  if (w1.source.depth() != 1 || w1.target.depth() != 1)
    throw PreconditionError("perm_iso_wreath: the first witness must relate two single groups");
  const PermGroup& h1 = w1.source.level(0);
  const PermGroup& g1 = w1.target.level(0);
  PEmbedding out;
  out.source = wreath_product_action(h1, w2.source);
  out.target = wreath_product_action(g1, w2.target);
  out.degree = 1;

  const std::uint64_t dh2 = w2.source.degree_u64(), dg2 = w2.target.degree_u64();
  const std::uint64_t n1 = h1.degree(), m1 = g1.degree();
  if (w1.gamma.size() != n1 || w2.gamma.size() != dh2) throw PreconditionError("perm_iso_wreath: malformed witness");
  const std::uint64_t source_points = checked_pow(n1, dh2);
  checked_pow(m1, dg2);
  if (source_points > kGammaCap) throw CapExceeded("perm_iso_wreath: source domain too large");

  std::vector<Point> gamma2(dh2);
  std::vector<std::int64_t> preimage(dg2, -1);
  for (std::uint64_t d = 0; d < dh2; ++d) {
    gamma2[d] = w2.gamma[d].at(0);
    preimage[gamma2[d]] = static_cast<std::int64_t>(d);
  }
  const auto weight = place_values(m1, dg2);
  out.gamma.reserve(source_points);
  for (std::uint64_t f = 0; f < source_points; ++f) {
    auto values = digits_of(f, n1, dh2);
    std::uint64_t image = 0;  // off the image of Delta_2 the value is the first point, 0
    for (std::uint64_t d = 0; d < dh2; ++d) image += w1.gamma[values[d]].at(0) * weight[gamma2[d]];
    out.gamma.push_back({static_cast<Point>(image)});
  }

  const Tower source = out.source;
  const std::uint64_t g1_degree = m1;
  out.iota_map = [source, w1, w2, preimage, g1_degree](const TowerElement& v) {
    TowerElement y = w2.apply(source.project_to_top(v));
    const auto& h = v.bases.back();
    std::vector<Perm> g(preimage.size(), Perm::identity(g1_degree));
    for (std::size_t w = 0; w < preimage.size(); ++w)
      if (preimage[w] >= 0) g[w] = w1.apply(TowerElement{{{h[static_cast<std::size_t>(preimage[w])]}}}).bases[0][0];
    y.bases.push_back(std::move(g));
    return y;
  };
  for (const auto& v : out.source.generators()) out.iota.push_back(out.iota_map(v));
  out.image_order = out.source.order();
  return out;
}

PEmbedding insert_middle(const PermGroup& h, const PermGroup& k, const Tower& g) {
  if (h.is_trivial() || k.is_trivial() || g.level(0).is_trivial())
    throw PreconditionError("insert_middle: trivial input group");
  PEmbedding out;
  out.source = wreath_product_action(h, g);
  const Tower middle = wreath_product_action(k, g);
  out.target = wreath_product_action(h, middle);
  out.degree = 1;

  const std::uint64_t nd = h.degree(), p = k.degree(), dg = g.degree_u64();
  const std::uint64_t dm = checked_pow(p, dg);
  const std::uint64_t source_points = checked_pow(nd, dg);
  checked_pow(nd, dm);

  // Gamma_0(w): psi = 0 at w, one constant c != psi elsewhere.
  const auto middle_weight = place_values(p, dg);
  std::vector<std::int64_t> owner(dm, -1);
  for (std::uint64_t w = 0; w < dg; ++w) {
    std::uint64_t off = 0;
    for (std::uint64_t t = 0; t < dg; ++t)
      if (t != w) off += middle_weight[t];
    for (std::uint64_t c = 1; c < p; ++c) owner[c * off] = static_cast<std::int64_t>(w);
  }
  const auto target_weight = place_values(nd, dm);
  std::vector<std::uint64_t> weight(dg, 0);
  for (std::uint64_t f = 0; f < dm; ++f)
    if (owner[f] >= 0) weight[static_cast<std::size_t>(owner[f])] += target_weight[f];
  for (std::uint64_t x = 0; x < source_points; ++x) {
    auto values = digits_of(x, nd, dg);
    std::uint64_t image = 0;  // off the Gamma_0 blocks the value is the first point, 0
    for (std::uint64_t w = 0; w < dg; ++w) image += values[w] * weight[w];
    out.gamma.push_back({static_cast<Point>(image)});
  }

  const Tower source = out.source;
  const std::uint64_t h_degree = nd;
  out.iota_map = [source, middle, owner, h_degree](const TowerElement& v) {
    TowerElement y = middle.lift_top(source.project_to_top(v));
    const auto& base = v.bases.back();
    std::vector<Perm> lifted(owner.size(), Perm::identity(h_degree));
    for (std::size_t f = 0; f < owner.size(); ++f)
      if (owner[f] >= 0) lifted[f] = base[static_cast<std::size_t>(owner[f])];
    y.bases.push_back(std::move(lifted));
    return y;
  };
  for (const auto& v : out.source.generators()) out.iota.push_back(out.iota_map(v));
  out.image_order = out.source.order();
  return out;
}

namespace {

void validate_indices(const std::vector<std::size_t>& m, std::size_t n, std::size_t len, const char* what) {
  if (n == 0) throw PreconditionError(std::string(what) + ": level must be positive");
  if (m.size() < n) throw PreconditionError(std::string(what) + ": m has fewer than n entries");
  for (std::size_t j = 0; j < n; ++j) {
    if (m[j] < 1 || m[j] > len)
      throw PreconditionError(std::string(what) + ": m(" + std::to_string(j + 1) + ") = " + std::to_string(m[j]) +
                              " is out of range 1.." + std::to_string(len));
    if (j > 0 && m[j] <= m[j - 1]) throw PreconditionError(std::string(what) + ": m is not strictly increasing");
  }
}

std::optional<Tower> prefix_tower(const std::vector<PermGroup>& seq, std::size_t i) {
  if (i == 0) return std::nullopt;
  return tower(TowerKind::kProductAction, seq, i);
}

// Shared induction: witnesses[j] embeds S_{j+1}-th source term into S_{m(j)}.
TowerEmbedding build_by_induction(const std::vector<PermGroup>& seq, const std::vector<std::size_t>& m,
                                  std::size_t n, const std::vector<PEmbedding>& witnesses) {
  TowerEmbedding out;
  const PermGroup& first = seq[m[0] - 1];
  PEmbedding level = compose(witnesses[0], diagonal_embedding(first, prefix_tower(seq, m[0] - 1)));
  out.levels.push_back(level);
  for (std::size_t j = 1; j < n; ++j) {
    const PermGroup& top = seq[m[j] - 1];
    PEmbedding current = perm_iso_wreath(witnesses[j], out.levels.back());
    for (std::size_t i = m[j - 1] + 1; i < m[j]; ++i)
      current = compose(current, insert_middle(top, seq[i - 1], *prefix_tower(seq, i - 1)));
    out.levels.push_back(current);
    out.compatibility.push_back(check_compatibility(j + 1, out.levels[j], out.levels[j - 1], m[j] - m[j - 1]));
  }
  out.embedding = out.levels.back();
  return out;
}

}  // namespace

TowerEmbedding subsequence_embed(const std::vector<PermGroup>& seq, const std::vector<std::size_t>& m,
                                 std::size_t n) {
  validate_indices(m, n, seq.size(), "subsequence_embed");
  for (std::size_t i = 0; i < m[n - 1]; ++i)
    if (seq[i].is_trivial()) throw PreconditionError("subsequence_embed: term " + std::to_string(i + 1) + " is trivial");
  std::vector<PEmbedding> witnesses;
  for (std::size_t j = 0; j < n; ++j) witnesses.push_back(identity_embedding(Tower::single(seq[m[j] - 1])));
  return build_by_induction(seq, m, n, witnesses);
}

SelfEmbedding self_embed(const std::vector<PermGroup>& seq, std::size_t n, const SelfEmbedOptions& options) {
  if (n == 0) throw PreconditionError("self_embed: level must be positive");
  if (seq.size() < n) throw PreconditionError("self_embed: sequence shorter than the level");
  for (const auto& s : seq)
    if (s.is_trivial()) throw PreconditionError("self_embed: trivial term");

  std::vector<std::size_t> m;
  std::vector<PEmbedding> witnesses;
  auto witness = [&](std::size_t j, std::size_t i) -> std::optional<PEmbedding> {
    const PermGroup& a = seq[j - 1];
    const PermGroup& b = seq[i - 1];
    if (a.same_generators(b)) return identity_embedding(Tower::single(a));
    auto w = perm_iso_to_subgroup(a, b, options.search);
    if (!w) return std::nullopt;
    return from_witness(a, b, *w);
  };

  if (options.m) {
    validate_indices(*options.m, n, seq.size(), "self_embed");
    m.assign(options.m->begin(), options.m->begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t j = 1; j <= n; ++j) {
      auto w = witness(j, m[j - 1]);
      if (!w)
        throw PreconditionError("self_embed: no witness that term " + std::to_string(j) +
                                " is permutationally isomorphic to a subgroup of term " + std::to_string(m[j - 1]));
      witnesses.push_back(std::move(*w));
    }
  } else {
    for (std::size_t j = 1; j <= n; ++j) {
      if (j <= options.n0) {
        m.push_back(j);
        witnesses.push_back(*witness(j, j));
        continue;
      }
      const std::size_t from = std::max(j, m.empty() ? std::size_t{0} : m.back()) + 1;
      bool found = false;
      for (std::size_t i = from; i <= seq.size() && !found; ++i)
        if (auto w = witness(j, i)) {
          m.push_back(i);
          witnesses.push_back(std::move(*w));
          found = true;
        }
      if (!found)
        throw PreconditionError("self_embed: no later term among the first " + std::to_string(seq.size()) +
                                " admits term " + std::to_string(j));
    }
  }
  bool identity = true;
  for (std::size_t j = 1; j <= n; ++j) identity = identity && m[j - 1] == j;
  if (identity) throw PreconditionError("self_embed: m is the identity on 1.." + std::to_string(n));

  SelfEmbedding out;
  out.tower = build_by_induction(seq, m, n, witnesses);
  out.m = m;
  out.source_order = out.tower.embedding.source.order();
  out.target_order = out.tower.embedding.target.order();
  const Count image = out.tower.embedding.image_order.value_or(out.source_order);
  if (image.divides(out.target_order)) {
    out.index = image.cofactor_in(out.target_order);
    out.proper = !out.index.is_one();
  }
  return out;
}

bool top_factorization_holds(const PEmbedding& e, const PEmbedding& lower, std::size_t source_drop,
                             std::size_t target_drop) {
  if (source_drop >= e.source.depth() || target_drop >= e.target.depth()) return false;
  const std::size_t sd = e.source.depth() - source_drop, td = e.target.depth() - target_drop;
  if (!(lower.source == e.source.prefix(sd)) || !(lower.target == e.target.prefix(td))) return false;
  for (std::size_t i = 0; i < e.iota.size(); ++i) {
    TowerElement top = e.source.generators()[i];
    top.bases.resize(sd);
    TowerElement image = e.iota[i];
    image.bases.resize(td);
    if (!(lower.apply(top) == image)) return false;
  }
  return true;
}

}  // namespace wreathkit
