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

#include "wreathkit/kaloujnine.hpp"

#include <json.hpp>

#include "wreathkit/catalog.hpp"
#include "wreathkit/error.hpp"
#include "wreathkit/structure.hpp"

namespace wreathkit {

std::optional<std::uint32_t> CompositionSeries::coset_label(std::size_t level, const Perm& g) const {
  const auto& map = cosets.at(level);
  auto it = map.find(g);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

CompositionSeries validate_series(const PermGroup& g, const std::vector<std::vector<Perm>>& chain,
                                  const SeriesOptions& options) {
  CompositionSeries series;
  series.group = g;
  series.chain.push_back(g);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (const auto& x : chain[i]) {
      if (x.degree() != g.degree()) throw PreconditionError("series term " + std::to_string(i + 2) + ": wrong degree");
      if (!g.contains(x)) throw PreconditionError("series term " + std::to_string(i + 2) + ": generator outside G");
    }
    PermGroup term(g.domain(), chain[i], {}, g.limits());
    if (i == 0 && term.order() == g.order()) continue;
    series.chain.push_back(std::move(term));
  }
  if (!series.chain.back().is_trivial()) throw PreconditionError("series: last term is not trivial");

  const auto& all = g.elements();
  for (std::size_t k = 0; k + 1 < series.chain.size(); ++k) {
    const PermGroup& upper = series.chain[k];
    const PermGroup& lower = series.chain[k + 1];
    const std::string step = "G_" + std::to_string(k + 2) + " in G_" + std::to_string(k + 1);
    if (lower.order() >= upper.order()) throw PreconditionError("series: " + step + " is not a proper subgroup");
    if (!is_normal_in(lower, upper)) throw PreconditionError("series: " + step + " is not normal");

    std::unordered_map<Perm, std::uint32_t, PermHash> labels;
    std::vector<Perm> firsts;
    for (const auto& x : all) {
      if (labels.contains(x) || !upper.contains(x)) continue;
      const auto label = static_cast<std::uint32_t>(firsts.size());
      firsts.push_back(x);
      for (const auto& y : lower.elements()) labels.emplace(y * x, label);
    }
    const std::size_t q = firsts.size();
    std::vector<Perm> gens;
    for (const auto& c : upper.generators()) {
      std::vector<Point> images(q);
      for (std::size_t s = 0; s < q; ++s) images[s] = labels.at(firsts[s] * c);
      gens.emplace_back(std::move(images));
    }
    PermGroup factor(q, std::move(gens), {}, g.limits());
    if (q <= options.simplicity_cap) {
      if (!is_simple(factor)) throw PreconditionError("series: factor " + std::to_string(k + 1) + " is not simple");
    } else if (!options.attest_simple) {
      throw PreconditionError("series: factor " + std::to_string(k + 1) + " of order " + std::to_string(q) +
                              " is too large to check for simplicity");
    }
    series.factors.push_back(std::move(factor));
    series.cosets.push_back(std::move(labels));
  }
  if (series.factors.empty()) throw PreconditionError("series: G is trivial");
  return series;
}

CompositionSeries series_from_json(std::string_view text, const SeriesOptions& options) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("series: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("group") || !j.contains("chain"))
    throw ParseError("series: expected an object with `group` and `chain`");
  PermGroup g = parse_group(j["group"].get<std::string>());
  std::vector<std::vector<Perm>> chain;
  for (const auto& term : j["chain"]) {
    chain.emplace_back();
    for (const auto& gen : term) chain.back().push_back(Perm::parse(gen.get<std::string>(), g.degree()));
  }
  return validate_series(g, chain, options);
}

TransversalTable choose_transversals(const CompositionSeries& series, TransversalPolicy policy) {
  TransversalTable table;
  table.policy = policy;
  const auto& all = series.group.elements();
  for (std::size_t k = 0; k < series.length(); ++k) {
    std::vector<std::optional<Perm>> reps(series.factors[k].degree());
    auto visit = [&](const Perm& x) {
      auto label = series.coset_label(k, x);
      if (label && !reps[*label]) reps[*label] = x;
    };
    if (policy == TransversalPolicy::kMinimal) {
      for (const auto& x : all) visit(x);
    } else {
      for (auto it = all.rbegin(); it != all.rend(); ++it) visit(*it);
    }
    reps[0] = Perm::identity(series.group.degree());
    std::vector<Perm> level;
    for (auto& r : reps) level.push_back(std::move(*r));
    table.reps.push_back(std::move(level));
  }
  return table;
}

std::optional<TreeWord> boundary_act(const CompositionSeries& series, const TransversalTable& table,
                                     const TreeWord& word, const Perm& g, Recursion recursion) {
  const std::size_t depth = word.size();
  if (depth > series.length()) throw PreconditionError("boundary_act: word longer than the series");
  for (std::size_t n = 0; n < depth; ++n)
    if (word[depth - 1 - n] >= series.factors[n].degree())
      throw PreconditionError("boundary_act: letter out of range at level " + std::to_string(n + 1));
  if (g.degree() != series.group.degree() || !series.group.contains(g))
    throw PreconditionError("boundary_act: element outside G");

  TreeWord out(depth);
  Perm gn = g;
  for (std::size_t n = 0; n < depth; ++n) {
    const Perm x = table.reps[n][word[depth - 1 - n]] * gn;
    auto u = series.coset_label(n, x);
    if (!u) return std::nullopt;
    out[depth - 1 - n] = *u;
    const Perm uinv = table.reps[n][*u].inverse();
    gn = recursion == Recursion::kCoset ? x * uinv : gn * uinv;
  }
  return out;
}

std::uint64_t word_index(const CompositionSeries& series, const TreeWord& word) {
  std::uint64_t index = 0;
  const std::size_t depth = word.size();
  for (std::size_t n = 0; n < depth; ++n) index = index * series.factors[n].degree() + word[depth - 1 - n];
  return index;
}

TreeWord word_at(const CompositionSeries& series, std::size_t depth, std::uint64_t index) {
  TreeWord word(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const std::uint64_t q = series.factors[depth - 1 - i].degree();
    word[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return word;
}

std::optional<Perm> layer_action(const CompositionSeries& series, const TransversalTable& table, const Perm& g,
                                 std::size_t depth, Recursion recursion) {
  std::uint64_t size = 1;
  for (std::size_t n = 0; n < depth; ++n) size *= series.factors[n].degree();
  std::vector<Point> images(size);
  for (std::uint64_t i = 0; i < size; ++i) {
    auto w = boundary_act(series, table, word_at(series, depth, i), g, recursion);
    if (!w) return std::nullopt;
    images[i] = static_cast<Point>(word_index(series, *w));
  }
  std::vector<bool> hit(size, false);
  for (auto y : images) {
    if (hit[y]) return std::nullopt;
    hit[y] = true;
  }
  return Perm(std::move(images));
}

TowerElement decompose(const CompositionSeries& series, const TransversalTable& table, const Perm& g) {
  TowerElement e;
  std::vector<Perm> current{g};
  for (std::size_t n = 0; n < series.length(); ++n) {
    const std::size_t q = series.factors[n].degree();
    std::vector<Perm> level;
    std::vector<Perm> next;
    next.reserve(current.size() * q);
    for (const auto& gn : current) {
      std::vector<Point> images(q);
      for (std::size_t s = 0; s < q; ++s) {
        const Perm x = table.reps[n][s] * gn;
        const auto u = *series.coset_label(n, x);
        images[s] = u;
        next.push_back(x * table.reps[n][u].inverse());
      }
      level.emplace_back(std::move(images));
    }
    e.bases.push_back(std::move(level));
    current = std::move(next);
  }
  return e;
}

Tower factor_tower(const CompositionSeries& series) { return Tower(TowerKind::kImprimitive, series.factors); }

KaloujnineEmbedding embed_via_series(const CompositionSeries& series, const TransversalTable& table,
                                     std::uint64_t cap) {
  const BigInt order = series.group.order();
  if (order > cap) throw CapExceeded("kaloujnine: |G| = " + order.str() + " exceeds the cap " + std::to_string(cap));
  const std::size_t depth = series.length();
  const auto& all = series.group.elements();
  const std::size_t size = all.size();

  std::vector<Perm> layer;
  layer.reserve(size);
  for (const auto& x : all) {
    auto p = layer_action(series, table, x, depth);
    if (!p) throw Error("kaloujnine: the boundary action is not a permutation");
    layer.push_back(std::move(*p));
  }

  KaloujnineEmbedding result;
  result.homomorphism = true;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      ++result.checked_pairs;
      const auto k = *series.group.element_index(all[i] * all[j]);
      if (layer[k] != layer[i] * layer[j]) result.homomorphism = false;
    }
  for (const auto& p : layer) result.kernel_order += p.is_identity() ? 1 : 0;

  const Tower target = factor_tower(series);
  result.decomposes = true;
  for (std::size_t i = 0; i < size; ++i)
    if (target.flatten_element(decompose(series, table, all[i]), cap) != layer[i]) result.decomposes = false;
  if (!result.homomorphism || result.kernel_order != 1 || !result.decomposes)
    throw Error("kaloujnine: embedding checks failed for a validated series");

  std::vector<Perm> gens;
  for (const auto& c : series.group.generators()) gens.push_back(layer[*series.group.element_index(c)]);
  result.layer_group = PermGroup(size, gens, {}, series.group.limits());

  PEmbedding& e = result.embedding;
  e.source = Tower::single(result.layer_group);
  e.target = target;
  e.degree = 1;
  for (const auto& c : series.group.generators()) e.iota.push_back(decompose(series, table, c));
  for (Point d = 0; d < size; ++d) e.gamma.push_back({d});
  auto lookup = std::make_shared<std::unordered_map<Perm, Perm, PermHash>>();
  for (std::size_t i = 0; i < size; ++i) lookup->emplace(layer[i], all[i]);
  e.iota_map = [lookup, series, table](const TowerElement& x) {
    auto it = lookup->find(x.bases.at(0).at(0));
    if (it == lookup->end()) throw PreconditionError("kaloujnine: element outside the source group");
    return decompose(series, table, it->second);
  };
  e.image_order = Count::of(static_cast<std::uint64_t>(order));
  e.report = pembedding_verify(e);
  return result;
}

}  // namespace wreathkit
