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

#include "wreathkit/pembedding.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include <json.hpp>

#include "wreathkit/error.hpp"

namespace wreathkit {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxFailures = 16;

void fail(EmbeddingReport& r, std::string message) {
  if (r.failures.size() < kMaxFailures) r.failures.push_back(std::move(message));
}

std::string join(std::span<const Point> points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) s += (i ? "," : "") + std::to_string(points[i]);
  return s + "}";
}

kernels::SubsetTable to_table(const std::vector<std::vector<Point>>& gamma) {
  kernels::SubsetTable t;
  t.offsets.push_back(0);
  for (const auto& row : gamma) {
    t.values.insert(t.values.end(), row.begin(), row.end());
    t.offsets.push_back(t.values.size());
  }
  return t;
}

// Returns the common target degree, or nullopt after recording why the
// shape checks could not run.
std::optional<std::uint64_t> check_shape(const PEmbedding& e, EmbeddingReport& r) {
  auto source_degree = e.source.degree_index(e.source.depth() - 1);
  auto target_degree = e.target.degree_index(e.target.depth() - 1);
  if (!source_degree || !target_degree) {
    fail(r, "shape: source or target degree is not indexable");
    return std::nullopt;
  }
  if (e.gamma.size() != *source_degree) {
    fail(r, "shape: gamma has " + std::to_string(e.gamma.size()) + " rows for " + std::to_string(*source_degree) +
                " source points");
    return std::nullopt;
  }
  r.degree = e.degree >= 1;
  for (std::size_t d = 0; d < e.gamma.size(); ++d) {
    const auto& row = e.gamma[d];
    bool ok = row.size() == e.degree && std::is_sorted(row.begin(), row.end()) &&
              std::adjacent_find(row.begin(), row.end()) == row.end() &&
              std::all_of(row.begin(), row.end(), [&](Point p) { return p < *target_degree; });
    if (!ok) {
      r.degree = false;
      fail(r, "degree: Gamma(" + std::to_string(d) + ") = " + join(row) + " is not a sorted " +
                  std::to_string(e.degree) + "-subset of the target domain");
    }
  }
  std::vector<std::pair<Point, Point>> owner;
  for (std::size_t d = 0; d < e.gamma.size(); ++d)
    for (Point p : e.gamma[d]) owner.emplace_back(p, static_cast<Point>(d));
  std::sort(owner.begin(), owner.end());
  r.disjointness = true;
  for (std::size_t i = 1; i < owner.size(); ++i)
    if (owner[i].first == owner[i - 1].first && owner[i].second != owner[i - 1].second) {
      r.disjointness = false;
      fail(r, "disjointness: Gamma(" + std::to_string(owner[i - 1].second) + ") and Gamma(" +
                  std::to_string(owner[i].second) + ") share point " + std::to_string(owner[i].first));
    }
  if (e.iota.size() != e.source.generators().size()) {
    fail(r, "shape: iota has " + std::to_string(e.iota.size()) + " images for " +
                std::to_string(e.source.generators().size()) + " generators");
    return std::nullopt;
  }
  for (std::size_t i = 0; i < e.iota.size(); ++i)
    if (!e.target.is_element(e.iota[i])) {
      fail(r, "shape: iota(generator " + std::to_string(i) + ") is not an element of the target");
      return std::nullopt;
    }
  return target_degree;
}

bool row_equivariant(const PEmbedding& e, const PointMap& x, const PointMap& y, Point d, std::vector<Point>& scratch) {
  const auto& from = e.gamma[d];
  const auto& to = e.gamma[static_cast<std::size_t>(x(d))];
  scratch.clear();
  for (Point p : from) scratch.push_back(static_cast<Point>(y(p)));
  std::sort(scratch.begin(), scratch.end());
  return scratch == to;
}

void verify_exhaustive(const PEmbedding& e, std::uint64_t source_order, std::uint64_t target_degree,
                       const VerifyOptions& options, EmbeddingReport& r) {
  r.exhaustive = true;
  const auto source_degree = e.source.degree_u64();
  std::vector<Perm> xs, ys;
  for (const auto& g : e.source.generators()) xs.push_back(e.source.flatten_element(g, source_degree, options.exec));
  for (const auto& y : e.iota) ys.push_back(e.target.flatten_element(y, target_degree, options.exec));
  auto graph = hom_graph(xs, source_degree, ys, target_degree, source_order + 1);
  r.homomorphism = graph && graph->well_defined && graph->pairs.size() == source_order;
  if (!r.homomorphism) {
    fail(r, "homomorphism: the generator images do not define a homomorphism");
    return;
  }
  r.injectivity = graph->injective;
  if (!r.injectivity) fail(r, "injectivity: two source elements have the same image");
  std::vector<Perm> first, second;
  first.reserve(graph->pairs.size());
  second.reserve(graph->pairs.size());
  for (auto& [x, y] : graph->pairs) {
    first.push_back(std::move(x));
    second.push_back(std::move(y));
  }
  auto failure = kernels::equivariance_scan(first, second, to_table(e.gamma), options.exec);
  r.checked_pairs = source_order * source_degree;
  r.equivariance = !failure;
  if (failure)
    fail(r, "equivariance: element " + first[failure->pair].to_cycle_string() + " at point " +
                std::to_string(failure->point) + ": Gamma(d^x) differs from Gamma(d)^iota(x)");
}

void verify_sampled(const PEmbedding& e, const VerifyOptions& options, EmbeddingReport& r) {
  r.exhaustive = false;
  const auto source_degree = e.source.degree_u64();
  const auto& gens = e.source.generators();
  std::vector<Point> scratch;
  r.equivariance = true;
  r.homomorphism = true;

  // Equivariance for every generator on every point implies it for the
  // whole group once iota is a homomorphism.
  if (gens.size() * source_degree <= options.exhaustive_limit) {
    for (std::size_t i = 0; i < gens.size() && r.equivariance; ++i) {
      PointMap x(e.source, gens[i]), y(e.target, e.iota[i]);
      for (Point d = 0; d < source_degree; ++d) {
        ++r.checked_pairs;
        if (!row_equivariant(e, x, y, d, scratch)) {
          r.equivariance = false;
          fail(r, "equivariance: generator " + std::to_string(i) + " at point " + std::to_string(d));
          break;
        }
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  const std::uint64_t points_per_element = std::min<std::uint64_t>(10, source_degree);
  const std::uint64_t elements = std::max<std::uint64_t>(1, options.samples / points_per_element);
  bool kernel_hit = false;
  for (std::uint64_t s = 0; s < elements && r.equivariance && r.homomorphism; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<std::size_t> length(1, 2 * gens.size() + 4);
    TowerElement x = e.source.identity(), y = e.target.identity();
    for (std::size_t l = length(rng); l > 0; --l) {
      const std::size_t i = pick(rng);
      x = e.source.compose(x, gens[i]);
      y = e.target.compose(y, e.iota[i]);
    }
    if (e.iota_map && !(e.iota_map(x) == y)) {
      r.homomorphism = false;
      fail(r, "homomorphism: the structural map disagrees with word evaluation on sample " + std::to_string(s));
      break;
    }
    if (e.target.is_identity(y) && !e.source.is_identity(x)) kernel_hit = true;
    PointMap xm(e.source, x), ym(e.target, y);
    std::uniform_int_distribution<std::uint64_t> point(0, source_degree - 1);
    for (std::uint64_t k = 0; k < points_per_element; ++k) {
      const auto d = static_cast<Point>(point(rng));
      ++r.checked_pairs;
      if (!row_equivariant(e, xm, ym, d, scratch)) {
        r.equivariance = false;
        fail(r, "equivariance: sample " + std::to_string(s) + " at point " + std::to_string(d));
        break;
      }
    }
  }
  if (kernel_hit) {
    r.injectivity = false;
    fail(r, "injectivity: a non-identity sample maps to the identity");
  } else if (!e.image_order) {
    r.injectivity = false;
    fail(r, "injectivity: not certified (no image order and the source is too large to enumerate)");
  } else {
    r.injectivity = *e.image_order == e.source.order();
    if (!r.injectivity) fail(r, "injectivity: image order differs from the source order");
  }
}

Count parse_count(const std::string& text) {
  Count c;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(" * ", pos);
    std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    auto caret = term.find('^');
    try {
      const std::uint64_t p = std::stoull(term.substr(0, caret));
      const BigInt exponent = caret == std::string::npos ? BigInt(1) : BigInt(term.substr(caret + 1));
      c *= Count::of(p).pow(exponent);
    } catch (const std::exception&) {
      throw ParseError("embedding JSON: malformed image order '" + text + "'");
    }
    if (end == std::string::npos) break;
    pos = end + 3;
  }
  return c;
}

ordered_json report_json(const EmbeddingReport& r) {
  ordered_json j;
  j["pass"] = r.pass();
  j["checked_pairs"] = r.checked_pairs;
  j["exhaustive"] = r.exhaustive;
  j["seed"] = r.seed;
  j["degree"] = r.degree;
  j["disjointness"] = r.disjointness;
  j["homomorphism"] = r.homomorphism;
  j["injectivity"] = r.injectivity;
  j["equivariance"] = r.equivariance;
  j["failures"] = r.failures;
  return j;
}

EmbeddingReport report_from_json(const ordered_json& j) {
  EmbeddingReport r;
  r.checked_pairs = j.at("checked_pairs").get<std::uint64_t>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.degree = j.at("degree").get<bool>();
  r.disjointness = j.at("disjointness").get<bool>();
  r.homomorphism = j.at("homomorphism").get<bool>();
  r.injectivity = j.at("injectivity").get<bool>();
  r.equivariance = j.at("equivariance").get<bool>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  return r;
}

}  // namespace

TowerElement PEmbedding::apply(const TowerElement& x) const {
  if (iota_map) return iota_map(x);
  if (!table_) table_ = std::make_shared<const std::function<TowerElement(const TowerElement&)>>(
                   table_iota_map(source, target, iota));
  return (*table_)(x);
}

std::function<TowerElement(const TowerElement&)> table_iota_map(const Tower& source, const Tower& target,
                                                                const std::vector<TowerElement>& iota) {
  const auto& gens = source.generators();
  if (gens.size() != iota.size()) throw PreconditionError("iota table: one image per generator required");
  const auto degree = source.degree_u64();
  std::vector<Perm> xs;
  for (const auto& g : gens) xs.push_back(source.flatten_element(g, degree));
  auto table = std::make_shared<std::unordered_map<Perm, TowerElement, PermHash>>();
  std::vector<Perm> queue{Perm::identity(degree)};
  table->emplace(queue.front(), target.identity());
  const std::uint64_t cap = source.bottom().limits().enumeration_cap;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const TowerElement y = table->at(queue[k]);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Perm next = queue[k] * xs[i];
      if (table->count(next)) continue;
      if (queue.size() >= cap) throw BudgetExceeded("iota table: source group above the enumeration cap");
      table->emplace(next, target.compose(y, iota[i]));
      queue.push_back(std::move(next));
    }
  }
  return [source, table, degree](const TowerElement& x) {
    auto it = table->find(source.flatten_element(x, degree));
    if (it == table->end()) throw PreconditionError("iota: element is not in the source group");
    return it->second;
  };
}

EmbeddingReport pembedding_verify(const PEmbedding& e, const VerifyOptions& options) {
  EmbeddingReport r;
  r.seed = options.seed;
  std::optional<std::uint64_t> target_degree;
  try {
    target_degree = check_shape(e, r);
  } catch (const Error& ex) {
    fail(r, std::string("shape: ") + ex.what());
  }
  if (!target_degree) return r;

  try {
    const auto source_order = e.source.order().as_u64();
    const auto source_degree = e.source.degree_u64();
    const bool exhaustive = source_order && *source_order <= options.exhaustive_limit &&
                            *source_order * source_degree <= options.exhaustive_limit &&
                            *target_degree <= options.flatten_cap;
    if (exhaustive)
      verify_exhaustive(e, *source_order, *target_degree, options, r);
    else
      verify_sampled(e, options, r);
  } catch (const Error& ex) {
    fail(r, std::string("verification aborted: ") + ex.what());
  }
  return r;
}

PEmbedding compose(const PEmbedding& e1, const PEmbedding& e2) {
  if (!(e1.target == e2.source))
    throw PreconditionError("compose: target " + e1.target.spec() + " differs from source " + e2.source.spec());
  PEmbedding out;
  out.source = e1.source;
  out.target = e2.target;
  out.degree = e1.degree * e2.degree;
  for (const auto& y : e1.iota) out.iota.push_back(e2.apply(y));
  out.iota_map = [e1, e2](const TowerElement& x) { return e2.apply(e1.apply(x)); };
  for (const auto& row : e1.gamma) {
    std::vector<Point> merged;
    for (Point p : row) merged.insert(merged.end(), e2.gamma.at(p).begin(), e2.gamma.at(p).end());
    std::sort(merged.begin(), merged.end());
    out.gamma.push_back(std::move(merged));
  }
  if (e1.image_order && e2.image_order) out.image_order = e1.image_order;
  return out;
}

PEmbedding from_witness(const PermGroup& h, const PermGroup& g, const SubgroupWitness& w) {
  PEmbedding e;
  e.source = Tower::single(h);
  e.target = Tower::single(g);
  e.degree = 1;
  for (const auto& y : w.equivalence.iso) e.iota.push_back(TowerElement{{{y}}});
  for (Point t : w.equivalence.bijection) e.gamma.push_back({t});
  e.iota_map = table_iota_map(e.source, e.target, e.iota);
  e.image_order = h.order_count();
  return e;
}

PEmbedding identity_embedding(const Tower& t) {
  PEmbedding e;
  e.source = t;
  e.target = t;
  e.degree = 1;
  e.iota = t.generators();
  const auto n = t.degree_u64();
  if (n > kMaterializationCap * 64) throw CapExceeded("identity embedding: degree too large to tabulate");
  for (Point d = 0; d < n; ++d) e.gamma.push_back({d});
  e.iota_map = [](const TowerElement& x) { return x; };
  e.image_order = t.order();
  return e;
}

std::string to_json(const EmbeddingReport& r) { return report_json(r).dump(2); }

std::string to_json(const PEmbedding& e) {
  ordered_json j;
  j["source_spec"] = e.source.spec();
  j["target_spec"] = e.target.spec();
  j["degree"] = e.degree;
  ordered_json iota = ordered_json::array();
  for (const auto& y : e.iota) {
    ordered_json levels = ordered_json::array();
    for (const auto& level : y.bases) {
      ordered_json perms = ordered_json::array();
      for (const auto& p : level) perms.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
      levels.push_back(std::move(perms));
    }
    iota.push_back(std::move(levels));
  }
  j["iota"] = std::move(iota);
  j["gamma"] = e.gamma;
  j["image_order"] = e.image_order ? ordered_json(e.image_order->factored()) : ordered_json(nullptr);
  j["report"] = e.report ? report_json(*e.report) : ordered_json(nullptr);
  return j.dump(2);
}

PEmbedding pembedding_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("embedding JSON: ") + ex.what());
  }
  try {
    PEmbedding e;
    e.source = parse_tower(j.at("source_spec").get<std::string>());
    e.target = parse_tower(j.at("target_spec").get<std::string>());
    e.degree = j.at("degree").get<std::size_t>();
    for (const auto& levels : j.at("iota")) {
      TowerElement y;
      for (const auto& perms : levels) {
        std::vector<Perm> level;
        for (const auto& p : perms) level.emplace_back(p.get<std::vector<Point>>());
        y.bases.push_back(std::move(level));
      }
      e.target.check_element(y);
      e.iota.push_back(std::move(y));
    }
    e.gamma = j.at("gamma").get<std::vector<std::vector<Point>>>();
    if (j.contains("image_order") && !j["image_order"].is_null())
      e.image_order = parse_count(j["image_order"].get<std::string>());
    if (j.contains("report") && !j["report"].is_null()) e.report = report_from_json(j["report"]);
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("embedding JSON: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("embedding JSON: ") + ex.what());
  }
}

}  // namespace wreathkit
