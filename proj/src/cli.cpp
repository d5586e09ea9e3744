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

#include "wreathkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "wreathkit/catalog.hpp"
#include "wreathkit/cohopf.hpp"
#include "wreathkit/embed.hpp"
#include "wreathkit/error.hpp"
#include "wreathkit/kaloujnine.hpp"

namespace wreathkit {

namespace {

using ojson = nlohmann::ordered_json;

struct Global {
  bool json = false;
  bool flatten = false;
  std::uint64_t cap = kMaterializationCap;
  std::uint64_t seed = 0x5eed;
  std::uint64_t samples = 10'000;
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text << '\n';
}

std::vector<PermGroup> parse_group_list(const std::string& text) {
  std::vector<PermGroup> out;
  for (const auto& spec : split_top_level(text, ',')) out.push_back(parse_group(spec));
  if (out.empty()) throw ParseError("empty group list");
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& token : split_top_level(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ParseError("bad index '" + token + "'");
    }
  }
  return out;
}

// `ia:...` / `pa:...` is a tower, anything else a single group.
Tower parse_tower_or_group(const std::string& text) {
  if (text.rfind("ia:", 0) == 0 || text.rfind("pa:", 0) == 0) return parse_tower(text);
  return Tower::single(parse_group(text));
}

std::vector<std::vector<Point>> parse_gamma(const std::string& text) {
  std::vector<std::vector<Point>> gamma;
  for (const auto& block : split_top_level(text, ';')) {
    std::istringstream in(block);
    std::vector<Point> points;
    long long p;
    while (in >> p) {
      if (p < 0) throw ParseError("gamma: negative point");
      points.push_back(static_cast<Point>(p));
    }
    if (!in.eof()) throw ParseError("gamma: bad block '" + block + "'");
    std::sort(points.begin(), points.end());
    gamma.push_back(std::move(points));
  }
  return gamma;
}

ojson tower_json(const Tower& t) {
  ojson j;
  j["spec"] = t.spec();
  j["kind"] = to_string(t.kind());
  j["level"] = t.depth();
  j["degree"] = t.degree().to_string();
  j["order"] = t.order().to_string();
  j["transitive"] = t.is_transitive();
  j["levels"] = ojson::array();
  for (std::size_t k = 0; k < t.depth(); ++k) {
    const Tower p = t.prefix(k + 1);
    j["levels"].push_back({{"level", k + 1}, {"degree", p.degree().to_string()}, {"order", p.order().to_string()}});
  }
  return j;
}

void print_tower_text(std::ostream& out, const Tower& t) {
  out << "tower " << t.spec() << "\n";
  out << std::left << std::setw(7) << "level" << std::setw(24) << "degree" << "order\n";
  for (std::size_t k = 0; k < t.depth(); ++k) {
    const Tower p = t.prefix(k + 1);
    out << std::setw(7) << k + 1 << std::setw(24) << p.degree().to_string(20) << p.order().to_string(20) << "\n";
  }
  out << "degree: " << t.degree().to_string() << "\n";
  out << "order: " << t.order().to_string() << "\n";
  out << "transitive: " << (t.is_transitive() ? "yes" : "no") << "\n";
}

int run_tower(const Global& g, const std::string& kind, const std::string& seq, std::optional<std::size_t> level,
              std::ostream& out) {
  parse_tower_kind(kind);
  const Tower t = parse_tower(kind + ":" + seq, level);
  ojson j = tower_json(t);
  if (g.flatten) {
    const PermGroup flat = t.flatten(g.cap);
    const Count order = Count::of_smooth(flat.order(), 1'000'000);
    j["flattened"] = {{"degree", flat.degree()}, {"order", order.to_string()}, {"matches", order == t.order()}};
  }
  if (g.json) {
    out << j.dump(2) << "\n";
  } else {
    print_tower_text(out, t);
    if (g.flatten)
      out << "flattened: degree " << j["flattened"]["degree"].get<std::size_t>() << ", order "
          << j["flattened"]["order"].get<std::string>()
          << (j["flattened"]["matches"].get<bool>() ? " (matches)" : " (MISMATCH)") << "\n";
  }
  return kExitOk;
}

struct EmbedArgs {
  std::string kind;
  std::string s, h, g, k, h1, g1, h2, g2, seq, m, gamma, iota, spec;
  std::optional<std::size_t> r, level, n0;
};

void validate_embed_args(const EmbedArgs& a) {
  static const std::vector<std::string> kinds{"prop34", "cor35", "lem41", "lem42", "prop43", "thmC"};
  if (std::find(kinds.begin(), kinds.end(), a.kind) == kinds.end())
    throw PreconditionError("embed: unknown construction '" + a.kind + "'");
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw PreconditionError("embed " + a.kind + ": " + flag + " is required");
  };
  if (a.kind == "prop34") {
    if (a.r && *a.r < 2) throw PreconditionError("embed prop34: the degree r must be at least 2");
    need(a.s, "--S");
    need(a.h, "--H");
    need(a.g, "--G");
    need(a.gamma, "--gamma");
  } else if (a.kind == "cor35" || a.kind == "prop43") {
    need(a.seq, "--seq");
    if (a.kind == "prop43") need(a.m, "--m");
  } else if (a.kind == "lem41") {
    need(a.h1, "--H1");
    need(a.g1, "--G1");
    need(a.h2, "--H2");
    need(a.g2, "--G2");
  } else if (a.kind == "lem42") {
    need(a.h, "--H");
    need(a.k, "--K");
    need(a.g, "--G");
  } else if (a.spec.empty() && a.seq.empty()) {
    throw PreconditionError("embed thmC: --spec or --seq is required");
  }
}

PEmbedding witness_embedding(const PermGroup& h, const PermGroup& g) {
  if (h.same_generators(g)) return identity_embedding(Tower::single(h));
  auto w = perm_iso_to_subgroup(h, g);
  if (!w) throw PreconditionError("no permutational isomorphism of " + h.spec() + " onto a subgroup of " + g.spec());
  return from_witness(h, g, *w);
}

int run_embed(const Global& g, const EmbedArgs& a, std::ostream& out) {
  validate_embed_args(a);
  PEmbedding e;
  ojson extra = ojson::object();
  std::vector<CompatibilityCheck> compatibility;

  if (a.kind == "prop34") {
    PEmbedding base;
    base.source = parse_tower_or_group(a.h);
    base.target = parse_tower_or_group(a.g);
    base.gamma = parse_gamma(a.gamma);
    base.degree = base.gamma.empty() ? 0 : base.gamma[0].size();
    if (a.r && *a.r != base.degree) throw PreconditionError("embed prop34: --r does not match the size of the gamma blocks");
    if (!a.iota.empty()) {
      if (base.target.depth() != 1) throw PreconditionError("embed prop34: --iota needs a single target group");
      for (const auto& p : split_top_level(a.iota, ';'))
        base.iota.push_back({{{Perm::parse(p, base.target.degree_u64())}}});
    } else {
      if (base.source.generators().size() != base.target.generators().size())
        throw PreconditionError("embed prop34: give --iota when H and G have different numbers of generators");
      base.iota = base.target.generators();
    }
    const auto input = pembedding_verify(base, {.seed = g.seed});
    if (!input.pass()) {
      std::string why = "embed prop34: the input is not a P-embedding";
      for (const auto& f : input.failures) why += "; " + f;
      throw PreconditionError(why);
    }
    e = pembed_wreath(base, parse_group(a.s));
    extra["top_factorization"] = top_factorization_holds(e, base, 1, 1);
  } else if (a.kind == "cor35") {
    const auto seq = parse_group_list(a.seq);
    const std::size_t n = a.level.value_or(seq.size() - 1);
    auto t = ia_into_pa(seq, n);
    e = std::move(t.embedding);
    compatibility = std::move(t.compatibility);
  } else if (a.kind == "prop43") {
    const auto seq = parse_group_list(a.seq);
    const auto m = parse_index_list(a.m);
    auto t = subsequence_embed(seq, m, a.level.value_or(m.size()));
    e = std::move(t.embedding);
    compatibility = std::move(t.compatibility);
  } else if (a.kind == "lem41") {
    const PermGroup h1 = parse_group(a.h1), g1 = parse_group(a.g1);
    const Tower h2 = parse_tower_or_group(a.h2), g2 = parse_tower_or_group(a.g2);
    PEmbedding w2;
    if (h2.depth() == 1 && g2.depth() == 1) {
      w2 = witness_embedding(h2.level(0), g2.level(0));
    } else if (h2 == g2) {
      w2 = identity_embedding(h2);
    } else {
      throw PreconditionError("embed lem41: towers H2 and G2 must be equal");
    }
    e = perm_iso_wreath(witness_embedding(h1, g1), w2);
    extra["top_factorization"] = top_factorization_holds(e, w2, 1, 1);
  } else if (a.kind == "lem42") {
    const Tower top = parse_tower_or_group(a.g);
    e = insert_middle(parse_group(a.h), parse_group(a.k), top);
    extra["top_factorization"] = top_factorization_holds(e, identity_embedding(top), 1, 2);
  } else {
    std::vector<PermGroup> seq;
    SelfEmbedOptions options;
    std::size_t n = a.level.value_or(2);
    if (!a.spec.empty()) {
      const SequenceSpec spec = sequence_from_json(read_file(a.spec));
      const Verdict v = cohopfian_verdict(spec);
      if (v.outcome != Outcome::kNonCoHopfian)
        throw PreconditionError("embed thmC: the sequence does not satisfy the criterion (" + v.justification + ")");
      const std::size_t n0 = a.n0.value_or(v.criterion.n0);
      options.n0 = n0 - 1;
      n = a.level.value_or(std::max<std::size_t>(2, n0));
      const std::size_t length = spec.prefix.size() + (n + 2) * spec.tail.size() + n;
      for (std::size_t k = 1; k <= length; ++k) {
        const CatalogEntry term = spec.term(k);
        if (!term.realized) throw PreconditionError("embed thmC: term '" + term.spec + "' is metadata only");
        seq.push_back(*term.realized);
      }
    } else {
      seq = parse_group_list(a.seq);
      if (a.n0) options.n0 = *a.n0 - 1;
    }
    if (!a.m.empty()) options.m = parse_index_list(a.m);
    auto s = self_embed(seq, n, options);
    extra["m"] = s.m;
    extra["source_order"] = s.source_order.to_string();
    extra["target_order"] = s.target_order.to_string();
    extra["index"] = s.index.to_string();
    extra["proper"] = s.proper;
    e = std::move(s.tower.embedding);
    compatibility = std::move(s.tower.compatibility);
  }

  VerifyOptions vo;
  vo.seed = g.seed;
  vo.samples = g.samples;
  e.report = pembedding_verify(e, vo);
  if (!compatibility.empty()) {
    extra["compatibility"] = ojson::array();
    for (const auto& c : compatibility)
      extra["compatibility"].push_back(
          {{"level", c.level}, {"checked", c.checked}, {"exhaustive", c.exhaustive}, {"holds", c.holds}});
  }
  const std::string embedding_json = to_json(e);
  if (!g.out_path.empty()) write_file(g.out_path, embedding_json);

  bool ok = e.report->pass();
  if (extra.contains("top_factorization")) ok = ok && extra["top_factorization"].get<bool>();
  for (const auto& c : compatibility) ok = ok && c.holds;

  if (g.json) {
    ojson j;
    j["construction"] = a.kind;
    j["pass"] = ok;
    j["details"] = extra;
    j["embedding"] = ojson::parse(embedding_json);
    out << j.dump(2) << "\n";
  } else {
    const auto& r = *e.report;
    out << "construction: " << a.kind << "\n";
    out << "source: " << e.source.spec() << " (order " << e.source.order().to_string(60) << ", degree "
        << e.source.degree().to_string(60) << ")\n";
    out << "target: " << e.target.spec() << " (order " << e.target.order().to_string(60) << ", degree "
        << e.target.degree().to_string(60) << ")\n";
    out << "degree r: " << e.degree << "\n";
    for (const auto& [key, value] : extra.items()) {
      if (key == "compatibility") continue;
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    for (const auto& c : compatibility)
      out << "compatibility level " << c.level << ": " << (c.holds ? "holds" : "FAILS") << " over " << c.checked
          << (c.exhaustive ? " elements" : " sampled elements") << "\n";
    out << "verification: " << (r.pass() ? "pass" : "FAIL") << " (" << (r.exhaustive ? "exhaustive" : "sampled")
        << ", " << r.checked_pairs << " pairs, seed " << r.seed << ")\n";
    for (const auto& f : r.failures) out << "  failure: " << f << "\n";
  }
  return ok ? kExitOk : kExitError;
}

int run_verify(const Global& g, const std::string& path, std::ostream& out) {
  const PEmbedding e = pembedding_from_json(read_file(path));
  VerifyOptions vo;
  vo.seed = g.seed;
  vo.samples = g.samples;
  const EmbeddingReport r = pembedding_verify(e, vo);
  if (g.json) {
    out << to_json(r) << "\n";
  } else {
    out << "source: " << e.source.spec() << "\ntarget: " << e.target.spec() << "\ndegree r: " << e.degree << "\n";
    out << "degree: " << (r.degree ? "ok" : "FAIL") << "\ndisjointness: " << (r.disjointness ? "ok" : "FAIL")
        << "\nhomomorphism: " << (r.homomorphism ? "ok" : "FAIL") << "\ninjectivity: " << (r.injectivity ? "ok" : "FAIL")
        << "\nequivariance: " << (r.equivariance ? "ok" : "FAIL") << "\n";
    out << "verification: " << (r.pass() ? "pass" : "FAIL") << " (" << (r.exhaustive ? "exhaustive" : "sampled") << ", "
        << r.checked_pairs << " pairs, seed " << r.seed << ")\n";
    for (const auto& f : r.failures) out << "  failure: " << f << "\n";
  }
  return r.pass() ? kExitOk : kExitError;
}

std::string word_string(const TreeWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

int run_kaloujnine(const Global& g, const std::string& path, const std::string& policy, bool literal, bool pipeline,
                   std::ostream& out) {
  if (policy != "min" && policy != "max") throw PreconditionError("kaloujnine: --policy is min or max");
  const CompositionSeries series = series_from_json(read_file(path));
  const TransversalTable table =
      choose_transversals(series, policy == "min" ? TransversalPolicy::kMinimal : TransversalPolicy::kMaximal);
  const KaloujnineEmbedding k = embed_via_series(series, table, g.cap);

  ojson j;
  j["group"] = series.group.spec();
  j["order"] = series.group.order().str();
  j["factor_orders"] = ojson::array();
  for (const auto& f : series.factors) j["factor_orders"].push_back(f.degree());
  j["target"] = k.embedding.target.spec();
  j["target_order"] = k.embedding.target.order().to_string();
  j["checked_pairs"] = k.checked_pairs;
  j["homomorphism"] = k.homomorphism;
  j["kernel_order"] = k.kernel_order;
  j["decomposes"] = k.decomposes;
  j["verification"] = k.embedding.report->pass();
  bool ok = k.embedding.report->pass();
  if (literal) {
    std::size_t undefined = 0;
    for (const auto& x : series.group.elements())
      if (!layer_action(series, table, x, series.length(), Recursion::kLiteral)) ++undefined;
    j["literal_undefined_elements"] = undefined;
  }
  if (pipeline) {
    std::vector<PermGroup> seq{series.factors.front()};
    seq.insert(seq.end(), series.factors.begin(), series.factors.end());
    const auto t = ia_into_pa(seq, series.length());
    PEmbedding c = compose(k.embedding, t.embedding);
    VerifyOptions vo;
    vo.seed = g.seed;
    vo.samples = g.samples;
    c.report = pembedding_verify(c, vo);
    j["pipeline"] = {{"target", c.target.spec()}, {"degree", c.degree}, {"pass", c.report->pass()}};
    ok = ok && c.report->pass();
    if (!g.out_path.empty()) write_file(g.out_path, to_json(c));
  } else if (!g.out_path.empty()) {
    write_file(g.out_path, to_json(k.embedding));
  }

  if (g.json) {
    out << j.dump(2) << "\n";
    return ok ? kExitOk : kExitError;
  }
  out << "group: " << j["group"].get<std::string>() << " (order " << j["order"].get<std::string>() << ")\n";
  out << "factors:";
  for (const auto& f : series.factors) out << " " << f.degree();
  out << "\ntarget: " << k.embedding.target.spec() << " (order " << j["target_order"].get<std::string>() << ")\n";
  out << "homomorphism: " << (k.homomorphism ? "yes" : "no") << " over " << k.checked_pairs << " pairs\n";
  out << "kernel order: " << k.kernel_order << "\ndecomposes: " << (k.decomposes ? "yes" : "no") << "\n";
  out << "layer " << series.length() << " (word -> images under the generators of G):\n";
  const std::uint64_t size = k.layer_group.degree();
  for (std::uint64_t i = 0; i < size; ++i) {
    out << "  " << word_string(word_at(series, series.length(), i)) << " ->";
    for (const auto& p : k.layer_group.generators()) out << " " << word_string(word_at(series, series.length(), p[i]));
    out << "\n";
  }
  if (literal)
    out << "literal recursion undefined for " << j["literal_undefined_elements"].get<std::size_t>() << " elements\n";
  if (pipeline)
    out << "pipeline: " << j["pipeline"]["target"].get<std::string>() << ", degree "
        << j["pipeline"]["degree"].get<std::size_t>() << ", " << (j["pipeline"]["pass"].get<bool>() ? "pass" : "FAIL")
        << "\n";
  out << "verification: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kExitOk : kExitError;
}

int run_cohopf(const Global& g, const std::string& path, std::ostream& out) {
  const Verdict v = cohopfian_verdict(sequence_from_json(read_file(path)));
  if (g.json) {
    out << to_json(v) << "\n";
  } else {
    out << "outcome: " << to_string(v.outcome) << "\n";
    if (v.theorem) out << "theorem: " << *v.theorem << "\n";
    out << "justification: " << v.justification << "\n";
    if (v.outcome == Outcome::kNonCoHopfian)
      for (const auto& w : v.criterion.witnesses)
        out << "  m(" << w.j << ") = " << w.m << ": " << w.source << " -> " << w.target << "\n";
    if (v.offending_term) out << "offending term: " << *v.offending_term << "\n";
  }
  if (!g.out_path.empty()) write_file(g.out_path, to_json(v));
  return v.outcome == Outcome::kUnknown ? kExitUnknown : kExitOk;
}

int run_universal(const Global& g, const std::string& reps, std::size_t length, std::ostream& out) {
  const auto seq = universal_sequence(split_top_level(reps, ','), length);
  if (g.json) {
    out << ojson(seq).dump(2) << "\n";
  } else {
    for (const auto& s : seq) out << s << "\n";
  }
  return kExitOk;
}

int run_catalog(const Global& g, std::ostream& out) {
  ojson arr = ojson::array();
  for (const auto& e : catalog_entries())
    arr.push_back({{"spec", e.spec},
                   {"name", e.name},
                   {"family", to_string(e.family)},
                   {"order", e.order.str()},
                   {"degree", e.degree},
                   {"simple", e.simple},
                   {"minimal_simple", e.minimal_simple},
                   {"realized", e.realized.has_value()}});
  if (g.json) {
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(14) << "spec" << std::setw(10) << "name" << std::setw(14) << "order" << std::setw(8)
      << "degree" << std::setw(16) << "minimal simple" << "realized\n";
  for (const auto& e : arr)
    out << std::setw(14) << e["spec"].get<std::string>() << std::setw(10) << e["name"].get<std::string>()
        << std::setw(14) << e["order"].get<std::string>() << std::setw(8) << e["degree"].get<std::size_t>()
        << std::setw(16) << (e["minimal_simple"].get<bool>() ? "yes" : "no")
        << (e["realized"].get<bool>() ? "yes" : "no") << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wreathkit: iterated wreath products and P-embeddings"};
  app.require_subcommand(1);
  Global g;
  auto global_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", g.json, "JSON output");
    sub->add_option("--cap", g.cap, "materialization cap");
    sub->add_option("--seed", g.seed, "seed for sampled verification");
    sub->add_option("--samples", g.samples, "random samples in sampled verification");
    sub->add_option("--out", g.out_path, "write the JSON result to this file");
  };

  std::string tower_kind, tower_seq;
  std::optional<std::size_t> tower_level;
  auto* tower_cmd = app.add_subcommand("tower", "degree and order of an iterated wreath product");
  tower_cmd->add_option("kind", tower_kind, "ia or pa")->required();
  tower_cmd->add_option("seq", tower_seq, "comma-separated group specs")->required();
  tower_cmd->add_option("--level", tower_level, "number of levels (the list repeats periodically)");
  tower_cmd->add_flag("--flatten", g.flatten, "materialize the permutation group and cross-check its order");
  global_flags(tower_cmd);

  EmbedArgs ea;
  auto* embed_cmd = app.add_subcommand("embed", "build and verify a P-embedding");
  embed_cmd->add_option("kind", ea.kind, "prop34 | cor35 | lem41 | lem42 | prop43 | thmC")->required();
  embed_cmd->add_option("--S", ea.s, "prop34: the group S");
  embed_cmd->add_option("--H", ea.h, "prop34, lem42: the group H");
  embed_cmd->add_option("--G", ea.g, "prop34, lem42: the group or tower G");
  embed_cmd->add_option("--K", ea.k, "lem42: the inserted group K");
  embed_cmd->add_option("--H1", ea.h1, "lem41");
  embed_cmd->add_option("--G1", ea.g1, "lem41");
  embed_cmd->add_option("--H2", ea.h2, "lem41");
  embed_cmd->add_option("--G2", ea.g2, "lem41");
  embed_cmd->add_option("--gamma", ea.gamma, "prop34: blocks such as '0 2;1 3'");
  embed_cmd->add_option("--iota", ea.iota, "prop34: generator images in G, ';'-separated");
  embed_cmd->add_option("--r", ea.r, "prop34: expected degree");
  embed_cmd->add_option("--seq", ea.seq, "cor35, prop43, thmC: comma-separated group specs");
  embed_cmd->add_option("--m", ea.m, "prop43, thmC: 1-based indices");
  embed_cmd->add_option("--level", ea.level, "tower level n");
  embed_cmd->add_option("--n0", ea.n0, "thmC: threshold index");
  embed_cmd->add_option("--spec", ea.spec, "thmC: sequence spec file");
  global_flags(embed_cmd);

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "verify a serialized P-embedding");
  verify_cmd->add_option("file", verify_path)->required();
  global_flags(verify_cmd);

  std::string series_path, policy = "min";
  bool literal = false, pipeline = false;
  auto* kal_cmd = app.add_subcommand("kaloujnine", "embed a group into the wreath product of its composition factors");
  kal_cmd->add_option("file", series_path, "series JSON")->required();
  kal_cmd->add_option("--policy", policy, "transversal choice: min or max");
  kal_cmd->add_flag("--literal", literal, "also count elements on which the uncorrected recursion is undefined");
  kal_cmd->add_flag("--pipeline", pipeline, "compose with the product-action embedding and verify");
  global_flags(kal_cmd);

  std::string cohopf_path;
  auto* cohopf_cmd = app.add_subcommand("cohopf", "co-Hopfian verdict for a sequence spec");
  cohopf_cmd->add_option("file", cohopf_path)->required();
  global_flags(cohopf_cmd);

  std::string reps;
  std::size_t length = 0;
  auto* uni_cmd = app.add_subcommand("universal-seq", "block sequence containing every word as a subsequence");
  uni_cmd->add_option("--reps", reps, "comma-separated specs")->required();
  uni_cmd->add_option("--length", length, "number of terms")->required();
  global_flags(uni_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "list catalogued groups");
  global_flags(catalog_cmd);

  std::vector<std::string> argv_store{"wreathkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*tower_cmd) return run_tower(g, tower_kind, tower_seq, tower_level, out);
    if (*embed_cmd) return run_embed(g, ea, out);
    if (*verify_cmd) return run_verify(g, verify_path, out);
    if (*kal_cmd) return run_kaloujnine(g, series_path, policy, literal, pipeline, out);
    if (*cohopf_cmd) return run_cohopf(g, cohopf_path, out);
    if (*uni_cmd) return run_universal(g, reps, length, out);
    if (*catalog_cmd) return run_catalog(g, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace wreathkit
