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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreathkit/catalog.hpp"
#include "wreathkit/cli.hpp"
#include "wreathkit/cohopf.hpp"
#include "wreathkit/embed.hpp"
#include "wreathkit/error.hpp"
#include "wreathkit/kaloujnine.hpp"
#include "wreathkit/perm_iso.hpp"
#include "wreathkit/tower.hpp"

namespace wk = wreathkit;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

std::string data(const std::string& name) { return std::string(WREATHKIT_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Closure of a set of permutations by breadth-first multiplication.
std::size_t closure_size(const std::vector<wk::Perm>& gens, std::size_t degree) {
  std::set<wk::Perm> seen{wk::Perm::identity(degree)};
  std::vector<wk::Perm> frontier{wk::Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<wk::Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        wk::Perm y = x * g;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

wk::PEmbedding double_transposition(std::vector<std::vector<wk::Point>> gamma) {
  wk::PEmbedding e;
  e.source = wk::Tower::single(wk::parse_group("C2"));
  e.target = wk::Tower::single(wk::PermGroup(4, {wk::Perm::parse("(0 1)(2 3)", 4)}));
  e.degree = gamma.at(0).size();
  e.gamma = std::move(gamma);
  e.iota = {wk::TowerElement{{{wk::Perm::parse("(0 1)(2 3)", 4)}}}};
  return e;
}

std::string ac1() {
  // The blocks {0,1},{2,3} are not permuted by (0 1)(2 3); {0,2},{1,3} are.
  const auto literal = wk::pembedding_verify(double_transposition({{0, 1}, {2, 3}}));
  require(!literal.pass() && !literal.equivariance, "blocks {0,1},{2,3} unexpectedly equivariant");
  bool rejected = false;
  try {
    wk::pembed_wreath(double_transposition({{0, 1}, {2, 3}}), wk::parse_group("C2"));
  } catch (const wk::PreconditionError&) {
    rejected = true;
  }
  require(rejected, "non-equivariant blocks were not rejected");

  const auto base = double_transposition({{0, 2}, {1, 3}});
  require(wk::pembedding_verify(base).pass(), "blocks {0,2},{1,3} do not give a P-embedding");
  const auto e = wk::pembed_wreath(base, wk::parse_group("C2"));
  require(e.source.order().to_string() == "8", "source order " + e.source.order().to_string());
  require(e.target.order().to_string() == "32", "target order " + e.target.order().to_string());
  const auto formula = wk::pembed_wreath_degree(2, 4, 2, 2);
  require(formula == 2, "formula value");
  for (wk::Point eps = 0; eps < 2; ++eps)
    for (wk::Point w = 0; w < 2; ++w) {
      std::vector<wk::Point> expected;
      for (wk::Point code = 0; code < 16; ++code) {
        auto f = [&](wk::Point t) { return (code >> (3 - t)) & 1u; };
        const auto& own = base.gamma[eps];
        const auto& other = base.gamma[1 - eps];
        if (f(own[0]) == w && f(own[1]) == w && f(other[0]) != f(other[1])) expected.push_back(code);
      }
      require(expected.size() == 2 && e.gamma[eps * 2 + w] == expected, "Gamma-hat block mismatch");
    }
  const auto r = wk::pembedding_verify(e);
  require(r.pass() && r.exhaustive && r.checked_pairs == 32, "verification of the wreath embedding");
  return "blocks {0,2},{1,3}: 8 -> 32, 32 pairs, |Gamma-hat| = 2 = formula at all 4 points; "
         "blocks {0,1},{2,3} rejected as non-equivariant";
}

std::string ac2() {
  const wk::PermGroup c2 = wk::parse_group("C2");
  const auto t = wk::ia_into_pa({c2, c2, c2}, 2);
  require(t.embedding.source.order().to_string() == "8", "source order");
  require(t.embedding.target.order().to_string() == "128", "target order");
  const auto r = wk::pembedding_verify(t.embedding);
  require(r.pass() && r.exhaustive, "verification");
  require(!t.compatibility.empty(), "no compatibility checks");
  std::uint64_t checked = 0;
  for (const auto& c : t.compatibility) {
    require(c.holds && c.exhaustive, "compatibility at level " + std::to_string(c.level));
    checked += c.checked;
  }
  return "8 -> 128, " + std::to_string(r.checked_pairs) + " pairs, compatibility on " + std::to_string(checked) +
         " elements";
}

std::string ac3() {
  struct Case {
    const char* file;
    std::uint64_t pairs;
    const char* order;
  };
  std::string out;
  for (const Case& c : {Case{"series-s3.json", 36, "18"}, Case{"series-c4.json", 16, "8"},
                        Case{"series-a4.json", 144, "1536"}}) {
    const auto s = wk::series_from_json(slurp(data(c.file)));
    const auto k = wk::embed_via_series(s, wk::choose_transversals(s));
    require(k.checked_pairs == c.pairs, std::string(c.file) + ": pairs " + std::to_string(k.checked_pairs));
    require(k.homomorphism && k.kernel_order == 1 && k.decomposes, std::string(c.file) + ": structure");
    require(k.embedding.target.order().to_string() == c.order, std::string(c.file) + ": target order");
    require(k.embedding.report && k.embedding.report->pass(), std::string(c.file) + ": verification");
    out += s.group.spec() + " -> " + k.embedding.target.spec() + " (" + std::to_string(c.pairs) + " pairs); ";
  }
  return out;
}

std::string ac4() {
  const wk::PermGroup c2 = wk::parse_group("C2");
  const auto s = wk::self_embed({c2, c2, c2, c2}, 2);
  require(s.source_order.to_string() == "8", "image order " + s.source_order.to_string());
  require(s.target_order.to_string() == "128", "target order " + s.target_order.to_string());
  require(s.index.to_string() == "16", "index " + s.index.to_string());
  require(s.proper, "not proper");
  require(wk::pembedding_verify(s.tower.embedding).pass(), "verification");
  for (const auto& c : s.tower.compatibility) require(c.holds, "compatibility");
  return "m = (2, 3), 8 -> 128, index 16";
}

std::string ac5() {
  const wk::PermGroup c2 = wk::parse_group("C2"), s3 = wk::parse_group("S3");
  const auto w1 = wk::from_witness(c2, s3, *wk::perm_iso_to_subgroup(c2, s3));
  const auto w2 = wk::identity_embedding(wk::Tower::single(c2));
  const auto e41 = wk::perm_iso_wreath(w1, w2);
  const auto r41 = wk::pembedding_verify(e41);
  require(e41.source.order().to_string() == "8" && e41.target.order().to_string() == "72", "first lemma orders");
  require(r41.pass() && r41.exhaustive, "first lemma verification");
  require(wk::top_factorization_holds(e41, w2, 1, 1), "first lemma top factorization");

  const wk::Tower top = wk::Tower::single(c2);
  const auto e42 = wk::insert_middle(c2, c2, top);
  const auto r42 = wk::pembedding_verify(e42);
  require(e42.source.order().to_string() == "8" && e42.target.order().to_string() == "128", "second lemma orders");
  require(e42.target.degree().to_string() == "16", "second lemma degree");
  require(r42.pass() && r42.exhaustive, "second lemma verification");
  require(wk::top_factorization_holds(e42, wk::identity_embedding(top), 1, 2), "second lemma top factorization");
  return "C2 wr C2 -> S3 wr C2 (8 -> 72), C2 wr C2 -> C2 wr (C2 wr C2) (8 -> 128); top maps reproduced";
}

std::string ac6() {
  std::size_t fixtures = 0;
  for (const char* spec : {"ia:C2,C2", "ia:C3,C2", "ia:C2,C3", "ia:C2,C2,C2", "ia:S3,C2", "ia:C2,S3", "pa:C2,C2",
                           "pa:C2,C2,C2", "pa:C3,C2", "pa:C2,C3", "pa:S3,C2", "ia:C2,C2,C3", "pa:C2,S3"}) {
    const wk::Tower t = wk::parse_tower(spec);
    const auto order = t.order().as_u64();
    if (!order || *order > 10'000) continue;
    const wk::PermGroup flat = t.flatten();
    const std::size_t counted = closure_size(flat.generators(), flat.degree());
    require(counted == *order, std::string(spec) + ": structural " + std::to_string(*order) + ", enumerated " +
                                   std::to_string(counted));
    ++fixtures;
  }
  const std::vector<std::string> degrees{"2", "4", "16", "65536"}, orders{"2", "8", "128", "2^23"};
  for (std::size_t n = 1; n <= 4; ++n) {
    const wk::Tower t = wk::parse_tower("pa:C2", n);
    require(t.degree().to_string() == degrees[n - 1], "pa C2 degree at level " + std::to_string(n));
    const std::string o = t.order().to_string();
    require(o == orders[n - 1] || (n == 4 && o == "8388608"), "pa C2 order at level " + std::to_string(n) + ": " + o);
  }
  return std::to_string(fixtures) + " fixtures enumerated; pa C2 degrees 2,4,16,65536 and orders 2,8,128,2^23";
}

std::string ac7() {
  const wk::PermGroup h = wk::parse_group("C2");
  const wk::PermGroup g(4, {wk::Perm::parse("(0 1)(2 3)", 4)});
  const auto w = wk::perm_iso_to_subgroup(h, g);
  require(w.has_value(), "no witness");
  require(w->subset == std::vector<wk::Point>{2, 3}, "subset is not {2,3}");
  require(w->subgroup_generators == std::vector<wk::Perm>{wk::Perm::parse("(0 1)(2 3)", 4)}, "subgroup generators");
  require(wk::witness_is_valid(h, g, *w), "witness does not validate");
  return "subset {2,3} (points 3,4 counted from 1), subgroup <(0 1)(2 3)>";
}

int cli_code(std::vector<std::string> args) {
  std::ostringstream out, err;
  return wk::run_cli(args, out, err);
}

std::string ac8() {
  const auto a5 = wk::cohopfian_verdict(wk::sequence_from_json(slurp(data("const-A5.json"))));
  require(a5.outcome == wk::Outcome::kNonCoHopfian && a5.theorem == 'C' && !a5.criterion.witnesses.empty(),
          "constant A5");
  const auto psl = wk::cohopfian_verdict(wk::sequence_from_json(slurp(data("distinct-psl2.json"))));
  require(psl.outcome == wk::Outcome::kCoHopfian && psl.theorem == 'D', "distinct minimal simple terms");
  const auto mixed = wk::cohopfian_verdict(wk::sequence_from_json(slurp(data("a6-then-psl2.json"))));
  require(mixed.outcome == wk::Outcome::kUnknown, "non-minimal prefix");
  const int c1 = cli_code({"cohopf", data("const-A5.json")});
  const int c2 = cli_code({"cohopf", data("distinct-psl2.json")});
  const int c3 = cli_code({"cohopf", data("a6-then-psl2.json")});
  require(c1 == 0 && c2 == 0 && c3 == 2,
          "exit codes " + std::to_string(c1) + "/" + std::to_string(c2) + "/" + std::to_string(c3));
  return "non-co-Hopfian / co-Hopfian / unknown, exit codes 0/0/2";
}

wk::TowerElement random_element(const wk::Tower& t, std::mt19937_64& rng) {
  const auto& gens = t.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), len(0, 8);
  wk::TowerElement x = t.identity();
  for (std::size_t i = len(rng); i > 0; --i) x = t.compose(x, gens[pick(rng)]);
  return x;
}

std::string ac9() {
  std::mt19937_64 rng(9);
  std::uint64_t samples = 0;
  for (const char* spec : {"ia:C2,C3,S3", "pa:S3,C2,C2", "ia:C2,C2,C2,C2,C2", "pa:A5,C2"}) {
    const wk::Tower t = wk::parse_tower(spec);
    std::uniform_int_distribution<std::uint64_t> point(0, t.degree_u64() - 1);
    for (int s = 0; s < 10'000; ++s, ++samples) {
      const auto a = random_element(t, rng), b = random_element(t, rng);
      const auto x = t.point_at(point(rng));
      require(t.act(t.act(x, a), b) == t.act(x, t.compose(a, b)), std::string(spec) + ": action axiom");
      require(t.act(x, t.identity()) == x, std::string(spec) + ": identity");
    }
    require(t.is_transitive(), std::string(spec) + ": transitivity");
  }
  for (const char* spec : {"ia:C2,C3", "pa:C2,C2,C2", "pa:S3,C2", "ia:C2,C2,C3"}) {
    const wk::Tower t = wk::parse_tower(spec);
    const wk::PermGroup flat = t.flatten();
    require(wk::Count::of(flat.order().convert_to<std::uint64_t>()) == t.order(), std::string(spec) + ": faithfulness");
    require(flat.is_transitive(), std::string(spec) + ": flattened transitivity");
  }
  const wk::PermGroup c2 = wk::parse_group("C2"), c3 = wk::parse_group("C3");
  const auto a = wk::ia_into_pa({c2, c2, c3}, 2);
  const auto d = wk::compose(wk::compose(wk::identity_embedding(a.embedding.source), a.embedding),
                             wk::identity_embedding(a.embedding.target));
  wk::VerifyOptions vo;
  vo.exhaustive_limit = 0;
  vo.samples = 10'000;
  require(wk::pembedding_verify(d, vo).pass(), "composite embedding");
  samples += vo.samples;
  for (const auto& s : {wk::make_sequence({}, {"C2"}), wk::make_sequence({"A6"}, {"A5"}),
                        wk::make_sequence({"C3", "S3"}, {"C2", "C4"}), wk::make_sequence({}, {"A5", "S4"}),
                        wk::make_sequence({}, {}, wk::FamilyTail::kPSL2TwoToP),
                        wk::make_sequence({"A5"}, {}, wk::FamilyTail::kPSL2Prime)})
    require(wk::almost_all_recur(s).holds == wk::eventually_subgroup_criterion(s).holds,
            "criterion and recurrence disagree");
  return std::to_string(samples) + " random samples, 4 faithful towers, 6 sequences; 0 failures";
}

struct Criterion {
  int id;
  double limit_ms;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{{1, 1000, ac1}, {2, 1000, ac2}, {3, 2000, ac3},
                                        {4, 1000, ac4}, {5, 1000, ac5}, {6, 5000, ac6},
                                        {7, 100, ac7},  {8, 2000, ac8}, {9, 60000, ac9}};
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ok && ms > c.limit_ms) {
      ok = false;
      detail += " (over time limit)";
    }
    failures += !ok;
    std::printf("AC%d %s  %.1f ms (limit %.0f ms)  %s\n", c.id, ok ? "PASS" : "FAIL", ms, c.limit_ms, detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
