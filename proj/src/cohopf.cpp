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

#include "wreathkit/cohopf.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "wreathkit/error.hpp"
#include "wreathkit/structure.hpp"

namespace wreathkit {

namespace {

// The i-th prime (0-based) satisfying `keep`.
std::uint64_t nth_prime(std::size_t i, bool (*keep)(std::uint64_t)) {
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p) || !keep(p)) continue;
    if (i-- == 0) return p;
  }
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (r > (std::uint64_t{1} << 62) / base) throw CapExceeded("family term too large to describe");
    r *= base;
  }
  return r;
}

}  // namespace

std::string to_string(FamilyTail f) {
  switch (f) {
    case FamilyTail::kNone: return "none";
    case FamilyTail::kPSL2TwoToP: return "PSL2_2^p";
    case FamilyTail::kPSL2ThreeToP: return "PSL2_3^p";
    case FamilyTail::kPSL2Prime: return "PSL2_p";
    case FamilyTail::kSuzuki: return "Sz_2^p";
  }
  return "none";
}

FamilyTail parse_family_tail(std::string_view text) {
  for (auto f : {FamilyTail::kNone, FamilyTail::kPSL2TwoToP, FamilyTail::kPSL2ThreeToP, FamilyTail::kPSL2Prime,
                 FamilyTail::kSuzuki})
    if (text == to_string(f)) return f;
  throw ParseError("unknown family '" + std::string(text) + "'");
}

std::string family_term_spec(FamilyTail f, std::size_t i) {
  switch (f) {
    case FamilyTail::kPSL2TwoToP:
      return "PSL2_" + std::to_string(checked_power(2, nth_prime(i, [](std::uint64_t) { return true; }))) + ":proj";
    case FamilyTail::kPSL2ThreeToP:
      return "PSL2_" + std::to_string(checked_power(3, nth_prime(i, [](std::uint64_t p) { return p > 2; }))) + ":proj";
    case FamilyTail::kPSL2Prime:
      return "PSL2_" + std::to_string(nth_prime(i, [](std::uint64_t p) { return p > 3 && (p * p + 1) % 5 == 0; })) +
             ":proj";
    case FamilyTail::kSuzuki: {
      const auto q = checked_power(2, nth_prime(i, [](std::uint64_t p) { return p > 2; }));
      if (q > (std::uint64_t{1} << 31)) throw CapExceeded("family term too large to describe");
      return "Sz_" + std::to_string(q);
    }
    case FamilyTail::kNone: break;
  }
  throw PreconditionError("sequence has no family tail");
}

CatalogEntry SequenceSpec::term(std::size_t k) const {
  if (k == 0) throw PreconditionError("sequence terms are numbered from 1");
  if (k <= prefix.size()) return prefix[k - 1];
  const std::size_t i = k - prefix.size() - 1;
  if (periodic()) {
    if (tail.empty()) throw PreconditionError("sequence has an empty tail");
    return tail[i % tail.size()];
  }
  return catalog_lookup(family_term_spec(family, i));
}

namespace {

CatalogEntry checked_term(const std::string& spec) {
  CatalogEntry e = catalog_lookup(spec);
  if (e.order == 1) throw PreconditionError("sequence term '" + spec + "' is trivial");
  if (!e.transitive) throw PreconditionError("sequence term '" + spec + "' is not transitive");
  return e;
}

}  // namespace

SequenceSpec make_sequence(const std::vector<std::string>& prefix, const std::vector<std::string>& tail,
                           FamilyTail family, std::optional<std::size_t> n0) {
  SequenceSpec s;
  for (const auto& t : prefix) s.prefix.push_back(checked_term(t));
  for (const auto& t : tail) s.tail.push_back(checked_term(t));
  s.family = family;
  s.n0 = n0;
  if (family != FamilyTail::kNone && !tail.empty()) throw PreconditionError("sequence: give either a tail or a family");
  if (family == FamilyTail::kNone && tail.empty()) throw PreconditionError("sequence: the tail is empty");
  if (n0 && *n0 == 0) throw PreconditionError("sequence: n0 is 1-based");
  return s;
}

SequenceSpec sequence_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("sequence: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError("sequence: expected an object");
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    if (j.contains(key))
      for (const auto& x : j[key]) {
        if (!x.is_string()) throw ParseError(std::string("sequence: `") + key + "` must hold strings");
        out.push_back(x.get<std::string>());
      }
    return out;
  };
  FamilyTail family = FamilyTail::kNone;
  if (j.contains("family") && !j["family"].is_null()) family = parse_family_tail(j["family"].get<std::string>());
  std::optional<std::size_t> n0;
  if (j.contains("n0") && !j["n0"].is_null()) {
    if (!j["n0"].is_number_unsigned()) throw ParseError("sequence: n0 must be a positive integer");
    n0 = j["n0"].get<std::size_t>();
  }
  return make_sequence(strings("prefix"), strings("tail"), family, n0);
}

Tristate embeds_in(const CatalogEntry& h, const CatalogEntry& g, const SearchLimits& limits) {
  if (h.spec == g.spec) return Tristate::kTrue;
  if (h.realized && g.realized && h.realized->same_generators(*g.realized)) return Tristate::kTrue;
  if (g.order % h.order != 0 || h.degree > g.degree) return Tristate::kFalse;
  // A minimal simple group has only soluble proper subgroups.
  if (h.minimal_simple && g.minimal_simple && h.order != g.order) return Tristate::kFalse;
  if (!h.realized || !g.realized) return Tristate::kUnknown;
  try {
    return perm_iso_to_subgroup(*h.realized, *g.realized, limits) ? Tristate::kTrue : Tristate::kFalse;
  } catch (const BudgetExceeded&) {
    return Tristate::kUnknown;
  }
}

CriterionResult eventually_subgroup_criterion(const SequenceSpec& spec, const SearchLimits& limits) {
  CriterionResult r;
  const std::size_t p = spec.prefix.size();
  if (!spec.periodic()) {
    r.holds = Tristate::kFalse;
    r.counterexample = p + 1;
    r.n0 = spec.n0.value_or(1);
    r.reason = "the " + to_string(spec.family) +
               " terms are pairwise distinct minimal simple groups, so none embeds in a later term";
    return r;
  }
  const std::size_t t = spec.tail.size();
  std::map<std::pair<std::string, std::string>, Tristate> cache;
  auto query = [&](const CatalogEntry& a, const CatalogEntry& b) {
    auto key = std::make_pair(a.spec, b.spec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache[key] = embeds_in(a, b, limits);
  };

  std::vector<std::optional<std::size_t>> target(p + t + 1);
  std::size_t minimal = 1;
  for (std::size_t j = 1; j <= p + t; ++j) {
    const CatalogEntry h = spec.term(j);
    const std::size_t last = j <= p ? p + t : j + t;
    for (std::size_t k = j + 1; k <= last && !target[j]; ++k)
      if (query(h, spec.term(k)) == Tristate::kTrue) target[j] = k;
    if (!target[j]) minimal = j + 1;
  }
  // Tail terms always recur, so the threshold never passes the first period.
  r.holds = Tristate::kTrue;
  r.n0 = std::max(minimal, spec.n0.value_or(1));
  if (spec.n0 && *spec.n0 < minimal)
    r.reason = "requested n0 = " + std::to_string(*spec.n0) + " is too small; using n0 = " + std::to_string(minimal) + ". ";
  for (std::size_t j = r.n0; j <= p + t; ++j)
    r.witnesses.push_back({j, *target[j], spec.term(j).spec, spec.term(*target[j]).spec});
  if (r.n0 > p + t) {
    // Requested threshold beyond the first period: report one tail period from there.
    for (std::size_t j = r.n0; j < r.n0 + t; ++j) {
      const std::size_t jj = p + 1 + (j - p - 1) % t;
      const std::size_t m = *target[jj] + (j - jj);
      r.witnesses.push_back({j, m, spec.term(j).spec, spec.term(m).spec});
    }
  }
  r.reason += "every term from n0 on is isomorphic to a subgroup of a later term; tail terms recur periodically";
  return r;
}

bool minimal_simple_filter(const PermGroup& g) {
  if (g.order() > 10'000) throw BudgetExceeded("minimal simple check: order above 10^4");
  return is_minimal_simple(g);
}

bool minimal_simple_filter(const CatalogEntry& term) {
  if (term.realized && term.order <= 10'000) return is_minimal_simple(*term.realized);
  if (term.family != SimpleFamily::kNone) return term.minimal_simple;
  throw BudgetExceeded("minimal simple check: '" + term.spec + "' is too large and has no family tag");
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kNonCoHopfian: return "non-co-Hopfian";
    case Outcome::kCoHopfian: return "co-Hopfian";
    case Outcome::kUnknown: return "unknown";
  }
  return "unknown";
}

Verdict cohopfian_verdict(const SequenceSpec& spec, const SearchLimits& limits) {
  Verdict v;
  v.criterion = eventually_subgroup_criterion(spec, limits);
  switch (v.criterion.holds) {
    case Tristate::kTrue:
      v.outcome = Outcome::kNonCoHopfian;
      v.theorem = 'C';
      v.justification = "criterion holds with n0 = " + std::to_string(v.criterion.n0);
      return v;
    case Tristate::kUnknown:
      v.justification = "criterion undecided: " + v.criterion.reason;
      return v;
    case Tristate::kFalse: break;
  }
  v.offending_term = v.criterion.counterexample;
  std::vector<CatalogEntry> terms = spec.prefix;
  if (spec.periodic()) {
    terms.insert(terms.end(), spec.tail.begin(), spec.tail.end());
  } else {
    terms.push_back(spec.term(spec.prefix.size() + 1));
  }
  for (const auto& term : terms) {
    bool minimal = false;
    try {
      minimal = minimal_simple_filter(term);
    } catch (const BudgetExceeded& ex) {
      v.justification = std::string("criterion fails; ") + ex.what();
      return v;
    }
    if (!minimal) {
      v.justification = "criterion fails but '" + term.spec + "' is not minimal simple, so no theorem applies";
      return v;
    }
  }
  v.outcome = Outcome::kCoHopfian;
  v.theorem = 'D';
  v.justification = "criterion fails and every term is minimal non-abelian simple";
  return v;
}

std::string to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["outcome"] = to_string(v.outcome);
  j["theorem"] = v.theorem ? nlohmann::ordered_json(std::string(1, *v.theorem)) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json w = nlohmann::ordered_json::object();
  if (v.outcome == Outcome::kNonCoHopfian) {
    w["n0"] = v.criterion.n0;
    w["m"] = nlohmann::ordered_json::array();
    for (const auto& t : v.criterion.witnesses)
      w["m"].push_back({{"j", t.j}, {"m", t.m}, {"source", t.source}, {"target", t.target}});
  } else if (v.offending_term) {
    w["term"] = *v.offending_term;
  }
  j["witnesses"] = w;
  j["justification"] = v.justification;
  return j.dump(2);
}

RecurrenceResult almost_all_recur(const SequenceSpec& spec, const SearchLimits& limits) {
  RecurrenceResult r;
  if (!spec.periodic()) {
    r.holds = Tristate::kFalse;
    for (std::size_t k = 1; k <= spec.prefix.size() + 1; ++k) r.finite_terms.push_back(k);
    return r;
  }
  r.holds = Tristate::kTrue;
  for (std::size_t j = 0; j < spec.prefix.size(); ++j) {
    const auto& h = spec.prefix[j];
    bool recurs = false;
    for (const auto& g : spec.tail) {
      if (h.spec == g.spec) recurs = true;
      else if (h.realized && g.realized && h.degree == g.degree && h.order == g.order) {
        try {
          recurs = actions_equivalent(*h.realized, *g.realized, limits).has_value();
        } catch (const BudgetExceeded&) {
          r.holds = Tristate::kUnknown;
        }
      }
      if (recurs) break;
    }
    if (!recurs) r.finite_terms.push_back(j + 1);
  }
  return r;
}

std::vector<std::string> universal_sequence(const std::vector<std::string>& reps, std::size_t length) {
  if (reps.empty()) throw PreconditionError("universal sequence: no representatives");
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t k = i + 1; k < reps.size(); ++k)
      if (reps[i] == reps[k]) throw PreconditionError("universal sequence: repeated representative " + reps[i]);
  std::vector<std::string> out;
  for (std::size_t block = 1; out.size() < length; ++block)
    for (std::size_t i = 0; i < std::min(block, reps.size()) && out.size() < length; ++i) out.push_back(reps[i]);
  return out;
}

}  // namespace wreathkit
