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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wreathkit/catalog.hpp"
#include "wreathkit/perm_iso.hpp"

namespace wreathkit {

/// Infinite families of pairwise distinct minimal simple groups usable as a
/// sequence tail. Term i is built from the i-th admissible prime p.
enum class FamilyTail {
  kNone,
  kPSL2TwoToP,    ///< PSL2(2^p), p prime
  kPSL2ThreeToP,  ///< PSL2(3^p), p odd prime
  kPSL2Prime,     ///< PSL2(p), p > 3 prime with 5 | p^2 + 1
  kSuzuki,        ///< Sz(2^p), p odd prime
};

std::string to_string(FamilyTail f);
FamilyTail parse_family_tail(std::string_view text);
/// Spec of term i (0-based) of a family.
std::string family_term_spec(FamilyTail f, std::size_t i);

/// A sequence given by a finite prefix followed either by a tail repeated
/// forever or by the terms of a family. Terms are numbered from 1.
struct SequenceSpec {
  std::vector<CatalogEntry> prefix;
  std::vector<CatalogEntry> tail;
  FamilyTail family = FamilyTail::kNone;
  std::optional<std::size_t> n0;

  bool periodic() const { return family == FamilyTail::kNone; }
  CatalogEntry term(std::size_t k) const;
};

/// Throws PreconditionError for trivial or intransitive terms, or when the
/// sequence has neither a tail nor a family.
SequenceSpec make_sequence(const std::vector<std::string>& prefix, const std::vector<std::string>& tail,
                           FamilyTail family = FamilyTail::kNone, std::optional<std::size_t> n0 = std::nullopt);
/// `{ "prefix": [specs], "tail": [specs], "family": name, "n0": int }`;
/// prefix, family and n0 are optional.
SequenceSpec sequence_from_json(std::string_view text);

enum class Tristate { kFalse, kTrue, kUnknown };

/// Whether term j (1-based) is permutationally isomorphic to a subgroup of
/// term m.
struct TermWitness {
  std::size_t j = 0;
  std::size_t m = 0;
  std::string source;
  std::string target;
};

struct CriterionResult {
  Tristate holds = Tristate::kUnknown;
  /// Smallest threshold that works (or the requested one, if larger).
  std::size_t n0 = 1;
  /// For every j from n0 to the end of the first tail period, the earliest
  /// later term containing it.
  std::vector<TermWitness> witnesses;
  /// A term from which no later term is reached.
  std::optional<std::size_t> counterexample;
  std::string reason;
};

/// Decides whether some n0 exists with every term from n0 on isomorphic to
/// a subgroup of a later term. For a periodic tail one later occurrence in
/// the tail suffices; for a family tail the terms are pairwise distinct
/// minimal simple groups, none of which embeds in another.
CriterionResult eventually_subgroup_criterion(const SequenceSpec& spec, const SearchLimits& limits = {});

/// Term comparison used by the criterion: kTrue/kFalse when decided by
/// identity, metadata or search, kUnknown when a budget ran out or the
/// groups are metadata only.
Tristate embeds_in(const CatalogEntry& h, const CatalogEntry& g, const SearchLimits& limits = {});

/// Realized groups up to order 10^4 are checked by brute force, others
/// through their family tag. Throws BudgetExceeded when neither applies.
bool minimal_simple_filter(const CatalogEntry& term);
bool minimal_simple_filter(const PermGroup& g);

enum class Outcome { kNonCoHopfian, kCoHopfian, kUnknown };
std::string to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::kUnknown;
  std::optional<char> theorem;  ///< 'C' or 'D'
  std::string justification;
  CriterionResult criterion;
  std::optional<std::size_t> offending_term;
};

Verdict cohopfian_verdict(const SequenceSpec& spec, const SearchLimits& limits = {});
std::string to_json(const Verdict& v);

/// Whether all but finitely many terms occur infinitely often, comparing
/// terms up to equivalence of their actions. Returns the prefix indices whose
/// term never recurs.
struct RecurrenceResult {
  Tristate holds = Tristate::kUnknown;
  std::vector<std::size_t> finite_terms;
};
RecurrenceResult almost_all_recur(const SequenceSpec& spec, const SearchLimits& limits = {});

/// The block sequence X_1; X_1,X_2; X_1,X_2,X_3; ... truncated to `length`
/// terms, with blocks capped at reps.size().
std::vector<std::string> universal_sequence(const std::vector<std::string>& reps, std::size_t length);

}  // namespace wreathkit
