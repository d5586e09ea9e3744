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

#include "wreathkit/perm_group.hpp"

namespace wreathkit {

/// Families of minimal finite non-abelian simple groups.
enum class SimpleFamily { kNone, kPSL2Char2, kPSL2Char3, kPSL2Prime, kSuzuki, kPSL3Of3 };

std::string to_string(SimpleFamily f);

struct CatalogEntry {
  std::string spec;  ///< canonical spec, e.g. `PSL2_7:proj`
  std::string name;  ///< display name, e.g. `PSL2(7)`
  SimpleFamily family = SimpleFamily::kNone;
  BigInt order;
  std::size_t degree = 0;  ///< degree of the natural action
  bool simple = false;
  bool minimal_simple = false;
  bool transitive = true;
  std::optional<PermGroup> realized;  ///< absent for metadata-only entries
};

/// Parses a group spec:
///   C<n>[:reg]          cyclic group acting regularly
///   S<n>[:nat]          symmetric group, natural action
///   A<n>[:nat]          alternating group, natural action
///   PSL2_<q>[:proj]     PSL(2,q) on the projective line (q a prime power)
///   PSL2_7:fano         PSL(2,7) = GL(3,2) on the 7 points of the Fano plane
///   Sz_<q>, PSL3_3      metadata only
///   perm(<n>):<g>;<g>   explicit generators in cycle or image notation
/// Throws ParseError on malformed input.
CatalogEntry catalog_lookup(std::string_view spec, const GroupLimits& limits = {});

/// The realized group of a spec; throws PreconditionError for metadata-only
/// entries.
PermGroup parse_group(std::string_view spec, const GroupLimits& limits = {});

/// The entries listed by `wreathkit catalog`.
std::vector<CatalogEntry> catalog_entries();

/// Finite field GF(p^k) with elements encoded as base-p digit vectors of a
/// polynomial in a primitive root. Element 0 is zero, element 1 is one.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);
  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// A generator of the multiplicative group.
  std::uint32_t primitive() const { return exp_[1]; }

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> add_, neg_, exp_, log_;
};

/// q = p^k with p prime, as (p, k); nullopt otherwise.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

}  // namespace wreathkit
