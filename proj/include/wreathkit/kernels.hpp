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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wreathkit/perm.hpp"

// Data-parallel kernels behind tower flattening and embedding verification.
// Each kernel has a plain serial reference and an OpenMP implementation that
// must agree with it exactly.
namespace wreathkit::kernels {

enum class Exec { kSerial, kParallel };

/// Next imprimitive level: point e*|Omega| + w maps to top[e]*|Omega| + bases[e][w].
std::vector<Point> induced_ia(std::span<const Point> top, std::span<const Perm> bases, std::size_t omega,
                              Exec exec = Exec::kParallel);

/// Next product-action level. A point is a function f on 0..D-1 (D = top.size())
/// with values in 0..|Omega|-1, indexed by sum f(t) |Omega|^(D-1-t); its image
/// has value bases[s][f(s)] at position top[s].
std::vector<Point> induced_pa(std::span<const Point> top, std::span<const Perm> bases, std::size_t omega,
                              Exec exec = Exec::kParallel);

/// Point-to-subset table in compressed rows: row d is
/// values[offsets[d] .. offsets[d+1]), sorted.
struct SubsetTable {
  std::vector<std::uint64_t> offsets;
  std::vector<Point> values;
  std::size_t rows() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const Point> row(std::size_t d) const {
    return {values.data() + offsets[d], values.data() + offsets[d + 1]};
  }
};

struct EquivarianceFailure {
  std::size_t pair = 0;
  Point point = 0;
};

/// Checks gamma(d^x) = gamma(d)^y for every pair (x, y) = (source[i], target[i])
/// and every source point d. Returns the failure with the smallest (i, d).
std::optional<EquivarianceFailure> equivariance_scan(std::span<const Perm> source, std::span<const Perm> target,
                                                     const SubsetTable& gamma, Exec exec = Exec::kParallel);

/// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace wreathkit::kernels
