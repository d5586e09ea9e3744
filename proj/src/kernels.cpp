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

#include "wreathkit/kernels.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

#include "wreathkit/error.hpp"

namespace wreathkit::kernels {
namespace {

constexpr std::int64_t kParallelThreshold = 2048;

void check_bases(std::span<const Point> top, std::span<const Perm> bases, std::size_t omega) {
  if (bases.size() != top.size()) throw PreconditionError("kernel: one base element per top point required");
  for (const auto& b : bases)
    if (b.degree() != omega) throw PreconditionError("kernel: base element on the wrong domain");
}

std::size_t pa_size(std::size_t omega, std::size_t d) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > std::numeric_limits<Point>::max() / omega) throw CapExceeded("kernel: product-action level too large");
    n *= omega;
  }
  return n;
}

std::vector<Point> induced_pa_serial(std::span<const Point> top, std::span<const Perm> bases, std::size_t omega) {
  const std::size_t d = top.size();
  const std::size_t n = pa_size(omega, d);
  std::vector<Point> out(n);
  std::vector<Point> f(d), g(d);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t t = d; t-- > 0;) {
      f[t] = static_cast<Point>(rest % omega);
      rest /= omega;
    }
    for (std::size_t s = 0; s < d; ++s) g[top[s]] = bases[s][f[s]];
    std::size_t image = 0;
    for (std::size_t t = 0; t < d; ++t) image = image * omega + g[t];
    out[idx] = static_cast<Point>(image);
  }
  return out;
}

std::vector<Point> induced_pa_parallel(std::span<const Point> top, std::span<const Perm> bases,
                                       std::size_t omega) {
  const std::size_t d = top.size();
  const std::size_t n = pa_size(omega, d);
  std::vector<std::uint64_t> weight(d);
  {
    std::vector<std::uint64_t> place(d);
    std::uint64_t w = 1;
    for (std::size_t t = d; t-- > 0;) {
      place[t] = w;
      w *= omega;
    }
    for (std::size_t s = 0; s < d; ++s) weight[s] = place[top[s]];
  }
  std::vector<Point> out(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (count > kParallelThreshold)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = static_cast<std::uint64_t>(idx);
    std::uint64_t image = 0;
    for (std::size_t s = d; s-- > 0;) {
      image += weight[s] * bases[s][static_cast<Point>(rest % omega)];
      rest /= omega;
    }
    out[static_cast<std::size_t>(idx)] = static_cast<Point>(image);
  }
  return out;
}

bool row_matches(const SubsetTable& gamma, const Perm& x, const Perm& y, Point d, std::vector<Point>& scratch) {
  auto from = gamma.row(d);
  auto to = gamma.row(x[d]);
  if (from.size() != to.size()) return false;
  scratch.assign(from.begin(), from.end());
  for (auto& v : scratch) v = y[v];
  std::sort(scratch.begin(), scratch.end());
  return std::equal(scratch.begin(), scratch.end(), to.begin());
}

}  // namespace

std::vector<Point> induced_ia(std::span<const Point> top, std::span<const Perm> bases, std::size_t omega,
                              Exec exec) {
  check_bases(top, bases, omega);
  const std::size_t n = top.size() * omega;
  if (n > std::numeric_limits<Point>::max()) throw CapExceeded("kernel: imprimitive level too large");
  std::vector<Point> out(n);
  if (exec == Exec::kSerial) {
    for (std::size_t e = 0; e < top.size(); ++e)
      for (std::size_t w = 0; w < omega; ++w)
        out[e * omega + w] = static_cast<Point>(top[e] * omega + bases[e][static_cast<Point>(w)]);
    return out;
  }
  const auto count = static_cast<std::int64_t>(top.size());
#pragma omp parallel for schedule(static) if (count > kParallelThreshold)
  for (std::int64_t e = 0; e < count; ++e) {
    const auto base = static_cast<std::size_t>(e) * omega;
    const auto image = static_cast<std::size_t>(top[static_cast<std::size_t>(e)]) * omega;
    const auto images = bases[static_cast<std::size_t>(e)].images();
    for (std::size_t w = 0; w < omega; ++w) out[base + w] = static_cast<Point>(image + images[w]);
  }
  return out;
}

std::vector<Point> induced_pa(std::span<const Point> top, std::span<const Perm> bases, std::size_t omega,
                              Exec exec) {
  check_bases(top, bases, omega);
  return exec == Exec::kSerial ? induced_pa_serial(top, bases, omega) : induced_pa_parallel(top, bases, omega);
}

std::optional<EquivarianceFailure> equivariance_scan(std::span<const Perm> source, std::span<const Perm> target,
                                                     const SubsetTable& gamma, Exec exec) {
  if (source.size() != target.size()) throw PreconditionError("equivariance scan: unpaired elements");
  const std::size_t points = gamma.rows();
  if (exec == Exec::kSerial) {
    std::vector<Point> scratch;
    for (std::size_t i = 0; i < source.size(); ++i)
      for (Point d = 0; d < points; ++d)
        if (!row_matches(gamma, source[i], target[i], d, scratch)) return EquivarianceFailure{i, d};
    return std::nullopt;
  }
  const auto total = static_cast<std::int64_t>(source.size() * points);
  std::int64_t first = total;
#pragma omp parallel if (total > kParallelThreshold)
  {
    std::vector<Point> scratch;
    std::int64_t local = total;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
      if (k >= local) continue;
      const auto i = static_cast<std::size_t>(k) / points;
      const auto d = static_cast<Point>(static_cast<std::size_t>(k) % points);
      if (!row_matches(gamma, source[i], target[i], d, scratch)) local = k;
    }
#pragma omp critical(wreathkit_equivariance_first)
    first = std::min(first, local);
  }
  if (first == total) return std::nullopt;
  return EquivarianceFailure{static_cast<std::size_t>(first) / points,
                             static_cast<Point>(static_cast<std::size_t>(first) % points)};
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace wreathkit::kernels
