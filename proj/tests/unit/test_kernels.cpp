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

#include <gtest/gtest.h>

#include <random>

#include "wreathkit/kernels.hpp"

namespace wreathkit::kernels {
namespace {

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  for (Point i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

// Product-action image computed from the definition, one function at a time.
std::vector<Point> pa_oracle(const Perm& top, const std::vector<Perm>& bases, std::size_t omega) {
  const std::size_t d = top.degree();
  std::size_t size = 1;
  for (std::size_t i = 0; i < d; ++i) size *= omega;
  std::vector<Point> out(size);
  for (std::size_t index = 0; index < size; ++index) {
    std::vector<Point> f(d), g(d);
    std::size_t rest = index;
    for (std::size_t t = d; t-- > 0;) {
      f[t] = static_cast<Point>(rest % omega);
      rest /= omega;
    }
    for (std::size_t s = 0; s < d; ++s) g[top[s]] = bases[s][f[s]];
    std::size_t image = 0;
    for (std::size_t t = 0; t < d; ++t) image = image * omega + g[t];
    out[index] = static_cast<Point>(image);
  }
  return out;
}

TEST(Kernels, InducedProductActionMatchesDefinition) {
  std::mt19937_64 rng(3);
  for (auto [d, omega] : {std::pair<std::size_t, std::size_t>{4, 2}, {3, 3}, {12, 2}, {5, 4}}) {
    const Perm top = random_perm(d, rng);
    std::vector<Perm> bases;
    for (std::size_t i = 0; i < d; ++i) bases.push_back(random_perm(omega, rng));
    const auto expected = pa_oracle(top, bases, omega);
    EXPECT_EQ(induced_pa(top.images(), bases, omega, Exec::kSerial), expected);
    EXPECT_EQ(induced_pa(top.images(), bases, omega, Exec::kParallel), expected);
  }
}

TEST(Kernels, InducedImprimitiveMatchesDefinition) {
  std::mt19937_64 rng(4);
  for (auto [d, omega] : {std::pair<std::size_t, std::size_t>{3, 2}, {600, 5}, {4096, 3}}) {
    const Perm top = random_perm(d, rng);
    std::vector<Perm> bases;
    for (std::size_t i = 0; i < d; ++i) bases.push_back(random_perm(omega, rng));
    std::vector<Point> expected(d * omega);
    for (std::size_t e = 0; e < d; ++e)
      for (std::size_t w = 0; w < omega; ++w)
        expected[e * omega + w] = static_cast<Point>(top[static_cast<Point>(e)] * omega + bases[e][static_cast<Point>(w)]);
    EXPECT_EQ(induced_ia(top.images(), bases, omega, Exec::kSerial), expected);
    EXPECT_EQ(induced_ia(top.images(), bases, omega, Exec::kParallel), expected);
  }
}

TEST(Kernels, EquivarianceScanFindsFirstFailureInBothModes) {
  // Source: Z/n rotating n points; target: rotation of 2n points; gamma(d) = {d, d + n}.
  const std::size_t n = 3000;
  std::vector<Point> rot(n), rot2(2 * n);
  for (Point i = 0; i < n; ++i) rot[i] = static_cast<Point>((i + 1) % n);
  for (Point i = 0; i < 2 * n; ++i) rot2[i] = static_cast<Point>((i + 1) % n + (i >= n ? n : 0));
  SubsetTable gamma;
  gamma.offsets.push_back(0);
  for (Point d = 0; d < n; ++d) {
    gamma.values.push_back(d);
    gamma.values.push_back(static_cast<Point>(d + n));
    gamma.offsets.push_back(gamma.values.size());
  }
  std::vector<Perm> src{Perm(rot), Perm(rot)}, tgt{Perm(rot2), Perm(rot2)};
  EXPECT_FALSE(equivariance_scan(src, tgt, gamma, Exec::kSerial));
  EXPECT_FALSE(equivariance_scan(src, tgt, gamma, Exec::kParallel));

  // Break the second target at two points; the first failure is the smaller source point.
  std::vector<Point> broken = rot2;
  std::swap(broken[2500], broken[2700]);
  tgt[1] = Perm(broken);
  const auto s = equivariance_scan(src, tgt, gamma, Exec::kSerial);
  const auto p = equivariance_scan(src, tgt, gamma, Exec::kParallel);
  ASSERT_TRUE(s && p);
  EXPECT_EQ(s->pair, 1u);
  EXPECT_EQ(s->point, 2500u);
  EXPECT_EQ(p->pair, s->pair);
  EXPECT_EQ(p->point, s->point);
}

}  // namespace
}  // namespace wreathkit::kernels
