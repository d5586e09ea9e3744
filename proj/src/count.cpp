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

#include "wreathkit/count.hpp"

#include <cmath>
#include <sstream>

#include "wreathkit/error.hpp"

namespace wreathkit {

Count Count::of(std::uint64_t n) {
  if (n == 0) throw PreconditionError("Count::of: zero is not a count");
  Count c;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      c.factors_[p] += 1;
      n /= p;
    }
  }
  if (n > 1) c.factors_[n] += 1;
  return c;
}

Count Count::of_smooth(const BigInt& n, std::uint64_t prime_bound) {
  if (n <= 0) throw PreconditionError("Count::of_smooth: non-positive value");
  if (n <= std::numeric_limits<std::uint64_t>::max()) return of(static_cast<std::uint64_t>(n));
  Count c;
  BigInt rest = n;
  for (std::uint64_t p = 2; p <= prime_bound && rest > 1; ++p) {
    while (rest % p == 0) {
      c.factors_[p] += 1;
      rest /= p;
    }
  }
  if (rest != 1) {
    if (rest <= std::numeric_limits<std::uint64_t>::max()) return c * of(static_cast<std::uint64_t>(rest));
    throw PreconditionError("Count::of_smooth: value has a prime factor above the bound");
  }
  return c;
}

Count Count::pow(const BigInt& exponent) const {
  if (exponent < 0) throw PreconditionError("Count::pow: negative exponent");
  Count c;
  if (exponent == 0) return c;
  for (const auto& [p, e] : factors_) c.factors_[p] = e * exponent;
  return c;
}

Count Count::operator*(const Count& rhs) const {
  Count c = *this;
  c *= rhs;
  return c;
}

Count& Count::operator*=(const Count& rhs) {
  for (const auto& [p, e] : rhs.factors_) factors_[p] += e;
  return *this;
}

bool Count::divides(const Count& rhs) const {
  for (const auto& [p, e] : factors_) {
    auto it = rhs.factors_.find(p);
    if (it == rhs.factors_.end() || it->second < e) return false;
  }
  return true;
}

Count Count::cofactor_in(const Count& rhs) const {
  if (!divides(rhs)) throw PreconditionError("Count::cofactor_in: not a divisor");
  Count c = rhs;
  for (const auto& [p, e] : factors_) {
    auto it = c.factors_.find(p);
    it->second -= e;
    if (it->second == 0) c.factors_.erase(it);
  }
  return c;
}

double Count::log2() const {
  double total = 0.0;
  for (const auto& [p, e] : factors_) total += e.convert_to<double>() * std::log2(static_cast<double>(p));
  return total;
}

double Count::decimal_digits() const { return log2() * std::log10(2.0) + 1.0; }

std::optional<BigInt> Count::exact(std::size_t max_bits) const {
  if (log2() > static_cast<double>(max_bits)) return std::nullopt;
  BigInt value = 1;
  for (const auto& [p, e] : factors_) {
    BigInt base = p;
    value *= boost::multiprecision::pow(base, e.convert_to<unsigned>());
  }
  return value;
}

std::optional<std::uint64_t> Count::as_u64() const {
  if (log2() >= 64.0) return std::nullopt;
  auto v = exact(64);
  if (!v || *v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return static_cast<std::uint64_t>(*v);
}

std::string Count::factored() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string Count::to_string(std::size_t max_digits) const {
  if (decimal_digits() <= static_cast<double>(max_digits)) {
    if (auto v = exact(static_cast<std::size_t>(max_digits * 3.33) + 64)) return v->str();
  }
  return factored();
}

}  // namespace wreathkit
