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
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreathkit {

using BigInt = boost::multiprecision::cpp_int;

/// An exact positive integer kept in factored form, so that tower degrees
/// such as 2^65536 and orders such as 2^65559 stay representable and
/// printable without expanding them.
class Count {
 public:
  /// The number one.
  Count() = default;

  /// Factors `n` by trial division. `n` must be positive.
  static Count of(std::uint64_t n);

  /// Factors `n` assuming every prime factor is at most `prime_bound`.
  /// Throws PreconditionError if a larger factor remains.
  static Count of_smooth(const BigInt& n, std::uint64_t prime_bound);

  Count pow(const BigInt& exponent) const;
  Count operator*(const Count& rhs) const;
  Count& operator*=(const Count& rhs);
  bool operator==(const Count& rhs) const = default;

  bool is_one() const { return factors_.empty(); }
  bool divides(const Count& rhs) const;
  /// rhs / *this; requires divides(rhs).
  Count cofactor_in(const Count& rhs) const;

  /// Upper-bound estimate of log2 of the value.
  double log2() const;
  /// Estimated number of decimal digits.
  double decimal_digits() const;

  /// Exact value when it has at most `max_bits` bits.
  std::optional<BigInt> exact(std::size_t max_bits = 1u << 16) const;
  /// Value as uint64 when it fits.
  std::optional<std::uint64_t> as_u64() const;

  /// Exact decimal when at most `max_digits` digits, else `p^e * q^f`.
  std::string to_string(std::size_t max_digits = 10000) const;
  /// Always the factored form, e.g. `2^7 * 3`.
  std::string factored() const;

  const std::map<std::uint64_t, BigInt>& factors() const { return factors_; }

 private:
  std::map<std::uint64_t, BigInt> factors_;  // prime -> exponent (> 0)
};

}  // namespace wreathkit
