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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wreathkit {

using Point = std::uint32_t;

/// An ordered finite point set. Points are the indices 0..size-1; labels are
/// kept only for presentation.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<std::string> labels);

  /// Domain {0, ..., n-1} labelled by the decimal indices.
  static Domain range(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Point p) const { return labels_.at(p); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Point> index_of(std::string_view label) const;

  bool operator==(const Domain&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// A permutation of {0, ..., n-1}, acting on the right: x^(p*q) = (x^p)^q.
class Perm {
 public:
  Perm() = default;
  /// Validates that `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// Builds a permutation from cycles; points not mentioned are fixed.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  /// Parses cycle notation `(0 1)(2 3)` or one-line notation `[1,0,3,2]`.
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  /// First *this, then rhs.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  /// Conjugate by c: c^-1 * this * c.
  Perm conjugate_by(const Perm& c) const;

  bool is_identity() const;
  std::uint64_t order() const;
  /// Sorted cycle lengths, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  std::vector<std::vector<Point>> cycles() const;

  std::string to_cycle_string() const;
  std::string to_image_string() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// True when the multiset `part` is contained in the multiset `whole`
/// (both sorted).
bool cycle_type_contains(std::span<const std::size_t> whole, std::span<const std::size_t> part);

}  // namespace wreathkit
