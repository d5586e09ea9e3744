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

#include "wreathkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wreathkit/error.hpp"

namespace wreathkit {

Domain::Domain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("Domain: labels must be pairwise distinct");
}

Domain Domain::range(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return Domain(std::move(labels));
}

std::optional<Point> Domain::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Point>(it - labels_.begin());
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) throw PreconditionError("Perm: images do not form a bijection");
    seen[y] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) throw PreconditionError("Perm: cycle point " + std::to_string(x) + " outside degree " + std::to_string(degree));
      if (used[x]) throw PreconditionError("Perm: point repeated across cycles");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

namespace {

std::vector<Point> parse_numbers(std::string_view body) {
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (c == ' ' || c == ',' || c == '\t') {
      ++i;
      continue;
    }
    if (c < '0' || c > '9') throw ParseError("permutation: unexpected character '" + std::string(1, c) + "'");
    std::uint64_t v = 0;
    while (i < body.size() && body[i] >= '0' && body[i] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(body[i] - '0');
      if (v > 0xffffffffull) throw ParseError("permutation: point out of range");
      ++i;
    }
    out.push_back(static_cast<Point>(v));
  }
  return out;
}

}  // namespace

Perm Perm::parse(std::string_view text, std::size_t degree) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("permutation: empty text");
  text.remove_prefix(first);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);

  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("permutation: unterminated image list");
    auto images = parse_numbers(text.substr(1, text.size() - 2));
    if (images.size() != degree)
      throw ParseError("permutation: image list has " + std::to_string(images.size()) + " entries, expected " + std::to_string(degree));
    try {
      return Perm(std::move(images));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }

  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("permutation: expected '(' in cycle notation");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("permutation: unterminated cycle");
    auto cycle = parse_numbers(text.substr(i + 1, close - i - 1));
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = rhs.images_[images_[x]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

Perm Perm::conjugate_by(const Perm& c) const { return c.inverse() * *this * c; }

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles()) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::string Perm::to_image_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool cycle_type_contains(std::span<const std::size_t> whole, std::span<const std::size_t> part) {
  std::vector<std::size_t> rest(whole.begin(), whole.end());
  for (std::size_t len : part) {
    auto it = std::find(rest.begin(), rest.end(), len);
    if (it == rest.end()) return false;
    rest.erase(it);
  }
  return true;
}

}  // namespace wreathkit
