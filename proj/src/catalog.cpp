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

#include "wreathkit/catalog.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "wreathkit/error.hpp"

namespace wreathkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

std::string to_string(SimpleFamily f) {
  switch (f) {
    case SimpleFamily::kNone: return "none";
    case SimpleFamily::kPSL2Char2: return "PSL2(2^p)";
    case SimpleFamily::kPSL2Char3: return "PSL2(3^p)";
    case SimpleFamily::kPSL2Prime: return "PSL2(p)";
    case SimpleFamily::kSuzuki: return "Sz(2^p)";
    case SimpleFamily::kPSL3Of3: return "PSL3(3)";
  }
  return "none";
}

// ---------------------------------------------------------------------------
// FiniteField

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  auto pk = prime_power(q);
  if (!pk) throw PreconditionError("GF(" + std::to_string(q) + "): not a prime power");
  p_ = pk->first;
  k_ = pk->second;

  auto digits = [&](std::uint32_t a) {
    std::vector<std::uint32_t> d(k_);
    for (auto& x : d) {
      x = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  add_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<std::uint32_t> dn(k_);
    for (std::uint32_t i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn);
    for (std::uint32_t b = 0; b < q_; ++b) {
      auto db = digits(b);
      for (std::uint32_t i = 0; i < k_; ++i) db[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(db);
    }
  }

  // Search the monic polynomials of degree k for one whose root x generates
  // the multiplicative group; x^i is then the exponential table.
  for (std::uint32_t tail = 0; tail < q_; ++tail) {
    auto c = digits(tail);  // x^k = -(c_0 + c_1 x + ... + c_{k-1} x^{k-1})
    if (k_ > 1 && c[0] == 0) continue;
    std::vector<std::uint32_t> power(k_, 0);
    if (k_ == 1) {
      power[0] = (p_ - c[0]) % p_;  // the root itself
    } else {
      power[1] = 1;
    }
    std::vector<std::uint32_t> exp(q_ - 1);
    std::vector<bool> seen(q_, false);
    bool primitive = true;
    std::vector<std::uint32_t> cur(k_, 0);
    cur[0] = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      std::uint32_t e = encode(cur);
      if (e == 0 || seen[e]) {
        primitive = false;
        break;
      }
      seen[e] = true;
      exp[i] = e;
      // cur *= x
      if (k_ == 1) {
        cur[0] = cur[0] * power[0] % p_;
      } else {
        std::uint32_t top = cur[k_ - 1];
        for (std::uint32_t j = k_ - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        for (std::uint32_t j = 0; j < k_; ++j) cur[j] = (cur[j] + top * ((p_ - c[j]) % p_)) % p_;
      }
    }
    if (!primitive || encode(cur) != 1) continue;
    exp_ = std::move(exp);
    log_.assign(q_, 0);
    for (std::uint32_t i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;
    return;
  }
  throw Error("GF(" + std::to_string(q) + "): no primitive polynomial found");
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("GF: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

// ---------------------------------------------------------------------------
// Realizations

namespace {

PermGroup cyclic_regular(std::size_t n) {
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> c(n);
  for (Point i = 0; i < n; ++i) c[i] = i;
  return PermGroup(n, {Perm::from_cycles(n, {c})});
}

PermGroup symmetric(std::size_t n) {
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup(2, {Perm::from_cycles(2, {{0, 1}})});
  std::vector<Point> c(n);
  for (Point i = 0; i < n; ++i) c[i] = i;
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {c})});
}

PermGroup alternating(std::size_t n) {
  if (n < 3) return PermGroup::trivial(n);
  if (n == 3) return PermGroup(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  std::vector<Point> c;
  for (Point i = (n % 2 == 1) ? 0 : 1; i < n; ++i) c.push_back(i);
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1, 2}}), Perm::from_cycles(n, {c})});
}

// Möbius maps x -> x+1, x -> z^2 x and x -> -1/x on GF(q) + {inf}; inf is q.
PermGroup psl2_projective(std::uint32_t q) {
  FiniteField f(q);
  const Point inf = q;
  std::vector<Point> shift(q + 1), scale(q + 1), invert(q + 1);
  const std::uint32_t z2 = f.mul(f.primitive(), f.primitive());
  for (std::uint32_t x = 0; x < q; ++x) {
    shift[x] = f.add(x, 1);
    scale[x] = f.mul(z2, x);
    invert[x] = x == 0 ? inf : f.neg(f.inv(x));
  }
  shift[inf] = inf;
  scale[inf] = inf;
  invert[inf] = 0;
  std::vector<Perm> gens{Perm(shift)};
  Perm s(scale);
  if (!s.is_identity()) gens.push_back(s);
  gens.emplace_back(invert);
  return PermGroup(q + 1, std::move(gens));
}

// GL(3,2) acting on the nonzero row vectors 1..7 by v -> vM.
PermGroup psl2_7_fano() {
  auto act = [](const std::array<unsigned, 3>& rows) {
    std::vector<Point> images(7);
    for (unsigned v = 1; v < 8; ++v) {
      unsigned w = 0;
      for (unsigned i = 0; i < 3; ++i)
        if (v >> i & 1u) w ^= rows[i];
      images[v - 1] = w - 1;
    }
    return Perm(images);
  };
  // Companion matrix of x^3 + x + 1 (a Singer cycle) and an elementary transvection.
  Perm singer = act({0b010, 0b100, 0b011});
  Perm transvection = act({0b011, 0b010, 0b100});
  return PermGroup(7, {singer, transvection});
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

SimpleFamily psl2_family(std::uint32_t p, std::uint32_t k) {
  if (p == 2 && is_prime(k)) return SimpleFamily::kPSL2Char2;
  if (p == 3 && k > 2 && is_prime(k)) return SimpleFamily::kPSL2Char3;
  if (k == 1 && p > 3 && (std::uint64_t{p} * p + 1) % 5 == 0) return SimpleFamily::kPSL2Prime;
  return SimpleFamily::kNone;
}

std::uint64_t parse_uint(std::string_view text, std::string_view spec) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("group spec '" + std::string(spec) + "': expected a number, got '" + std::string(text) + "'");
  return v;
}

constexpr std::size_t kRealizeDegree = 64;

}  // namespace

CatalogEntry catalog_lookup(std::string_view spec, const GroupLimits& limits) {
  const std::string s(spec);
  CatalogEntry e;
  auto fail = [&](const std::string& why) { return ParseError("group spec '" + s + "': " + why); };

  if (s.rfind("perm(", 0) == 0) {
    auto close = s.find("):");
    if (close == std::string::npos) throw fail("expected perm(<n>):<generators>");
    auto n = parse_uint(std::string_view(s).substr(5, close - 5), s);
    if (n == 0) throw fail("degree must be positive");
    std::vector<Perm> gens;
    std::string_view rest = std::string_view(s).substr(close + 2);
    while (!rest.empty()) {
      auto semi = rest.find(';');
      auto token = rest.substr(0, semi);
      if (!token.empty()) gens.push_back(Perm::parse(token, n));
      if (semi == std::string_view::npos) break;
      rest.remove_prefix(semi + 1);
    }
    PermGroup g(n, std::move(gens), s, limits);
    e.spec = s;
    e.name = s;
    e.order = g.order();
    e.degree = n;
    e.transitive = g.is_transitive();
    e.realized = std::move(g);
    return e;
  }

  std::string head = s, action;
  if (auto colon = s.find(':'); colon != std::string::npos) {
    head = s.substr(0, colon);
    action = s.substr(colon + 1);
  }
  auto require_action = [&](std::initializer_list<const char*> allowed, const char* canonical) {
    if (action.empty()) action = canonical;
    for (const char* a : allowed)
      if (action == a) return;
    throw fail("unknown action '" + action + "'");
  };

  if (head.size() > 1 && (head[0] == 'C' || head[0] == 'S' || head[0] == 'A') && std::isdigit(static_cast<unsigned char>(head[1]))) {
    const auto n = parse_uint(std::string_view(head).substr(1), s);
    if (n == 0) throw fail("degree must be positive");
    if (n > 1'000'000) throw fail("degree too large");
    const char kind = head[0];
    if (kind == 'C') {
      require_action({"reg"}, "reg");
      e.name = "C" + std::to_string(n);
      e.order = n;
      e.simple = is_prime(n);
      e.realized = cyclic_regular(n);
    } else if (kind == 'S') {
      require_action({"nat"}, "nat");
      e.name = "Sym(" + std::to_string(n) + ")";
      e.order = factorial(n);
      e.simple = n == 2;
      e.realized = symmetric(n);
    } else {
      require_action({"nat"}, "nat");
      e.name = "Alt(" + std::to_string(n) + ")";
      e.order = n < 2 ? BigInt(1) : factorial(n) / 2;
      e.simple = n == 3 || n >= 5;
      if (n == 5) {
        e.family = SimpleFamily::kPSL2Char2;  // Alt(5) = PSL(2,4)
        e.minimal_simple = true;
      }
      e.realized = alternating(n);
    }
    e.spec = head + ":" + action;
    e.degree = n;
    e.transitive = e.realized->is_transitive();
    e.realized = e.realized->with_spec(e.spec);
    return e;
  }

  if (head.rfind("PSL2_", 0) == 0) {
    const auto q = parse_uint(std::string_view(head).substr(5), s);
    auto pk = prime_power(q);
    if (!pk) throw fail("q must be a prime power");
    if (q < 4) throw fail("PSL(2,q) is only catalogued for q >= 4");
    require_action({"proj", "fano"}, "proj");
    if (action == "fano" && q != 7) throw fail("the fano action exists only for q = 7");
    e.spec = head + ":" + action;
    e.name = "PSL2(" + std::to_string(q) + ")";
    e.order = BigInt(q) * (BigInt(q) * q - 1) / (q % 2 == 1 ? 2 : 1);
    e.degree = action == "fano" ? 7 : q + 1;
    e.simple = true;
    e.family = psl2_family(pk->first, pk->second);
    if (q == 4) e.family = SimpleFamily::kPSL2Char2;
    e.minimal_simple = e.family != SimpleFamily::kNone;
    const bool metadata_only = pk->first == 3 && pk->second > 2;  // the PSL2(3^p) family
    if (action == "fano") {
      e.realized = psl2_7_fano().with_spec(e.spec);
    } else if (e.degree <= kRealizeDegree && !metadata_only) {
      e.realized = psl2_projective(static_cast<std::uint32_t>(q)).with_spec(e.spec);
    }
    return e;
  }

  if (head.rfind("Sz_", 0) == 0) {
    const auto q = parse_uint(std::string_view(head).substr(3), s);
    auto pk = prime_power(q);
    if (!pk || pk->first != 2 || pk->second % 2 == 0) throw fail("Sz(q) needs q = 2^(2m+1)");
    if (!action.empty() && action != "nat") throw fail("unknown action '" + action + "'");
    e.spec = head;
    e.name = "Sz(" + std::to_string(q) + ")";
    e.order = BigInt(q) * q * (BigInt(q) * q + 1) * (q - 1);
    e.degree = q * q + 1;
    e.simple = true;
    e.family = is_prime(pk->second) ? SimpleFamily::kSuzuki : SimpleFamily::kNone;
    e.minimal_simple = e.family != SimpleFamily::kNone;
    return e;
  }

  if (head == "PSL3_3") {
    if (!action.empty() && action != "proj") throw fail("unknown action '" + action + "'");
    e.spec = head;
    e.name = "PSL3(3)";
    e.order = 5616;
    e.degree = 13;
    e.simple = true;
    e.family = SimpleFamily::kPSL3Of3;
    e.minimal_simple = true;
    return e;
  }

  throw fail("unknown group");
}

PermGroup parse_group(std::string_view spec, const GroupLimits& limits) {
  auto e = catalog_lookup(spec, limits);
  if (!e.realized) throw PreconditionError("group spec '" + std::string(spec) + "' is catalogued as metadata only");
  return *e.realized;
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const char* spec : {"C2:reg", "C3:reg", "S3:nat", "S4:nat", "A4:nat", "A5:nat", "A6:nat", "PSL2_7:proj",
                           "PSL2_7:fano", "PSL2_8:proj", "PSL2_13:proj", "PSL2_27:proj", "PSL2_32:proj", "Sz_8",
                           "Sz_32", "PSL3_3"})
    out.push_back(catalog_lookup(spec));
  return out;
}

}  // namespace wreathkit
