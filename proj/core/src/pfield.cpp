// Copyright 2026 The matroidkit Authors.
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

#include "matroidkit/pfield.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace matroidkit {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("ring arithmetic overflow (multiplication)");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("ring arithmetic overflow (addition)");
  }
  return r;
}

std::int64_t checked_shl(std::int64_t a, int shift) {
  if (a == 0) return 0;
  if (shift >= 62) throw std::overflow_error("ring arithmetic overflow (shift)");
  const std::int64_t limit = std::int64_t{1} << (62 - shift);
  if (a >= limit || a <= -limit) {
    throw std::overflow_error("ring arithmetic overflow (shift)");
  }
  return a * (std::int64_t{1} << shift);
}

Atom normalize_dyadic(std::int64_t num, std::int64_t exp) {
  if (num == 0) return {};
  const int tz = std::countr_zero(static_cast<std::uint64_t>(num < 0 ? -num : num));
  num /= (std::int64_t{1} << tz);
  exp += tz;
  if (exp > INT32_MAX || exp < INT32_MIN) {
    throw std::overflow_error("dyadic exponent overflow");
  }
  return Atom{num, static_cast<std::int32_t>(exp)};
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw MalformedValue("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

// Splits "a,b,(c,d)" at top-level commas.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

}  // namespace

PartialField::PartialField(std::vector<Component> comps)
    : comps_(std::make_shared<const std::vector<Component>>(std::move(comps))) {
  if (comps_->empty() || comps_->size() > RingValue::kMaxComponents) {
    throw std::invalid_argument("partial field needs 1 to 4 components");
  }
}

PartialField::Component PartialField::make_gf(int q) {
  int p = 0;
  int k = 0;
  for (int cand = 2; cand <= q; ++cand) {
    if (!is_prime(cand)) continue;
    int v = q;
    int e = 0;
    while (v % cand == 0) {
      v /= cand;
      ++e;
    }
    if (v == 1 && e > 0) {
      p = cand;
      k = e;
      break;
    }
  }
  if (p == 0 || q > 9) {
    throw std::invalid_argument("GF(q) requires a prime power q <= 9, got " +
                                std::to_string(q));
  }
  Component c;
  c.kind = FieldKind::kGF;
  c.q = q;
  c.p = p;
  c.add.assign(q * q, 0);
  c.mul.assign(q * q, 0);
  c.neg.assign(q, 0);
  c.inv.assign(q, 0);

  // Elements are polynomials over GF(p) of degree < k, coded base p.
  auto digits = [&](int code) {
    std::array<int, 4> d{};
    for (int i = 0; i < k; ++i) {
      d[i] = code % p;
      code /= p;
    }
    return d;
  };
  auto encode = [&](const std::array<int, 4>& d) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * p + d[i];
    return code;
  };
  // Monic irreducible modulus x^k + m_{k-1} x^{k-1} + ... + m_0; for k <= 3
  // irreducible is equivalent to having no root in GF(p).
  std::array<int, 4> modulus{};
  if (k > 1) {
    bool found = false;
    for (int code = 0; code < q && !found; ++code) {
      const auto m = digits(code);
      bool has_root = false;
      for (int x = 0; x < p && !has_root; ++x) {
        int val = 1;
        for (int i = 0; i < k; ++i) val = (val * x) % p;  // x^k
        int pw = 1;
        for (int i = 0; i < k; ++i) {
          val = (val + m[i] * pw) % p;
          pw = (pw * x) % p;
        }
        has_root = (val == 0);
      }
      if (!has_root) {
        modulus = m;
        found = true;
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::array<int, 4> dn{};
    for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    c.neg[a] = static_cast<std::uint8_t>(encode(dn));
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::array<int, 4> ds{};
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      c.add[a * q + b] = static_cast<std::uint8_t>(encode(ds));
      std::array<int, 8> prod{};
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      for (int deg = 2 * k - 2; deg >= k; --deg) {
        const int coef = prod[deg];
        if (coef == 0) continue;
        prod[deg] = 0;
        for (int i = 0; i < k; ++i) {
          prod[deg - k + i] = ((prod[deg - k + i] - coef * modulus[i]) % p + p) % p;
        }
      }
      std::array<int, 4> dm{};
      for (int i = 0; i < k; ++i) dm[i] = prod[i];
      c.mul[a * q + b] = static_cast<std::uint8_t>(encode(dm));
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (c.mul[a * q + b] == 1) c.inv[a] = static_cast<std::uint8_t>(b);
    }
  }
  return c;
}

PartialField PartialField::gf(int q) { return PartialField({make_gf(q)}); }

PartialField PartialField::regular() {
  Component c;
  c.kind = FieldKind::kRegular;
  return PartialField({c});
}

PartialField PartialField::dyadic() {
  Component c;
  c.kind = FieldKind::kDyadic;
  return PartialField({c});
}

PartialField PartialField::product(const std::vector<PartialField>& factors) {
  std::vector<Component> comps;
  for (const auto& f : factors) {
    comps.insert(comps.end(), f.comps_->begin(), f.comps_->end());
  }
  if (comps.size() < 2) {
    throw std::invalid_argument("product partial field needs at least two factors");
  }
  return PartialField(std::move(comps));
}

PartialField PartialField::parse(std::string_view name) {
  name = trim(name);
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  std::string_view s = lower;
  if (s == "regular") return regular();
  if (s == "dyadic") return dyadic();
  if (s.starts_with("gf")) {
    return gf(static_cast<int>(parse_int(s.substr(2))));
  }
  if (s.starts_with("product(") && s.ends_with(")")) {
    std::vector<PartialField> factors;
    for (auto part : split_top_level(s.substr(8, s.size() - 9))) {
      factors.push_back(parse(part));
    }
    return product(factors);
  }
  throw std::invalid_argument("unknown partial field '" + std::string(name) + "'");
}

std::string PartialField::name() const {
  auto one_name = [](const Component& c) -> std::string {
    switch (c.kind) {
      case FieldKind::kGF: return "gf" + std::to_string(c.q);
      case FieldKind::kRegular: return "regular";
      case FieldKind::kDyadic: return "dyadic";
    }
    return "?";
  };
  if (comps_->size() == 1) return one_name(comps_->front());
  std::string out = "product(";
  for (std::size_t i = 0; i < comps_->size(); ++i) {
    if (i) out += ',';
    out += one_name((*comps_)[i]);
  }
  return out + ")";
}

bool PartialField::is_finite() const {
  return std::all_of(comps_->begin(), comps_->end(),
                     [](const Component& c) { return c.kind == FieldKind::kGF; });
}

std::int64_t PartialField::ring_size() const {
  if (!is_finite()) throw std::logic_error(name() + " is not finite");
  std::int64_t n = 1;
  for (const auto& c : *comps_) n *= c.q;
  return n;
}

RingValue PartialField::zero() const { return RingValue(components()); }

RingValue PartialField::one() const { return from_int(1); }

RingValue PartialField::from_int(std::int64_t v) const {
  RingValue out(components());
  for (int i = 0; i < components(); ++i) {
    const auto& c = (*comps_)[i];
    if (c.kind == FieldKind::kGF) {
      // Integers map through the prime subfield.
      const std::int64_t r = ((v % c.p) + c.p) % c.p;
      out[i] = Atom{r, 0};
    } else if (c.kind == FieldKind::kRegular) {
      out[i] = Atom{v, 0};
    } else {
      out[i] = normalize_dyadic(v, 0);
    }
  }
  return out;
}

Atom PartialField::add_atom(const Component& c, const Atom& a, const Atom& b) const {
  if (c.kind == FieldKind::kGF) {
    return Atom{c.add[a.num * c.q + b.num], 0};
  }
  if (c.kind == FieldKind::kRegular) return Atom{checked_add(a.num, b.num), 0};
  if (a.num == 0) return b;
  if (b.num == 0) return a;
  const std::int32_t e = std::min(a.exp, b.exp);
  const std::int64_t na = checked_shl(a.num, a.exp - e);
  const std::int64_t nb = checked_shl(b.num, b.exp - e);
  return normalize_dyadic(checked_add(na, nb), e);
}

Atom PartialField::mul_atom(const Component& c, const Atom& a, const Atom& b) const {
  if (c.kind == FieldKind::kGF) {
    return Atom{c.mul[a.num * c.q + b.num], 0};
  }
  if (c.kind == FieldKind::kRegular) return Atom{checked_mul(a.num, b.num), 0};
  if (a.num == 0 || b.num == 0) return {};
  return normalize_dyadic(checked_mul(a.num, b.num),
                          static_cast<std::int64_t>(a.exp) + b.exp);
}

Atom PartialField::neg_atom(const Component& c, const Atom& a) const {
  if (c.kind == FieldKind::kGF) return Atom{c.neg[a.num], 0};
  return Atom{-a.num, a.exp};
}

RingValue PartialField::add(const RingValue& a, const RingValue& b) const {
  RingValue out(components());
  for (int i = 0; i < components(); ++i) out[i] = add_atom((*comps_)[i], a[i], b[i]);
  return out;
}

RingValue PartialField::sub(const RingValue& a, const RingValue& b) const {
  return add(a, neg(b));
}

RingValue PartialField::neg(const RingValue& a) const {
  RingValue out(components());
  for (int i = 0; i < components(); ++i) out[i] = neg_atom((*comps_)[i], a[i]);
  return out;
}

RingValue PartialField::mul(const RingValue& a, const RingValue& b) const {
  RingValue out(components());
  for (int i = 0; i < components(); ++i) out[i] = mul_atom((*comps_)[i], a[i], b[i]);
  return out;
}

bool PartialField::is_zero(const RingValue& a) const {
  for (int i = 0; i < components(); ++i) {
    if (a[i].num != 0) return false;
  }
  return true;
}

std::optional<RingValue> PartialField::inverse(const RingValue& a) const {
  RingValue out(components());
  for (int i = 0; i < components(); ++i) {
    const auto& c = (*comps_)[i];
    const Atom& x = a[i];
    if (x.num == 0) return std::nullopt;
    switch (c.kind) {
      case FieldKind::kGF: out[i] = Atom{c.inv[x.num], 0}; break;
      case FieldKind::kRegular:
        if (x.num != 1 && x.num != -1) return std::nullopt;
        out[i] = x;
        break;
      case FieldKind::kDyadic:
        if (x.num != 1 && x.num != -1) return std::nullopt;
        out[i] = Atom{x.num, -x.exp};
        break;
    }
  }
  return out;
}

std::optional<RingValue> PartialField::divide(const RingValue& a, const RingValue& b) const {
  RingValue out(components());
  for (int i = 0; i < components(); ++i) {
    const auto& c = (*comps_)[i];
    const Atom& x = a[i];
    const Atom& y = b[i];
    if (y.num == 0) return std::nullopt;
    if (c.kind == FieldKind::kGF) {
      out[i] = Atom{c.mul[x.num * c.q + c.inv[y.num]], 0};
      continue;
    }
    if (x.num == 0) {
      out[i] = Atom{};
      continue;
    }
    if (x.num % y.num != 0) return std::nullopt;
    if (c.kind == FieldKind::kRegular) {
      out[i] = Atom{x.num / y.num, 0};
      continue;
    }
    // Odd parts must divide; powers of two are units of Z[1/2].
    out[i] = normalize_dyadic(x.num / y.num, static_cast<std::int64_t>(x.exp) - y.exp);
  }
  return out;
}

bool PartialField::in_group(const RingValue& a) const {
  for (int i = 0; i < components(); ++i) {
    const auto& c = (*comps_)[i];
    const Atom& x = a[i];
    if (x.num == 0) return false;
    if (c.kind != FieldKind::kGF && x.num != 1 && x.num != -1) return false;
  }
  return true;
}

bool PartialField::contains(const RingValue& a) const {
  return is_zero(a) || in_group(a);
}

bool PartialField::atom_well_formed(const Component& c, const Atom& a) const {
  switch (c.kind) {
    case FieldKind::kGF: return a.exp == 0 && a.num >= 0 && a.num < c.q;
    case FieldKind::kRegular: return a.exp == 0;
    case FieldKind::kDyadic:
      return (a.num == 0 && a.exp == 0) || (a.num % 2 != 0);
  }
  return false;
}

bool PartialField::well_formed(const RingValue& a) const {
  if (a.components() != components()) return false;
  for (int i = 0; i < components(); ++i) {
    if (!atom_well_formed((*comps_)[i], a[i])) return false;
  }
  return true;
}

void PartialField::validate(const RingValue& a) const {
  if (!well_formed(a)) {
    throw MalformedValue("value is not a well-formed element of " + name());
  }
}

Atom PartialField::parse_atom(const Component& c, std::string_view text) const {
  text = trim(text);
  if (c.kind == FieldKind::kGF) {
    const std::int64_t v = parse_int(text);
    if (c.q == c.p) return Atom{((v % c.p) + c.p) % c.p, 0};
    if (v < 0 || v >= c.q) {
      throw MalformedValue("GF(" + std::to_string(c.q) + ") element code out of range: " +
                           std::string(text));
    }
    return Atom{v, 0};
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_int(text.substr(0, slash));
    den = parse_int(text.substr(slash + 1));
  } else {
    num = parse_int(text);
  }
  if (den <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(den))) {
    throw MalformedValue("denominator must be a positive power of two: " +
                         std::string(text));
  }
  const Atom a = normalize_dyadic(num, -std::countr_zero(static_cast<std::uint64_t>(den)));
  if (c.kind == FieldKind::kRegular && a.exp < 0) {
    throw MalformedValue("regular partial field values are integers: " + std::string(text));
  }
  if (c.kind == FieldKind::kRegular) return Atom{checked_shl(a.num, a.exp), 0};
  return a;
}

std::string PartialField::format_atom(const Component& c, const Atom& a) const {
  if (c.kind != FieldKind::kDyadic || a.exp == 0) return std::to_string(a.num);
  if (a.exp > 0) return std::to_string(checked_shl(a.num, a.exp));
  return std::to_string(a.num) + "/" + std::to_string(std::int64_t{1} << (-a.exp));
}

RingValue PartialField::parse_value(std::string_view text) const {
  text = trim(text);
  RingValue out(components());
  if (components() == 1) {
    out[0] = parse_atom(comps_->front(), text);
    return out;
  }
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw MalformedValue("product values are written '(v1,v2,...)': " + std::string(text));
  }
  const auto parts = split_top_level(text.substr(1, text.size() - 2));
  if (static_cast<int>(parts.size()) != components()) {
    throw MalformedValue("wrong number of product coordinates in " + std::string(text));
  }
  for (int i = 0; i < components(); ++i) out[i] = parse_atom((*comps_)[i], parts[i]);
  return out;
}

std::string PartialField::format(const RingValue& a) const {
  validate(a);
  if (components() == 1) return format_atom(comps_->front(), a[0]);
  std::string out = "(";
  for (int i = 0; i < components(); ++i) {
    if (i) out += ',';
    out += format_atom((*comps_)[i], a[i]);
  }
  return out + ")";
}

std::vector<RingValue> PartialField::elements() const {
  const std::int64_t total = ring_size();
  std::vector<RingValue> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t code = 0; code < total; ++code) {
    RingValue v(components());
    std::int64_t rest = code;
    for (int i = 0; i < components(); ++i) {
      const int q = (*comps_)[i].q;
      v[i] = Atom{rest % q, 0};
      rest /= q;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<RingValue> PartialField::group_elements() const {
  std::vector<RingValue> out;
  for (const auto& v : elements()) {
    if (in_group(v)) out.push_back(v);
  }
  return out;
}

RingValue PartialField::det_value(std::span<const RingValue> entries, int n) const {
  if (n < 0 || static_cast<std::size_t>(n) * n != entries.size()) {
    throw std::invalid_argument("determinant of a non-square array");
  }
  if (n == 0) return one();
  if (n > 16) throw std::invalid_argument("determinant size limit is 16");
  if (n == 1) return entries[0];
  // Laplace expansion along successive rows, memoised over column subsets:
  // minor[S] = det(rows 0..|S|-1, columns S). Valid over any commutative ring.
  std::vector<RingValue> minor(std::size_t{1} << n, zero());
  minor[0] = one();
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int k = std::popcount(mask);
    const int row = k - 1;
    RingValue acc = zero();
    bool any = false;
    int pos = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++pos) {
      const int col = std::countr_zero(rest);
      const RingValue& a = entries[row * n + col];
      const std::uint32_t sub = mask & ~(1U << col);
      if (is_zero(a) || is_zero(minor[sub])) continue;
      RingValue term = mul(a, minor[sub]);
      if (((row + pos) & 1) != 0) term = neg(term);
      acc = any ? add(acc, term) : term;
      any = true;
    }
    minor[mask] = any ? acc : zero();
  }
  return minor[full];
}

PartialField::DetResult PartialField::det(std::span<const RingValue> entries, int n) const {
  DetResult r;
  r.value = det_value(entries, n);
  r.member = contains(r.value);
  return r;
}

PartialField::DetResult PartialField::det(
    const std::vector<std::vector<RingValue>>& rows) const {
  const int n = static_cast<int>(rows.size());
  std::vector<RingValue> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("determinant of a non-square array");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return det(flat, n);
}

}  // namespace matroidkit
