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

#ifndef MATROIDKIT_PFIELD_HPP_
#define MATROIDKIT_PFIELD_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matroidkit {

/// Thrown when a ring value is malformed for the partial field it is used
/// with, or a string does not parse.
class MalformedValue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One coordinate of a ring value.
///
/// GF(q): `num` is the element code in [0, q) and `exp` is 0.
/// Regular/Dyadic: the value num * 2^exp with num odd (or the pair (0, 0)).
struct Atom {
  std::int64_t num = 0;
  std::int32_t exp = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// An exact value of the ambient ring of a PartialField. Product fields
/// carry one Atom per factor.
class RingValue {
 public:
  static constexpr int kMaxComponents = 4;

  RingValue() = default;
  explicit RingValue(int components) : size_(static_cast<std::uint8_t>(components)) {}

  int components() const { return size_; }
  const Atom& operator[](int i) const { return atoms_[i]; }
  Atom& operator[](int i) { return atoms_[i]; }

  friend bool operator==(const RingValue&, const RingValue&) = default;
  friend auto operator<=>(const RingValue&, const RingValue&) = default;

 private:
  std::array<Atom, kMaxComponents> atoms_{};
  std::uint8_t size_ = 0;
};

enum class FieldKind { kGF, kRegular, kDyadic };

/// A partial field (R, G): ring arithmetic on R plus the membership test
/// for G ∪ {0}.
///
/// Supported: GF(q) for q in {2,3,4,5,7,8,9}; the regular partial field
/// (Z, {±1}); the dyadic partial field (Z[1/2], {±2^k}); and direct
/// products of these. Values are immutable and cheap to copy.
class PartialField {
 public:
  static PartialField gf(int q);
  static PartialField regular();
  static PartialField dyadic();
  static PartialField product(const std::vector<PartialField>& factors);
  /// Accepts "gf2".."gf9", "regular", "dyadic", "product(gf2,gf3)".
  static PartialField parse(std::string_view name);

  std::string name() const;
  int components() const { return static_cast<int>(comps_->size()); }
  FieldKind kind(int component) const { return (*comps_)[component].kind; }
  /// Field order of a GF component, 0 otherwise.
  int order(int component) const { return (*comps_)[component].q; }
  bool is_finite() const;
  /// Number of ring elements when finite.
  std::int64_t ring_size() const;

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(std::int64_t v) const;

  RingValue add(const RingValue& a, const RingValue& b) const;
  RingValue sub(const RingValue& a, const RingValue& b) const;
  RingValue neg(const RingValue& a) const;
  RingValue mul(const RingValue& a, const RingValue& b) const;
  bool is_zero(const RingValue& a) const;
  /// Multiplicative inverse in R, if a is a unit of R.
  std::optional<RingValue> inverse(const RingValue& a) const;
  /// The exact quotient a / b in R, if one exists.
  std::optional<RingValue> divide(const RingValue& a, const RingValue& b) const;

  /// a ∈ G ∪ {0}.
  bool contains(const RingValue& a) const;
  /// a ∈ G.
  bool in_group(const RingValue& a) const;

  /// Throws MalformedValue unless a is a well-formed element of R.
  void validate(const RingValue& a) const;
  bool well_formed(const RingValue& a) const;

  RingValue parse_value(std::string_view text) const;
  std::string format(const RingValue& a) const;

  /// Every element of R, in code order. Finite fields only.
  std::vector<RingValue> elements() const;
  /// Every element of G. Finite fields only.
  std::vector<RingValue> group_elements() const;

  struct DetResult {
    RingValue value;
    bool member = false;
  };
  /// Determinant of the n×n row-major matrix `entries` together with the
  /// membership flag. The 0×0 determinant is 1.
  DetResult det(std::span<const RingValue> entries, int n) const;
  DetResult det(const std::vector<std::vector<RingValue>>& rows) const;
  /// Determinant value only.
  RingValue det_value(std::span<const RingValue> entries, int n) const;

  friend bool operator==(const PartialField& a, const PartialField& b) {
    return a.name() == b.name();
  }

 private:
  struct Component {
    FieldKind kind = FieldKind::kGF;
    int q = 0;
    int p = 0;
    std::vector<std::uint8_t> add;
    std::vector<std::uint8_t> mul;
    std::vector<std::uint8_t> neg;
    std::vector<std::uint8_t> inv;
  };

  explicit PartialField(std::vector<Component> comps);
  static Component make_gf(int q);

  Atom add_atom(const Component& c, const Atom& a, const Atom& b) const;
  Atom mul_atom(const Component& c, const Atom& a, const Atom& b) const;
  Atom neg_atom(const Component& c, const Atom& a) const;
  bool atom_well_formed(const Component& c, const Atom& a) const;
  Atom parse_atom(const Component& c, std::string_view text) const;
  std::string format_atom(const Component& c, const Atom& a) const;

  std::shared_ptr<const std::vector<Component>> comps_;
};

}  // namespace matroidkit

#endif  // MATROIDKIT_PFIELD_HPP_
