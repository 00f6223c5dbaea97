// Copyright 2026 The phrfog Authors
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

// Pairing-group interface.  The construction is written against a symmetric
// pairing e : G x G -> GT; the only production-grade curves are asymmetric,
// so this layer keeps the symmetric *style* while tagging every source
// element with the side it lives on.  pair() accepts its arguments in either
// order and fails with a typed error when both fall on the same side.
//
// Fixed placement on BLS12-381 (documented once, used everywhere):
//   side A (G1, 48-byte compressed): g1, h1 = g1^b1, C1, E, the D_j key
//     components, the C'_y / C'_vk leaf components, and every hash output
//     (hash_to_group maps into side A).
//   side B (G2, 96-byte compressed): g2, h2 = g2^b2, D, the D'_j key
//     components, and the C_y / C_vk leaf components.
// Every pairing the scheme evaluates therefore has one side-A and one side-B
// argument.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "phrfog/bytes.hpp"
#include "phrfog/result.hpp"
#include "phrfog/rng.hpp"

// Internal backend types (intentionally not part of the public surface).
namespace phrfog::bls {
struct Fp12;
}

namespace phrfog {

enum class Side : std::uint8_t { kA = 0, kB = 1 };

inline const char* side_name(Side s) { return s == Side::kA ? "A" : "B"; }

// Serialized width of a compressed source element on each side.
constexpr std::size_t element_bytes(Side s) {
  return s == Side::kA ? 48u : 96u;
}
constexpr std::size_t kScalarBytes = 32;
constexpr std::size_t kTargetBytes = 576;

// An element of the scalar field Z_r (r = the prime group order), the field
// the paper calls Z_p.  Canonical encoding: 32 big-endian bytes < r.
class Scalar {
 public:
  Scalar() = default;  // zero

  static Scalar zero() { return Scalar{}; }
  static Scalar one();
  static Scalar from_u64(std::uint64_t v);
  // Rejects non-canonical encodings (>= r).
  static std::optional<Scalar> from_bytes(std::span<const std::uint8_t> in);
  std::array<std::uint8_t, kScalarBytes> to_bytes() const;

  bool is_zero() const;

  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator-() const;
  // Multiplicative inverse; nullopt for zero.
  std::optional<Scalar> inverse() const;

  bool operator==(const Scalar&) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Backend escape hatch (opaque limb storage, Montgomery form).
  std::array<std::uint64_t, 4> raw() const { return v_; }
  static Scalar from_raw(const std::array<std::uint64_t, 4>& v);

 private:
  std::array<std::uint64_t, 4> v_{};
};

// Uniform scalar via rejection sampling (top bit masked, redraw on >= r).
Scalar random_scalar(RandomSource& rng);

// Element of GT = the order-r subgroup of Fp12*.  Inversion is conjugation,
// valid because every element reachable through this API has order dividing
// r (pairing outputs, their products and powers, and validated decodings).
class TargetElement {
 public:
  TargetElement();  // identity

  static TargetElement identity();
  bool is_identity() const;

  TargetElement operator*(const TargetElement&) const;
  TargetElement exp(const Scalar&) const;
  TargetElement inverse() const;

  bool operator==(const TargetElement&) const;
  bool operator!=(const TargetElement& o) const { return !(*this == o); }

  Bytes to_bytes() const;  // 12 base-field coefficients, 576 bytes
  // Validates field encodings and order-r subgroup membership.
  static Result<TargetElement> from_bytes(std::span<const std::uint8_t> in);

 private:
  friend struct GroupOps;
  // Fp12 value flattened to opaque limbs to keep backend headers private.
  std::array<std::uint64_t, 72> v_;
};

// A point in G1 (side A) or G2 (side B), stored affine and compressed on the
// wire.  The identity is representable and serializable.
class SourceElement {
 public:
  SourceElement();  // side-A identity

  static SourceElement identity(Side side);
  static SourceElement generator(Side side);

  Side side() const { return side_; }
  bool is_identity() const;

  // Group operation and exponentiation (multiplicative notation, matching
  // the construction's write-up).
  Result<SourceElement> mul(const SourceElement& other) const;
  SourceElement exp(const Scalar& k) const;
  SourceElement inverse() const;

  bool operator==(const SourceElement&) const;
  bool operator!=(const SourceElement& o) const { return !(*this == o); }

  Bytes to_bytes() const;  // element_bytes(side()) bytes, compressed
  // Validates flags, coordinates, curve and subgroup membership.
  static Result<SourceElement> from_bytes(Side side,
                                          std::span<const std::uint8_t> in);

 private:
  friend struct GroupOps;
  Side side_ = Side::kA;
  bool inf_ = true;
  // Affine coordinates as opaque limbs: side A uses x_[0..5], y_[0..5];
  // side B additionally x_[6..11], y_[6..11] for the quadratic coefficients.
  std::array<std::uint64_t, 12> x_{};
  std::array<std::uint64_t, 12> y_{};
};

// e(a, b) for one side-A and one side-B argument, in either order.
Result<TargetElement> pair(const SourceElement& a, const SourceElement& b);

// e(a1, b1) * e(a2, b2)^-1 with one shared final exponentiation — the
// workhorse of decryption.  Same side rules as pair(), and (a1, b1) must be
// on the same sides as (a2, b2) respectively.
Result<TargetElement> pair_ratio(const SourceElement& a1,
                                 const SourceElement& b1,
                                 const SourceElement& a2,
                                 const SourceElement& b2);

// Deterministic hash onto side A; never returns the identity.  `domain`
// separates unrelated uses; the empty label is valid.
SourceElement hash_to_group(std::string_view domain,
                            std::span<const std::uint8_t> label);

inline SourceElement hash_to_group(std::string_view domain,
                                   std::string_view label) {
  return hash_to_group(
      domain, std::span<const std::uint8_t>(
                  reinterpret_cast<const std::uint8_t*>(label.data()),
                  label.size()));
}

// Process-wide count of Miller-loop evaluations (each pair() costs two for
// ratios, one otherwise).  Tests use this to prove which paths pair.
std::uint64_t pairing_op_count();
void reset_pairing_op_count();

// Names the concrete instantiation so serialized artifacts can be checked
// against the curve they were produced for.
struct GroupDescriptor {
  std::string curve;
  std::string side_a;  // human-readable description of G1
  std::string side_b;  // and of G2
  std::uint32_t security_bits;
  std::array<std::uint8_t, 32> order_be;  // group order r, big-endian

  static const GroupDescriptor& bls12_381();
  bool operator==(const GroupDescriptor& o) const {
    return curve == o.curve && order_be == o.order_be;
  }
};

}  // namespace phrfog
