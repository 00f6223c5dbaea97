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

#include "phrfog/group.hpp"

#include <sodium.h>

#include <bit>

#include <cstring>

#include "bls/pairing.hpp"

namespace phrfog {

namespace {

bls::Fr fr_of(const std::array<std::uint64_t, 4>& v) {
  bls::Fr f;
  f.v = v;
  return f;
}

}  // namespace

// Conversions between the opaque public-layer storage and backend types.
struct GroupOps {
  static bls::Fr fr(const Scalar& s) { return fr_of(s.raw()); }

  static bls::G1Affine g1(const SourceElement& e) {
    bls::G1Affine a;
    a.inf = e.inf_;
    std::memcpy(a.x.v.data(), e.x_.data(), 6 * 8);
    std::memcpy(a.y.v.data(), e.y_.data(), 6 * 8);
    return a;
  }

  static bls::G2Affine g2(const SourceElement& e) {
    bls::G2Affine a;
    a.inf = e.inf_;
    std::memcpy(a.x.c0.v.data(), e.x_.data(), 6 * 8);
    std::memcpy(a.x.c1.v.data(), e.x_.data() + 6, 6 * 8);
    std::memcpy(a.y.c0.v.data(), e.y_.data(), 6 * 8);
    std::memcpy(a.y.c1.v.data(), e.y_.data() + 6, 6 * 8);
    return a;
  }

  static SourceElement from_g1(const bls::G1Affine& a) {
    SourceElement e;
    e.side_ = Side::kA;
    e.inf_ = a.inf;
    std::memcpy(e.x_.data(), a.x.v.data(), 6 * 8);
    std::memcpy(e.y_.data(), a.y.v.data(), 6 * 8);
    return e;
  }

  static SourceElement from_g2(const bls::G2Affine& a) {
    SourceElement e;
    e.side_ = Side::kB;
    e.inf_ = a.inf;
    std::memcpy(e.x_.data(), a.x.c0.v.data(), 6 * 8);
    std::memcpy(e.x_.data() + 6, a.x.c1.v.data(), 6 * 8);
    std::memcpy(e.y_.data(), a.y.c0.v.data(), 6 * 8);
    std::memcpy(e.y_.data() + 6, a.y.c1.v.data(), 6 * 8);
    return e;
  }

  static bls::Fp12 gt(const TargetElement& e) {
    static_assert(sizeof(bls::Fp12) == sizeof(e.v_));
    return std::bit_cast<bls::Fp12>(e.v_);
  }

  static TargetElement from_gt(const bls::Fp12& f) {
    TargetElement e;
    e.v_ = std::bit_cast<std::array<std::uint64_t, 72>>(f);
    return e;
  }
};

// ---- Scalar -----------------------------------------------------------------

Scalar Scalar::one() { return from_raw(bls::Fr::one().v); }

Scalar Scalar::from_u64(std::uint64_t v) {
  return from_raw(bls::Fr::from_u64(v).v);
}

Scalar Scalar::from_raw(const std::array<std::uint64_t, 4>& v) {
  Scalar s;
  s.v_ = v;
  return s;
}

std::optional<Scalar> Scalar::from_bytes(std::span<const std::uint8_t> in) {
  if (in.size() != kScalarBytes) return std::nullopt;
  auto f = bls::Fr::from_bytes(in.data());
  if (!f) return std::nullopt;
  return from_raw(f->v);
}

std::array<std::uint8_t, kScalarBytes> Scalar::to_bytes() const {
  std::array<std::uint8_t, kScalarBytes> out;
  fr_of(v_).to_bytes(out.data());
  return out;
}

bool Scalar::is_zero() const { return fr_of(v_).is_zero(); }

Scalar Scalar::operator+(const Scalar& o) const {
  return from_raw((fr_of(v_) + fr_of(o.v_)).v);
}
Scalar Scalar::operator-(const Scalar& o) const {
  return from_raw((fr_of(v_) - fr_of(o.v_)).v);
}
Scalar Scalar::operator*(const Scalar& o) const {
  return from_raw((fr_of(v_) * fr_of(o.v_)).v);
}
Scalar Scalar::operator-() const { return from_raw((-fr_of(v_)).v); }

std::optional<Scalar> Scalar::inverse() const {
  if (is_zero()) return std::nullopt;
  return from_raw(bls::inverse(fr_of(v_)).v);
}

bool Scalar::operator==(const Scalar& o) const { return v_ == o.v_; }

Scalar random_scalar(RandomSource& rng) {
  // Rejection sampling: draw 255 bits until < r (acceptance ~ 0.91), which
  // keeps the distribution exactly uniform.
  std::uint8_t buf[kScalarBytes];
  for (;;) {
    rng.fill(buf, sizeof(buf));
    buf[0] &= 0x7F;  // big-endian: clear bit 255
    if (auto s = Scalar::from_bytes(std::span<const std::uint8_t>(buf, sizeof(buf)))) {
      return *s;
    }
  }
}

// ---- TargetElement ----------------------------------------------------------

TargetElement::TargetElement()
    : v_(std::bit_cast<std::array<std::uint64_t, 72>>(bls::Fp12::one())) {}

TargetElement TargetElement::identity() { return TargetElement(); }

bool TargetElement::is_identity() const { return GroupOps::gt(*this).is_one(); }

TargetElement TargetElement::operator*(const TargetElement& o) const {
  return GroupOps::from_gt(GroupOps::gt(*this) * GroupOps::gt(o));
}

TargetElement TargetElement::exp(const Scalar& k) const {
  return GroupOps::from_gt(bls::gt_pow(GroupOps::gt(*this), GroupOps::fr(k)));
}

TargetElement TargetElement::inverse() const {
  return GroupOps::from_gt(GroupOps::gt(*this).conjugate());
}

bool TargetElement::operator==(const TargetElement& o) const {
  return v_ == o.v_;
}

Bytes TargetElement::to_bytes() const {
  bls::Fp12 f = GroupOps::gt(*this);
  const bls::Fp* coeffs[12] = {
      &f.c0.c0.c0, &f.c0.c0.c1, &f.c0.c1.c0, &f.c0.c1.c1,
      &f.c0.c2.c0, &f.c0.c2.c1, &f.c1.c0.c0, &f.c1.c0.c1,
      &f.c1.c1.c0, &f.c1.c1.c1, &f.c1.c2.c0, &f.c1.c2.c1,
  };
  Bytes out(kTargetBytes);
  for (int i = 0; i < 12; ++i) coeffs[i]->to_bytes(out.data() + 48 * i);
  return out;
}

Result<TargetElement> TargetElement::from_bytes(
    std::span<const std::uint8_t> in) {
  if (in.size() != kTargetBytes) {
    return Result<TargetElement>::failure(Errc::kMalformed,
                                          "target element must be 576 bytes");
  }
  bls::Fp coeffs[12];
  for (int i = 0; i < 12; ++i) {
    auto c = bls::Fp::from_bytes(in.data() + 48 * i);
    if (!c) {
      return Result<TargetElement>::failure(
          Errc::kMalformed, "target element coefficient not canonical");
    }
    coeffs[i] = *c;
  }
  bls::Fp12 f{
      bls::Fp6{bls::Fp2{coeffs[0], coeffs[1]}, bls::Fp2{coeffs[2], coeffs[3]},
               bls::Fp2{coeffs[4], coeffs[5]}},
      bls::Fp6{bls::Fp2{coeffs[6], coeffs[7]}, bls::Fp2{coeffs[8], coeffs[9]},
               bls::Fp2{coeffs[10], coeffs[11]}},
  };
  if (f.is_zero() || pow_limbs(f, bls::kR) != bls::Fp12::one()) {
    return Result<TargetElement>::failure(Errc::kMalformed,
                                          "target element not in GT");
  }
  return GroupOps::from_gt(f);
}

// ---- SourceElement ----------------------------------------------------------

SourceElement::SourceElement() = default;

SourceElement SourceElement::identity(Side side) {
  SourceElement e;
  e.side_ = side;
  return e;
}

SourceElement SourceElement::generator(Side side) {
  return side == Side::kA ? GroupOps::from_g1(bls::g1_generator())
                          : GroupOps::from_g2(bls::g2_generator());
}

bool SourceElement::is_identity() const { return inf_; }

Result<SourceElement> SourceElement::mul(const SourceElement& other) const {
  if (side_ != other.side_) {
    return Result<SourceElement>::failure(
        Errc::kSideMismatch, "group operation needs same-side elements");
  }
  if (side_ == Side::kA) {
    auto sum = bls::G1Jacobian::from_affine(GroupOps::g1(*this))
                   .add_affine(GroupOps::g1(other));
    return GroupOps::from_g1(sum.to_affine());
  }
  auto sum = bls::G2Jacobian::from_affine(GroupOps::g2(*this))
                 .add_affine(GroupOps::g2(other));
  return GroupOps::from_g2(sum.to_affine());
}

SourceElement SourceElement::exp(const Scalar& k) const {
  auto e = k.to_bytes();
  if (side_ == Side::kA) {
    return GroupOps::from_g1(
        bls::scalar_mul(GroupOps::g1(*this), e.data(), e.size()).to_affine());
  }
  return GroupOps::from_g2(
      bls::scalar_mul(GroupOps::g2(*this), e.data(), e.size()).to_affine());
}

SourceElement SourceElement::inverse() const {
  if (side_ == Side::kA) return GroupOps::from_g1(GroupOps::g1(*this).negate());
  return GroupOps::from_g2(GroupOps::g2(*this).negate());
}

bool SourceElement::operator==(const SourceElement& o) const {
  if (side_ != o.side_) return false;
  if (inf_ || o.inf_) return inf_ == o.inf_;
  if (side_ == Side::kA) return GroupOps::g1(*this) == GroupOps::g1(o);
  return GroupOps::g2(*this) == GroupOps::g2(o);
}

Bytes SourceElement::to_bytes() const {
  if (side_ == Side::kA) {
    Bytes out(bls::kG1Bytes);
    bls::g1_to_bytes(GroupOps::g1(*this), out.data());
    return out;
  }
  Bytes out(bls::kG2Bytes);
  bls::g2_to_bytes(GroupOps::g2(*this), out.data());
  return out;
}

Result<SourceElement> SourceElement::from_bytes(
    Side side, std::span<const std::uint8_t> in) {
  if (in.size() != element_bytes(side)) {
    return Result<SourceElement>::failure(Errc::kMalformed,
                                          "wrong element width for side");
  }
  if (side == Side::kA) {
    auto a = bls::g1_from_bytes(in.data());
    if (!a) {
      return Result<SourceElement>::failure(Errc::kMalformed,
                                            "invalid side-A element");
    }
    return GroupOps::from_g1(*a);
  }
  auto a = bls::g2_from_bytes(in.data());
  if (!a) {
    return Result<SourceElement>::failure(Errc::kMalformed,
                                          "invalid side-B element");
  }
  return GroupOps::from_g2(*a);
}

// ---- pairing ----------------------------------------------------------------

namespace {

// Orders (a, b) as (side A, side B) or reports the mismatch.
Result<std::pair<const SourceElement*, const SourceElement*>> oriented(
    const SourceElement& a, const SourceElement& b) {
  using R = Result<std::pair<const SourceElement*, const SourceElement*>>;
  if (a.side() == b.side()) {
    return R::failure(Errc::kSideMismatch,
                      std::string("pair() needs opposite sides, got ") +
                          side_name(a.side()) + "/" + side_name(b.side()));
  }
  if (a.side() == Side::kA) return R(std::make_pair(&a, &b));
  return R(std::make_pair(&b, &a));
}

}  // namespace

Result<TargetElement> pair(const SourceElement& a, const SourceElement& b) {
  auto ord = oriented(a, b);
  if (!ord) return Result<TargetElement>(ord.error());
  auto [pa, pb] = ord.value();
  return GroupOps::from_gt(
      bls::pairing(GroupOps::g1(*pa), GroupOps::g2(*pb)));
}

Result<TargetElement> pair_ratio(const SourceElement& a1,
                                 const SourceElement& b1,
                                 const SourceElement& a2,
                                 const SourceElement& b2) {
  auto o1 = oriented(a1, b1);
  if (!o1) return Result<TargetElement>(o1.error());
  auto o2 = oriented(a2, b2);
  if (!o2) return Result<TargetElement>(o2.error());
  if (a1.side() != a2.side()) {
    return Result<TargetElement>::failure(
        Errc::kSideMismatch,
        "pair_ratio() needs both pairs in the same slot order");
  }
  auto [n1, d1] = o1.value();
  auto [n2, d2] = o2.value();
  return GroupOps::from_gt(
      bls::pairing_ratio(GroupOps::g1(*n1), GroupOps::g2(*d1),
                         GroupOps::g1(*n2), GroupOps::g2(*d2)));
}

std::uint64_t pairing_op_count() { return bls::pairing_op_count(); }
void reset_pairing_op_count() { bls::reset_pairing_op_count(); }

// ---- hash to group ----------------------------------------------------------

SourceElement hash_to_group(std::string_view domain,
                            std::span<const std::uint8_t> label) {
  // Try-and-increment: hash (domain, label, counter) to 64 bytes, reduce to
  // an x-coordinate, and take the first x that lies on the curve; clear the
  // cofactor to land in the prime-order subgroup.  The 8-bit counter fails
  // for all 256 values with probability ~2^-256.
  ByteWriter msg;
  msg.str(domain);
  msg.blob(label);
  Bytes base = msg.take();
  for (int ctr = 0; ctr < 256; ++ctr) {
    Bytes attempt = base;
    attempt.push_back(static_cast<std::uint8_t>(ctr));
    std::uint8_t digest[64];
    crypto_generichash(digest, sizeof(digest), attempt.data(), attempt.size(),
                       nullptr, 0);
    bls::Fp x = bls::fp_from_wide_bytes(digest);
    auto y = bls::fp_sqrt(x.square() * x + bls::curve_b<bls::Fp>());
    if (!y) continue;
    // Pick the root deterministically from the hash so the map does not
    // favour either sign.
    bool want_larger = (digest[63] & 1) != 0;
    bls::Fp yy = (bls::fp_lex_larger(*y) == want_larger) ? *y : -*y;
    bls::G1Affine point = bls::g1_clear_cofactor(bls::G1Affine{x, yy, false});
    if (!point.inf) return GroupOps::from_g1(point);
  }
  // Statistically unreachable; the identity would be rejected by callers.
  return SourceElement::identity(Side::kA);
}

// ---- descriptor ---------------------------------------------------------------

const GroupDescriptor& GroupDescriptor::bls12_381() {
  static const GroupDescriptor d = [] {
    GroupDescriptor g;
    g.curve = "BLS12-381";
    g.side_a = "G1: y^2 = x^3 + 4 over GF(p), 381-bit p, 48-byte compressed";
    g.side_b =
        "G2: y^2 = x^3 + 4(u+1) over GF(p^2), 96-byte compressed";
    g.security_bits = 128;
    bls::order_bytes_be(g.order_be.data());
    return g;
  }();
  return d;
}

}  // namespace phrfog
