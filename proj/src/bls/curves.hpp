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

// Short-Weierstrass group arithmetic for BLS12-381:
//   G1: y^2 = x^3 + 4          over Fp
//   G2: y^2 = x^3 + 4(u + 1)   over Fp2 (M-twist)
// Jacobian coordinates; compressed serialization follows the widely used
// 48/96-byte convention (flag bits 0x80 compressed, 0x40 infinity, 0x20 sign).

#pragma once

#include <cstdint>
#include <optional>

#include "tower.hpp"

namespace phrfog::bls {

template <class F>
inline F curve_b();

template <>
inline Fp curve_b<Fp>() {
  static const Fp b = Fp::from_u64(4);
  return b;
}

template <>
inline Fp2 curve_b<Fp2>() {
  static const Fp2 b{Fp::from_u64(4), Fp::from_u64(4)};
  return b;
}

template <class F>
struct Affine {
  F x{}, y{};
  bool inf = true;

  static Affine infinity() { return Affine{}; }

  friend bool operator==(const Affine& a, const Affine& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Affine& a, const Affine& b) {
    return !(a == b);
  }

  bool on_curve() const {
    if (inf) return true;
    return y.square() == x.square() * x + curve_b<F>();
  }

  Affine negate() const { return inf ? *this : Affine{x, -y, false}; }
};

// Fp has a free-function inverse; Fp2 a member.  One spelling for templates.
inline Fp field_inverse(const Fp& a) { return inverse(a); }
inline Fp2 field_inverse(const Fp2& a) { return a.inverse(); }

template <class F>
struct Jacobian {
  F x = F::one(), y = F::one(), z = F::zero();  // z == 0 encodes infinity

  static Jacobian infinity() { return Jacobian{}; }

  static Jacobian from_affine(const Affine<F>& a) {
    if (a.inf) return infinity();
    return {a.x, a.y, F::one()};
  }

  bool is_infinity() const { return z.is_zero(); }

  Jacobian negate() const { return {x, -y, z}; }

  Jacobian dbl() const {
    if (is_infinity()) return *this;
    // dbl-2009-l (a = 0)
    F a = x.square();
    F b = y.square();
    F c = b.square();
    F t = x + b;
    F d = (t.square() - a - c).dbl();
    F e = a + a + a;
    F f = e.square();
    F x3 = f - d.dbl();
    F c8 = c.dbl().dbl().dbl();
    F y3 = e * (d - x3) - c8;
    F z3 = (y * z).dbl();
    return {x3, y3, z3};
  }

  Jacobian add(const Jacobian& q) const {
    if (is_infinity()) return q;
    if (q.is_infinity()) return *this;
    // add-2007-bl
    F z1z1 = z.square();
    F z2z2 = q.z.square();
    F u1 = x * z2z2;
    F u2 = q.x * z1z1;
    F s1 = y * q.z * z2z2;
    F s2 = q.y * z * z1z1;
    if (u1 == u2) {
      if (s1 == s2) return dbl();
      return infinity();
    }
    F h = u2 - u1;
    F i = h.dbl().square();
    F j = h * i;
    F r = (s2 - s1).dbl();
    F v = u1 * i;
    F x3 = r.square() - j - v.dbl();
    F y3 = r * (v - x3) - (s1 * j).dbl();
    F z3 = ((z + q.z).square() - z1z1 - z2z2) * h;
    return {x3, y3, z3};
  }

  Jacobian add_affine(const Affine<F>& q) const {
    if (q.inf) return *this;
    if (is_infinity()) return from_affine(q);
    // madd-2007-bl
    F z1z1 = z.square();
    F u2 = q.x * z1z1;
    F s2 = q.y * z * z1z1;
    if (u2 == x) {
      if (s2 == y) return dbl();
      return infinity();
    }
    F h = u2 - x;
    F hh = h.square();
    F i = hh.dbl().dbl();
    F j = h * i;
    F r = (s2 - y).dbl();
    F v = x * i;
    F x3 = r.square() - j - v.dbl();
    F y3 = r * (v - x3) - (y * j).dbl();
    F z3 = (z + h).square() - z1z1 - hh;
    return {x3, y3, z3};
  }

  Affine<F> to_affine() const {
    if (is_infinity()) return Affine<F>::infinity();
    F zi = field_inverse(z);
    F zi2 = zi.square();
    return {x * zi2, y * zi2 * zi, false};
  }

  friend bool operator==(const Jacobian& a, const Jacobian& b) {
    bool ai = a.is_infinity(), bi = b.is_infinity();
    if (ai || bi) return ai == bi;
    // Cross-multiplied comparison avoids inversions.
    F az2 = a.z.square(), bz2 = b.z.square();
    if (a.x * bz2 != b.x * az2) return false;
    return a.y * bz2 * b.z == b.y * az2 * a.z;
  }
};

// Double-and-add with a 4-bit fixed window over a big-endian byte exponent.
template <class F>
inline Jacobian<F> scalar_mul(const Affine<F>& base, const std::uint8_t* be,
                              std::size_t len) {
  if (base.inf) return Jacobian<F>::infinity();
  Jacobian<F> table[16];
  table[0] = Jacobian<F>::infinity();
  table[1] = Jacobian<F>::from_affine(base);
  for (int i = 2; i < 16; ++i) table[i] = table[i - 1].add_affine(base);
  std::size_t start = 0;
  while (start < len && be[start] == 0) ++start;
  Jacobian<F> acc = Jacobian<F>::infinity();
  for (std::size_t i = start; i < len; ++i) {
    for (int half = 1; half >= 0; --half) {
      acc = acc.dbl().dbl().dbl().dbl();
      int nib = (be[i] >> (4 * half)) & 0xF;
      if (nib != 0) acc = acc.add(table[nib]);
    }
  }
  return acc;
}

using G1Affine = Affine<Fp>;
using G2Affine = Affine<Fp2>;
using G1Jacobian = Jacobian<Fp>;
using G2Jacobian = Jacobian<Fp2>;

inline G1Affine g1_generator() {
  return {Fp::from_canonical(kG1GenX), Fp::from_canonical(kG1GenY), false};
}

inline G2Affine g2_generator() {
  return {fp2_from_canonical(kG2GenX), fp2_from_canonical(kG2GenY), false};
}

inline void order_bytes_be(std::uint8_t out[32]) {
  for (std::size_t i = 0; i < 4; ++i) {
    u64 w = kR[3 - i];
    for (int j = 0; j < 8; ++j) {
      out[i * 8 + j] = static_cast<std::uint8_t>(w >> (56 - 8 * j));
    }
  }
}

template <class F>
inline bool in_subgroup(const Affine<F>& a) {
  if (a.inf) return true;
  std::uint8_t rbytes[32];
  order_bytes_be(rbytes);
  return scalar_mul(a, rbytes, 32).is_infinity();
}

// Clears the G1 cofactor (x-1)^2/3 so try-and-increment outputs land in the
// order-r subgroup.
inline G1Affine g1_clear_cofactor(const G1Affine& a) {
  std::uint8_t be[16];
  for (std::size_t i = 0; i < 2; ++i) {
    u64 w = kG1Cofactor[1 - i];
    for (int j = 0; j < 8; ++j) {
      be[i * 8 + j] = static_cast<std::uint8_t>(w >> (56 - 8 * j));
    }
  }
  return scalar_mul(a, be, 16).to_affine();
}

// ---- compressed serialization ----------------------------------------------

inline constexpr std::size_t kG1Bytes = 48;
inline constexpr std::size_t kG2Bytes = 96;

inline void g1_to_bytes(const G1Affine& a, std::uint8_t out[kG1Bytes]) {
  if (a.inf) {
    for (std::size_t i = 0; i < kG1Bytes; ++i) out[i] = 0;
    out[0] = 0xC0;
    return;
  }
  a.x.to_bytes(out);
  out[0] |= 0x80;
  if (fp_lex_larger(a.y)) out[0] |= 0x20;
}

inline void g2_to_bytes(const G2Affine& a, std::uint8_t out[kG2Bytes]) {
  if (a.inf) {
    for (std::size_t i = 0; i < kG2Bytes; ++i) out[i] = 0;
    out[0] = 0xC0;
    return;
  }
  a.x.c1.to_bytes(out);       // imaginary part first
  a.x.c0.to_bytes(out + 48);
  out[0] |= 0x80;
  if (a.y.lex_larger()) out[0] |= 0x20;
}

// Full validation: flag consistency, canonical field encoding, curve
// membership (via the square root) and prime-order subgroup membership.
inline std::optional<G1Affine> g1_from_bytes(const std::uint8_t in[kG1Bytes]) {
  std::uint8_t flags = in[0] & 0xE0;
  if (!(flags & 0x80)) return std::nullopt;  // only compressed accepted
  std::uint8_t body[kG1Bytes];
  for (std::size_t i = 0; i < kG1Bytes; ++i) body[i] = in[i];
  body[0] &= 0x1F;
  if (flags & 0x40) {
    if (flags & 0x20) return std::nullopt;
    for (std::size_t i = 0; i < kG1Bytes; ++i) {
      if (body[i] != 0) return std::nullopt;
    }
    return G1Affine::infinity();
  }
  auto x = Fp::from_bytes(body);
  if (!x) return std::nullopt;
  auto y = fp_sqrt(x->square() * *x + curve_b<Fp>());
  if (!y) return std::nullopt;
  bool want_larger = (flags & 0x20) != 0;
  Fp yy = (fp_lex_larger(*y) == want_larger) ? *y : -*y;
  G1Affine a{*x, yy, false};
  if (!in_subgroup(a)) return std::nullopt;
  return a;
}

inline std::optional<G2Affine> g2_from_bytes(const std::uint8_t in[kG2Bytes]) {
  std::uint8_t flags = in[0] & 0xE0;
  if (!(flags & 0x80)) return std::nullopt;
  std::uint8_t body[kG2Bytes];
  for (std::size_t i = 0; i < kG2Bytes; ++i) body[i] = in[i];
  body[0] &= 0x1F;
  if (flags & 0x40) {
    if (flags & 0x20) return std::nullopt;
    for (std::size_t i = 0; i < kG2Bytes; ++i) {
      if (body[i] != 0) return std::nullopt;
    }
    return G2Affine::infinity();
  }
  auto x1 = Fp::from_bytes(body);
  auto x0 = Fp::from_bytes(body + 48);
  if (!x0 || !x1) return std::nullopt;
  Fp2 x{*x0, *x1};
  auto y = fp2_sqrt(x.square() * x + curve_b<Fp2>());
  if (!y) return std::nullopt;
  bool want_larger = (flags & 0x20) != 0;
  Fp2 yy = (y->lex_larger() == want_larger) ? *y : -*y;
  G2Affine a{x, yy, false};
  if (!in_subgroup(a)) return std::nullopt;
  return a;
}

}  // namespace phrfog::bls
