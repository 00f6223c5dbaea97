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

// Prime-field arithmetic for BLS12-381: the base field Fp (six 64-bit limbs)
// and the scalar field Fr (four limbs), both in Montgomery form with CIOS
// multiplication.  Header-only; internal to the pairing backend.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>

#include "bls_constants.hpp"

namespace phrfog::bls {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

template <std::size_t N>
using Limbs = std::array<u64, N>;

template <std::size_t N>
inline int compare_limbs(const Limbs<N>& a, const Limbs<N>& b) {
  for (std::size_t i = N; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

template <std::size_t N>
inline bool limbs_are_zero(const Limbs<N>& a) {
  u64 acc = 0;
  for (u64 w : a) acc |= w;
  return acc == 0;
}

// out = a + b, returns the carry limb (0 or 1).
template <std::size_t N>
inline u64 add_limbs(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b) {
  u128 carry = 0;
  for (std::size_t i = 0; i < N; ++i) {
    carry += static_cast<u128>(a[i]) + b[i];
    out[i] = static_cast<u64>(carry);
    carry >>= 64;
  }
  return static_cast<u64>(carry);
}

// out = a - b, returns the borrow (0 or 1).
template <std::size_t N>
inline u64 sub_limbs(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b) {
  u64 borrow = 0;
  for (std::size_t i = 0; i < N; ++i) {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    out[i] = static_cast<u64>(d);
    borrow = static_cast<u64>(d >> 64) & 1u;
  }
  return borrow;
}

// CIOS Montgomery multiplication: out = a * b * 2^(-64N) mod Mod.
// Requires a, b < Mod and Mod < 2^(64N - 2) (true for both BLS12-381 moduli).
template <std::size_t N>
inline void mont_mul(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b,
                     const Limbs<N>& mod, u64 inv) {
  u64 t[N + 2] = {};
  for (std::size_t i = 0; i < N; ++i) {
    u128 carry = 0;
    for (std::size_t j = 0; j < N; ++j) {
      carry = static_cast<u128>(a[i]) * b[j] + t[j] + static_cast<u64>(carry);
      t[j] = static_cast<u64>(carry);
      carry >>= 64;
    }
    u128 sum = static_cast<u128>(t[N]) + static_cast<u64>(carry);
    t[N] = static_cast<u64>(sum);
    t[N + 1] = static_cast<u64>(sum >> 64);

    u64 m = t[0] * inv;
    carry = (static_cast<u128>(m) * mod[0] + t[0]) >> 64;
    for (std::size_t j = 1; j < N; ++j) {
      carry = static_cast<u128>(m) * mod[j] + t[j] + static_cast<u64>(carry);
      t[j - 1] = static_cast<u64>(carry);
      carry >>= 64;
    }
    sum = static_cast<u128>(t[N]) + static_cast<u64>(carry);
    t[N - 1] = static_cast<u64>(sum);
    t[N] = t[N + 1] + static_cast<u64>(sum >> 64);
    t[N + 1] = 0;
  }
  Limbs<N> res;
  std::memcpy(res.data(), t, sizeof(res));
  if (t[N] != 0 || compare_limbs(res, mod) >= 0) {
    sub_limbs(res, res, mod);
  }
  out = res;
}

// An element of GF(Mod) held in Montgomery form.  R1 = 2^(64N) mod Mod,
// R2 = R1^2 mod Mod, Inv = -Mod^(-1) mod 2^64.
template <std::size_t N, const Limbs<N>& Mod, const Limbs<N>& R1,
          const Limbs<N>& R2, u64 Inv>
struct PrimeField {
  Limbs<N> v{};

  static constexpr std::size_t kLimbs = N;
  static constexpr std::size_t kBytes = 8 * N;

  static PrimeField zero() { return PrimeField{}; }
  static PrimeField one() { return PrimeField{R1}; }

  // Interprets `c` as a canonical integer (must already be < Mod).
  static PrimeField from_canonical(const Limbs<N>& c) {
    PrimeField out;
    mont_mul(out.v, c, R2, Mod, Inv);
    return out;
  }

  static PrimeField from_u64(u64 x) {
    Limbs<N> c{};
    c[0] = x;
    return from_canonical(c);
  }

  Limbs<N> to_canonical() const {
    Limbs<N> one_limb{};
    one_limb[0] = 1;
    Limbs<N> out;
    mont_mul(out, v, one_limb, Mod, Inv);
    return out;
  }

  // Big-endian, fixed width; rejects encodings >= Mod.
  static std::optional<PrimeField> from_bytes(const std::uint8_t* in) {
    Limbs<N> c{};
    for (std::size_t i = 0; i < N; ++i) {
      u64 w = 0;
      for (int j = 0; j < 8; ++j) {
        w = (w << 8) | in[(N - 1 - i) * 8 + j];
      }
      c[i] = w;
    }
    if (compare_limbs(c, Mod) >= 0) return std::nullopt;
    return from_canonical(c);
  }

  void to_bytes(std::uint8_t* out) const {
    Limbs<N> c = to_canonical();
    for (std::size_t i = 0; i < N; ++i) {
      u64 w = c[N - 1 - i];
      for (int j = 0; j < 8; ++j) {
        out[i * 8 + j] = static_cast<std::uint8_t>(w >> (56 - 8 * j));
      }
    }
  }

  bool is_zero() const { return limbs_are_zero(v); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.v == b.v;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) {
    return !(a == b);
  }

  friend PrimeField operator+(const PrimeField& a, const PrimeField& b) {
    PrimeField out;
    add_limbs(out.v, a.v, b.v);  // < 2*Mod < 2^(64N), no carry possible
    if (compare_limbs(out.v, Mod) >= 0) sub_limbs(out.v, out.v, Mod);
    return out;
  }

  friend PrimeField operator-(const PrimeField& a, const PrimeField& b) {
    PrimeField out;
    if (sub_limbs(out.v, a.v, b.v) != 0) add_limbs(out.v, out.v, Mod);
    return out;
  }

  friend PrimeField operator-(const PrimeField& a) {
    PrimeField out{};
    if (!a.is_zero()) sub_limbs(out.v, Mod, a.v);
    return out;
  }

  friend PrimeField operator*(const PrimeField& a, const PrimeField& b) {
    PrimeField out;
    mont_mul(out.v, a.v, b.v, Mod, Inv);
    return out;
  }

  PrimeField square() const { return *this * *this; }

  PrimeField dbl() const { return *this + *this; }
};

// res = base^e for a little-endian limb exponent; works for any type with
// one(), operator* and square().
template <class F>
inline F pow_limbs(const F& base, const u64* e, std::size_t n) {
  std::size_t bits = 64 * n;
  while (bits > 0 && ((e[(bits - 1) / 64] >> ((bits - 1) % 64)) & 1) == 0) {
    --bits;
  }
  F res = F::one();
  for (std::size_t i = bits; i-- > 0;) {
    res = res.square();
    if ((e[i / 64] >> (i % 64)) & 1) res = res * base;
  }
  return res;
}

template <class F, std::size_t N>
inline F pow_limbs(const F& base, const Limbs<N>& e) {
  return pow_limbs(base, e.data(), N);
}

using Fp = PrimeField<6, kP, kPR, kPR2, kPInv>;
using Fr = PrimeField<4, kR, kRR, kRR2, kRInv>;

// Multiplicative inverse by Fermat; maps zero to zero (callers that care must
// test for zero first).
inline Fp inverse(const Fp& a) { return pow_limbs(a, kPMinus2); }
inline Fr inverse(const Fr& a) { return pow_limbs(a, kRMinus2); }

// True when the canonical value exceeds (p-1)/2 — the "lexicographically
// largest" convention used by the compressed-point sign bit.
inline bool fp_lex_larger(const Fp& a) {
  Limbs<6> c = a.to_canonical();
  return compare_limbs(c, kPMinus1Div2) > 0;
}

inline std::optional<Fp> fp_sqrt(const Fp& a) {
  Fp cand = pow_limbs(a, kPPlus1Div4);
  if (cand.square() != a) return std::nullopt;
  return cand;
}

// Interprets 64 big-endian bytes as an integer reduced mod p (used by
// hash-to-group; the 128-bit surplus keeps the output statistically uniform).
inline Fp fp_from_wide_bytes(const std::uint8_t* in) {
  auto load_256 = [](const std::uint8_t* b) {
    Limbs<6> c{};
    for (std::size_t i = 0; i < 4; ++i) {
      u64 w = 0;
      for (int j = 0; j < 8; ++j) w = (w << 8) | b[(3 - i) * 8 + j];
      c[i] = w;
    }
    return Fp::from_canonical(c);  // < 2^256 < p
  };
  Limbs<6> shift{};
  shift[4] = 1;  // 2^256
  return load_256(in) * Fp::from_canonical(shift) + load_256(in + 32);
}

}  // namespace phrfog::bls
