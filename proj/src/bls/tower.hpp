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

// Extension-field tower for BLS12-381:
//   Fp2  = Fp[u]  / (u^2 + 1)
//   Fp6  = Fp2[v] / (v^3 - xi),  xi = u + 1
//   Fp12 = Fp6[w] / (w^2 - v)
// Header-only; internal to the pairing backend.

#pragma once

#include <cstdint>
#include <optional>

#include "fields.hpp"

namespace phrfog::bls {

struct Fp2 {
  Fp c0, c1;  // c0 + c1 * u

  static Fp2 zero() { return {}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

  friend bool operator==(const Fp2& a, const Fp2& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend bool operator!=(const Fp2& a, const Fp2& b) { return !(a == b); }

  friend Fp2 operator+(const Fp2& a, const Fp2& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend Fp2 operator-(const Fp2& a, const Fp2& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  friend Fp2 operator-(const Fp2& a) { return {-a.c0, -a.c1}; }

  friend Fp2 operator*(const Fp2& a, const Fp2& b) {
    // Karatsuba: three base-field multiplications.
    Fp t0 = a.c0 * b.c0;
    Fp t1 = a.c1 * b.c1;
    Fp t2 = (a.c0 + a.c1) * (b.c0 + b.c1);
    return {t0 - t1, t2 - t0 - t1};
  }

  Fp2 square() const {
    // (c0 + c1 u)^2 = (c0+c1)(c0-c1) + 2 c0 c1 u
    Fp a = c0 + c1;
    Fp b = c0 - c1;
    Fp c = c0 * c1;
    return {a * b, c + c};
  }

  Fp2 dbl() const { return {c0 + c0, c1 + c1}; }

  Fp2 mul_fp(const Fp& s) const { return {c0 * s, c1 * s}; }

  // Multiplication by the sextic non-residue xi = u + 1.
  Fp2 mul_xi() const { return {c0 - c1, c0 + c1}; }

  Fp2 conjugate() const { return {c0, -c1}; }

  Fp2 inverse() const {
    // 1 / (c0 + c1 u) = (c0 - c1 u) / (c0^2 + c1^2); zero maps to zero.
    Fp d = bls::inverse(c0.square() + c1.square());
    return {c0 * d, -(c1 * d)};
  }

  // Compressed-point sign convention: compare c1 first, then c0.
  bool lex_larger() const {
    if (!c1.is_zero()) return fp_lex_larger(c1);
    return fp_lex_larger(c0);
  }
};

inline Fp2 fp2_from_canonical(const std::array<std::array<u64, 6>, 2>& c) {
  return {Fp::from_canonical(c[0]), Fp::from_canonical(c[1])};
}

// Square root in Fp2 for p = 3 mod 4 (Adj & Rodriguez-Henriquez, alg. 9).
inline std::optional<Fp2> fp2_sqrt(const Fp2& a) {
  if (a.is_zero()) return Fp2::zero();
  Fp2 a1 = pow_limbs(a, kPMinus3Div4);
  Fp2 alpha = a1.square() * a;  // a^((p-1)/2)
  Fp2 x0 = a1 * a;              // a^((p+1)/4)
  Fp2 minus_one = -Fp2::one();
  Fp2 x;
  if (alpha == minus_one) {
    x = Fp2{-x0.c1, x0.c0};  // multiply by u (a square root of -1)
  } else {
    x = pow_limbs(alpha + Fp2::one(), kPMinus1Div2) * x0;
  }
  if (x.square() != a) return std::nullopt;
  return x;
}

struct Fp6 {
  Fp2 c0, c1, c2;  // c0 + c1 v + c2 v^2

  static Fp6 zero() { return {}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const {
    return c0.is_zero() && c1.is_zero() && c2.is_zero();
  }

  friend bool operator==(const Fp6& a, const Fp6& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
  }
  friend bool operator!=(const Fp6& a, const Fp6& b) { return !(a == b); }

  friend Fp6 operator+(const Fp6& a, const Fp6& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend Fp6 operator-(const Fp6& a, const Fp6& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  friend Fp6 operator-(const Fp6& a) { return {-a.c0, -a.c1, -a.c2}; }

  friend Fp6 operator*(const Fp6& a, const Fp6& b) {
    // Toom-style schoolbook with six Fp2 multiplications.
    Fp2 t0 = a.c0 * b.c0;
    Fp2 t1 = a.c1 * b.c1;
    Fp2 t2 = a.c2 * b.c2;
    Fp2 s0 = ((a.c1 + a.c2) * (b.c1 + b.c2) - t1 - t2).mul_xi() + t0;
    Fp2 s1 = (a.c0 + a.c1) * (b.c0 + b.c1) - t0 - t1 + t2.mul_xi();
    Fp2 s2 = (a.c0 + a.c2) * (b.c0 + b.c2) - t0 - t2 + t1;
    return {s0, s1, s2};
  }

  Fp6 square() const { return *this * *this; }

  // Multiplication by v (v^3 = xi).
  Fp6 mul_v() const { return {c2.mul_xi(), c0, c1}; }

  Fp6 mul_fp2(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

  Fp6 inverse() const {
    // Standard cofactor formulas for cubic extensions.
    Fp2 a = c0.square() - (c1 * c2).mul_xi();
    Fp2 b = (c2.square()).mul_xi() - c0 * c1;
    Fp2 c = c1.square() - c0 * c2;
    Fp2 den = c0 * a + (c2 * b + c1 * c).mul_xi();
    Fp2 inv = den.inverse();
    return {a * inv, b * inv, c * inv};
  }
};

struct Fp12 {
  Fp6 c0, c1;  // c0 + c1 w

  static Fp12 zero() { return {}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool is_one() const { return *this == one(); }

  friend bool operator==(const Fp12& a, const Fp12& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
  friend bool operator!=(const Fp12& a, const Fp12& b) { return !(a == b); }

  friend Fp12 operator*(const Fp12& a, const Fp12& b) {
    // Karatsuba over Fp6 (w^2 = v).
    Fp6 t0 = a.c0 * b.c0;
    Fp6 t1 = a.c1 * b.c1;
    Fp6 t2 = (a.c0 + a.c1) * (b.c0 + b.c1);
    return {t0 + t1.mul_v(), t2 - t0 - t1};
  }

  Fp12 square() const {
    // Complex squaring: c0' = (c0 + c1)(c0 + v c1) - m - v m, c1' = 2 m.
    Fp6 m = c0 * c1;
    Fp6 t = (c0 + c1) * (c0 + c1.mul_v());
    return {t - m - m.mul_v(), m + m};
  }

  // Conjugation over Fp6: the inverse of any element of the cyclotomic
  // subgroup (everything that has been through the easy part of the final
  // exponentiation, hence every pairing value).
  Fp12 conjugate() const { return {c0, -c1}; }

  Fp12 inverse() const {
    Fp6 den = c0.square() - c1.square().mul_v();
    Fp6 inv = den.inverse();
    return {c0 * inv, -(c1 * inv)};
  }

  // The p-power Frobenius endomorphism, applied `power` times.
  Fp12 frobenius(int power = 1) const {
    static const Fp2 g1 = fp2_from_canonical(kGamma1);
    static const Fp2 g2 = fp2_from_canonical(kGamma2);
    static const Fp2 g3 = fp2_from_canonical(kGamma3);
    static const Fp2 g4 = fp2_from_canonical(kGamma4);
    static const Fp2 g5 = fp2_from_canonical(kGamma5);
    Fp12 f = *this;
    for (int i = 0; i < power; ++i) {
      f = Fp12{
          Fp6{f.c0.c0.conjugate(), f.c0.c1.conjugate() * g2,
              f.c0.c2.conjugate() * g4},
          Fp6{f.c1.c0.conjugate() * g1, f.c1.c1.conjugate() * g3,
              f.c1.c2.conjugate() * g5},
      };
    }
    return f;
  }

  // res = this^e for a u64 exponent (used by the final-exponentiation chain).
  Fp12 pow_u64(u64 e) const {
    Fp12 res = one();
    for (int i = 63; i >= 0; --i) {
      res = res.square();
      if ((e >> i) & 1) res = res * *this;
    }
    return res;
  }
};

}  // namespace phrfog::bls
