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

#include "pairing.hpp"

#include <atomic>

namespace phrfog::bls {

namespace {

std::atomic<std::uint64_t> g_pairing_ops{0};

// A line function evaluated at P, expressed in the sparse Fp12 basis
// (1, v*w, v^2*w): c1 + cvw*(v w) + cvvw*(v^2 w).  Any overall Fp2 factor is
// irrelevant because the final exponentiation kills subfield contributions,
// which the formulas below exploit to stay division-free.
struct Line {
  Fp2 c1, cvw, cvvw;
};

Fp12 line_to_fp12(const Line& l) {
  return Fp12{Fp6{l.c1, Fp2::zero(), Fp2::zero()},
              Fp6{Fp2::zero(), l.cvw, l.cvvw}};
}

// Tangent line at T (Jacobian, on the twist) evaluated at P, and T <- 2T.
// Derivation: untwist psi(x', y') = (x'/v, y'/(v w)), take the tangent at
// psi(T) on E/Fp12, evaluate at P, then scale by 2*Y*Z^3*xi (an Fp2 factor):
//   l = (2 Y Z^3 xi yP) * 1 + (3 X^3 - 2 Y^2) * vw - (3 X^2 Z^2 xP) * v^2 w
Line doubling_step(G2Jacobian& t, const G1Affine& p) {
  Fp2 a = t.x.square();          // X^2
  Fp2 b = t.y.square();          // Y^2
  Fp2 c = b.square();            // Y^4
  Fp2 zz = t.z.square();
  Fp2 e = a + a + a;             // 3 X^2
  Fp2 z3 = (t.y * t.z).dbl();    // 2 Y Z

  Line l;
  l.c1 = (z3 * zz).mul_xi().mul_fp(p.y);       // 2 Y Z^3 xi yP
  l.cvw = e * t.x - b.dbl();                   // 3 X^3 - 2 Y^2
  l.cvvw = -((e * zz).mul_fp(p.x));            // -3 X^2 Z^2 xP

  Fp2 d = ((t.x + b).square() - a - c).dbl();
  Fp2 f = e.square();
  Fp2 x3 = f - d.dbl();
  Fp2 y3 = e * (d - x3) - c.dbl().dbl().dbl();
  t = G2Jacobian{x3, y3, z3};
  return l;
}

// Chord through T and the affine point Q, evaluated at P, and T <- T + Q.
// Same scaling trick with the factor Z3 * xi:
//   l = (Z3 xi yP) * 1 + (R x_Q - Z3 y_Q) * vw - (R xP) * v^2 w
// where R = y_Q Z^3 - Y and Z3 = Z * (x_Q Z^2 - X).
Line addition_step(G2Jacobian& t, const G2Affine& q, const G1Affine& p) {
  Fp2 zz = t.z.square();
  Fp2 u2 = q.x * zz;
  Fp2 s2 = q.y * t.z * zz;
  Fp2 h = u2 - t.x;        // x_Q Z^2 - X
  Fp2 r = s2 - t.y;        // y_Q Z^3 - Y
  Fp2 z3 = t.z * h;

  Line l;
  l.c1 = z3.mul_xi().mul_fp(p.y);
  l.cvw = r * q.x - z3 * q.y;
  l.cvvw = -(r.mul_fp(p.x));

  Fp2 hh = h.square();
  Fp2 hhh = hh * h;
  Fp2 v = t.x * hh;
  Fp2 x3 = r.square() - hhh - v.dbl();
  Fp2 y3 = r * (v - x3) - t.y * hhh;
  t = G2Jacobian{x3, y3, z3};
  return l;
}

}  // namespace

std::uint64_t pairing_op_count() {
  return g_pairing_ops.load(std::memory_order_relaxed);
}

void reset_pairing_op_count() {
  g_pairing_ops.store(0, std::memory_order_relaxed);
}

Fp12 miller_loop(const G1Affine& p, const G2Affine& q) {
  g_pairing_ops.fetch_add(1, std::memory_order_relaxed);
  if (p.inf || q.inf) return Fp12::one();

  Fp12 f = Fp12::one();
  G2Jacobian t = G2Jacobian::from_affine(q);
  // |x| = 0xd201000000010000 has 64 bits; iterate from bit 62 downward.
  for (int i = 62; i >= 0; --i) {
    f = f.square() * line_to_fp12(doubling_step(t, p));
    if ((kAbsX >> i) & 1) {
      f = f * line_to_fp12(addition_step(t, q, p));
    }
  }
  // The BLS parameter x is negative: conjugation realizes f^(-1) up to
  // factors the final exponentiation removes.
  return f.conjugate();
}

Fp12 final_exponentiation(const Fp12& f) {
  if (f.is_zero()) return Fp12::zero();  // not reachable for valid pairings

  // Easy part: f^((p^6 - 1)(p^2 + 1)).
  Fp12 m = f.conjugate() * f.inverse();  // f^(p^6 - 1)
  m = m.frobenius(2) * m;                // ^(p^2 + 1)

  // Hard part: m^((p^4 - p^2 + 1) / r) via the exact decomposition
  //   (p^4 - p^2 + 1)/r = (x - 1)^2 / 3 * (x + p) * (x^2 + p^2 - 1) + 1
  // with x = -|x|.  Within the cyclotomic subgroup conjugation inverts, so
  // negative powers of x become conjugated |x|-powers.
  Fp12 t1 = m.pow_u64(kHardE1).pow_u64(kHardE2);  // m^((x-1)^2 / 3)
  Fp12 b = t1.pow_u64(kAbsX).conjugate() * t1.frobenius(1);  // t1^(x + p)
  Fp12 c = b.pow_u64(kAbsX).pow_u64(kAbsX) * b.frobenius(2) *
           b.conjugate();  // b^(x^2 + p^2 - 1)
  return c * m;
}

}  // namespace phrfog::bls
