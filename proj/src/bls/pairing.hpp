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

// Optimal ate pairing e : G1 x G2 -> GT for BLS12-381.

#pragma once

#include <cstdint>

#include "curves.hpp"

namespace phrfog::bls {

// Number of Miller-loop evaluations executed so far (process-wide).  The
// public API exposes this so tests can assert which code paths perform
// pairing work.
std::uint64_t pairing_op_count();
void reset_pairing_op_count();

// Miller loop only; returns 1 when either input is the identity.  The result
// still needs the final exponentiation.
Fp12 miller_loop(const G1Affine& p, const G2Affine& q);

Fp12 final_exponentiation(const Fp12& f);

inline Fp12 pairing(const G1Affine& p, const G2Affine& q) {
  return final_exponentiation(miller_loop(p, q));
}

// e(p1, q1) * e(p2, q2)^(-1) with a single shared final exponentiation.
// The conjugate inverts the second Miller value because the final
// exponentiation maps f and its p^6-Frobenius conjugate to inverse results.
inline Fp12 pairing_ratio(const G1Affine& p1, const G2Affine& q1,
                          const G1Affine& p2, const G2Affine& q2) {
  return final_exponentiation(miller_loop(p1, q1) *
                              miller_loop(p2, q2).conjugate());
}

// res = base^e where e is the canonical (non-Montgomery) value of an Fr
// scalar; base must lie in the cyclotomic subgroup (any pairing output).
inline Fp12 gt_pow(const Fp12& base, const Fr& e) {
  return pow_limbs(base, e.to_canonical());
}

}  // namespace phrfog::bls
