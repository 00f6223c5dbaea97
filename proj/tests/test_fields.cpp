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
//
// Base- and scalar-field arithmetic against externally computed vectors
// (fixed operand pairs with their products, sums, inverses and square
// roots computed by an independent bignum implementation) plus algebraic
// properties on pseudo-random elements.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <string>

#include "bls/fields.hpp"
#include "doctest.h"
#include "phrfog/group.hpp"
#include "phrfog/rng.hpp"

using namespace phrfog;
using namespace phrfog::bls;

namespace {

Fp fp_hex(const std::string& h) {
  REQUIRE(h.size() == 96);
  std::uint8_t buf[48];
  for (int i = 0; i < 48; ++i) {
    buf[i] = static_cast<std::uint8_t>(
        std::stoul(h.substr(2 * static_cast<std::size_t>(i), 2), nullptr, 16));
  }
  auto v = Fp::from_bytes(buf);
  REQUIRE(v.has_value());
  return *v;
}

Fr fr_hex(const std::string& h) {
  REQUIRE(h.size() == 64);
  std::uint8_t buf[32];
  for (int i = 0; i < 32; ++i) {
    buf[i] = static_cast<std::uint8_t>(
        std::stoul(h.substr(2 * static_cast<std::size_t>(i), 2), nullptr, 16));
  }
  auto v = Fr::from_bytes(buf);
  REQUIRE(v.has_value());
  return *v;
}

Fp random_fp(DeterministicRandom& rng) {
  std::uint8_t wide[64];
  rng.fill(wide);
  return fp_from_wide_bytes(wide);
}

}  // namespace

TEST_CASE("Fp arithmetic matches external vectors") {
  Fp a = fp_hex(
      "06416bc78cde735321c2f59983139f6c0bf40553af99f18f0fe574a656f6f73308873a"
      "2ca4b1e52ec6d9e12df4f162c1");
  Fp b = fp_hex(
      "10ab28b525a1faa529fc27f6de863d04ff5601ab230a9614bde6c361a4da2da3a2ff1e"
      "bfe7e49ce125fcd5b3b224a763");
  Fp ab = fp_hex(
      "09c376b0f8c9f2b15a0e24f0875d982a0e0705e8a5ae3e20ee44eeb429aa508b0a2eeb"
      "e1621585f3e46eb694c5e37f3c");
  Fp apb = fp_hex(
      "16ec947cb2806df84bbf1d906199dc710b4a06fed2a487a3cdcc3807fbd124d6ab8658"
      "ec8c96820fecd6b6e1a7160a24");
  Fp ai = fp_hex(
      "169706e483cc94e6dae1d41bf8276e3f5904b6b0abaee923fd554d136673e08b2ef69d"
      "8b2b2448dd54131761165fbf52");
  CHECK(a * b == ab);
  CHECK(a + b == apb);
  CHECK(inverse(a) == ai);
  CHECK(a * inverse(a) == Fp::one());
  CHECK(ab - a * b == Fp::zero());
  CHECK(-(a - b) == b - a);
}

TEST_CASE("Fp square root matches external vector") {
  Fp s = fp_hex(
      "18546cb2d9b9a6fe715f3a9e22a2d48bc9ab35161969e7cea1f0336d74f9d339f24c00"
      "59573fe4e857e1d2658b1d8c9c");
  Fp root = fp_hex(
      "0b346ac47ce1ea12eeab7a24e5fc46e7289aedae254980e6c2fbe5818f7633117fc689"
      "a94a9a43504968346f7c0f6980");
  auto got = fp_sqrt(s);
  REQUIRE(got.has_value());
  CHECK((*got == root || *got == -root));
  CHECK(*got * *got == s);
}

TEST_CASE("Fr arithmetic matches external vectors") {
  Fr a = fr_hex(
      "56048bad24e66c51fc7fe78e22f2873cb04ad04b6b232d0accff4d99554b8756");
  Fr b = fr_hex(
      "575ee184957cb496772884f55e260a26839e7569ae9c9f2985cdad75e2c0434e");
  Fr ab = fr_hex(
      "5666f549b50b5388671d46cb0fd8d754a394432d22abda0d96578b6722807626");
  Fr ai = fr_hex(
      "533974ca11eb716fbdf66725ea9263a6c511772ed55edb386966774735df3aab");
  CHECK(a * b == ab);
  CHECK(inverse(a) == ai);
  CHECK(a * inverse(a) == Fr::one());
}

TEST_CASE("non-canonical encodings are rejected") {
  // The modulus itself and anything above it must not decode.
  std::uint8_t p_bytes[48];
  for (int i = 0; i < 6; ++i) {
    std::uint64_t limb = kP[5 - i];
    for (int j = 0; j < 8; ++j) {
      p_bytes[8 * i + j] = static_cast<std::uint8_t>(limb >> (56 - 8 * j));
    }
  }
  CHECK(!Fp::from_bytes(p_bytes).has_value());
  std::uint8_t ff[48];
  for (auto& v : ff) v = 0xff;
  CHECK(!Fp::from_bytes(ff).has_value());
  std::uint8_t zero[48] = {};
  auto z = Fp::from_bytes(zero);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());

  std::uint8_t rff[32];
  for (auto& v : rff) v = 0xff;
  CHECK(!Fr::from_bytes(rff).has_value());
}

TEST_CASE("byte round trips are exact") {
  DeterministicRandom rng(101);
  for (int i = 0; i < 50; ++i) {
    Fp a = random_fp(rng);
    std::uint8_t buf[48];
    a.to_bytes(buf);
    auto back = Fp::from_bytes(buf);
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
}

TEST_CASE("field axioms on pseudo-random elements") {
  DeterministicRandom rng(7);
  for (int i = 0; i < 100; ++i) {
    Fp a = random_fp(rng);
    Fp b = random_fp(rng);
    Fp c = random_fp(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    if (!a.is_zero()) {
      CHECK(a * inverse(a) == Fp::one());
    }
    CHECK(a.square() == a * a);
    CHECK(a.dbl() == a + a);
  }
}

TEST_CASE("scalar inverse round trip x100") {
  DeterministicRandom drng(12345);
  for (int i = 0; i < 100; ++i) {
    Scalar k = random_scalar(drng);
    if (k.is_zero()) continue;
    auto ki = k.inverse();
    REQUIRE(ki.has_value());
    CHECK(k * *ki == Scalar::one());
  }
  CHECK(!Scalar::zero().inverse().has_value());
}

TEST_CASE("scalar encoding is canonical") {
  // r itself must be rejected; r-1 must round trip.
  std::uint8_t r_bytes[32];
  for (int i = 0; i < 4; ++i) {
    std::uint64_t limb = kR[3 - i];
    for (int j = 0; j < 8; ++j) {
      r_bytes[8 * i + j] = static_cast<std::uint8_t>(limb >> (56 - 8 * j));
    }
  }
  CHECK(!Scalar::from_bytes(r_bytes).has_value());
  r_bytes[31] -= 1;  // r - 1
  auto rm1 = Scalar::from_bytes(r_bytes);
  REQUIRE(rm1.has_value());
  CHECK(rm1->to_bytes()[31] == r_bytes[31]);
  CHECK(*rm1 + Scalar::one() == Scalar::zero());
}
