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

// Tests for the symmetric envelope layer (key derivation from a pairing
// target element, AEAD sealing/opening) and the one-time signatures.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "phrfog/envelope.hpp"
#include "phrfog/group.hpp"
#include "phrfog/onetime_sig.hpp"
#include "phrfog/rng.hpp"

namespace {

using namespace phrfog;

Bytes bytes_of(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

std::array<std::uint8_t, kEnvelopeKeyBytes> test_key(std::uint64_t seed) {
  DeterministicRandom rng(seed);
  std::array<std::uint8_t, kEnvelopeKeyBytes> key{};
  rng.fill(key.data(), key.size());
  return key;
}

}  // namespace

TEST_CASE("derive_envelope_key separates distinct group elements") {
  SourceElement g1 = SourceElement::generator(Side::kA);
  SourceElement g2 = SourceElement::generator(Side::kB);
  TargetElement k = pair(g1, g2).value();

  auto key1 = derive_envelope_key(k);
  auto key1_again = derive_envelope_key(k);
  CHECK(key1 == key1_again);

  // K and K^2 are one squaring apart in GT; the derived keys are unrelated.
  auto key2 = derive_envelope_key(k * k);
  CHECK(key1 != key2);

  auto key_id = derive_envelope_key(TargetElement::identity());
  CHECK(key1 != key_id);
}

TEST_CASE("seal/open round-trips across payload sizes") {
  DeterministicRandom rng(9);
  auto key = test_key(1);
  Bytes aad = bytes_of("record metadata");

  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{1024},
                        std::size_t{1 << 20}}) {
    CAPTURE(n);
    Bytes plaintext(n);
    DeterministicRandom fill(n + 7);
    if (n > 0) fill.fill(plaintext.data(), plaintext.size());

    auto sealed = envelope_seal(key, plaintext, aad, rng);
    REQUIRE(sealed.ok());
    // header (1 + 1 + 24 + 8) + payload + 16-byte tag
    CHECK(sealed.value().size() == 34 + n + 16);
    CHECK(sealed.value()[0] == kEnvelopeAlgXChaCha20Poly1305);

    auto opened = envelope_open(key, sealed.value(), aad);
    REQUIRE(opened.ok());
    CHECK(opened.value() == plaintext);
  }
}

TEST_CASE("open fails with the wrong key") {
  DeterministicRandom rng(10);
  Bytes aad = bytes_of("aad");
  auto sealed =
      envelope_seal(test_key(1), bytes_of("attachment"), aad, rng).value();
  auto r = envelope_open(test_key(2), sealed, aad);
  CHECK(!r.ok());
  CHECK(r.error().code == Errc::kEnvelopeAuthFailed);
}

TEST_CASE("open fails when the associated data differs") {
  DeterministicRandom rng(11);
  auto key = test_key(3);
  auto sealed =
      envelope_seal(key, bytes_of("payload"), bytes_of("owner=alice"), rng)
          .value();
  CHECK(envelope_open(key, sealed, bytes_of("owner=alice")).ok());
  auto r = envelope_open(key, sealed, bytes_of("owner=mallory"));
  CHECK(!r.ok());
  CHECK(r.error().code == Errc::kEnvelopeAuthFailed);
  // Empty vs non-empty associated data also fails.
  CHECK(!envelope_open(key, sealed, Bytes{}).ok());
}

TEST_CASE("every truncation or ciphertext flip fails closed") {
  DeterministicRandom rng(12);
  auto key = test_key(4);
  Bytes aad = bytes_of("aad");
  Bytes sealed = envelope_seal(key, bytes_of("0123456789"), aad, rng).value();

  SUBCASE("truncations are malformed or unauthenticated") {
    for (std::size_t cut = 0; cut < sealed.size(); ++cut) {
      Bytes shorter(sealed.begin(), sealed.begin() + cut);
      auto r = envelope_open(key, shorter, aad);
      CHECK(!r.ok());
      CHECK((r.error().code == Errc::kMalformed ||
             r.error().code == Errc::kEnvelopeAuthFailed));
    }
  }

  SUBCASE("trailing bytes are malformed") {
    Bytes longer = sealed;
    longer.push_back(0);
    auto r = envelope_open(key, longer, aad);
    CHECK(!r.ok());
    CHECK(r.error().code == Errc::kMalformed);
  }

  SUBCASE("single-byte flips never decrypt") {
    for (std::size_t i = 0; i < sealed.size(); ++i) {
      Bytes mutated = sealed;
      mutated[i] ^= 0x01;
      auto r = envelope_open(key, mutated, aad);
      CHECK(!r.ok());
    }
  }

  SUBCASE("unknown algorithm id is malformed") {
    Bytes mutated = sealed;
    mutated[0] = 2;
    auto r = envelope_open(key, mutated, aad);
    CHECK(!r.ok());
    CHECK(r.error().code == Errc::kMalformed);
  }

  SUBCASE("declared length beyond the buffer is malformed") {
    Bytes mutated = sealed;
    mutated[26 + 7] = 0x7f;  // top byte of the little-endian u64 length
    auto r = envelope_open(key, mutated, aad);
    CHECK(!r.ok());
    CHECK(r.error().code == Errc::kMalformed);
  }
}

TEST_CASE("plaintext size limit is enforced on both sides") {
  DeterministicRandom rng(13);
  auto key = test_key(5);
  EnvelopeLimits tiny{16};
  Bytes big(17, 0xaa);
  CHECK(!envelope_seal(key, big, {}, rng, tiny).ok());

  Bytes ok_payload(16, 0xbb);
  auto sealed = envelope_seal(key, ok_payload, {}, rng, tiny);
  REQUIRE(sealed.ok());
  CHECK(envelope_open(key, sealed.value(), {}, tiny).ok());

  // An envelope sealed under generous limits fails to open under a smaller
  // cap before any AEAD work happens.
  auto big_sealed = envelope_seal(key, big, {}, rng).value();
  auto r = envelope_open(key, big_sealed, {}, tiny);
  CHECK(!r.ok());
  CHECK(r.error().code == Errc::kMalformed);
}

TEST_CASE("nonces are fresh per seal and ciphertexts never repeat") {
  DeterministicRandom rng(14);
  auto key = test_key(6);
  Bytes plaintext = bytes_of("same plaintext every time");
  std::set<Bytes> nonces;
  std::set<Bytes> ciphertexts;
  for (int i = 0; i < 32; ++i) {
    Bytes sealed = envelope_seal(key, plaintext, {}, rng).value();
    nonces.insert(Bytes(sealed.begin() + 2, sealed.begin() + 2 + 24));
    ciphertexts.insert(sealed);
  }
  CHECK(nonces.size() == 32);
  CHECK(ciphertexts.size() == 32);
}

TEST_CASE("sealed bytes do not embed the plaintext in the clear") {
  // Smoke check, not a cryptographic claim: no 16-byte window of the
  // plaintext appears verbatim in the sealed bytes.
  DeterministicRandom rng(15);
  auto key = test_key(7);
  Bytes plaintext = bytes_of(
      "blood pressure 120/80, pulse 61, encounter notes follow here");
  Bytes sealed = envelope_seal(key, plaintext, {}, rng).value();
  for (std::size_t i = 0; i + 16 <= plaintext.size(); ++i) {
    auto window_begin = plaintext.begin() + static_cast<std::ptrdiff_t>(i);
    bool found = std::search(sealed.begin(), sealed.end(), window_begin,
                             window_begin + 16) != sealed.end();
    CHECK(!found);
  }
}

TEST_CASE("one-time signatures verify and bind to the exact message") {
  DeterministicRandom rng(16);
  OneTimeKeyPair kp = ots_keygen(rng);
  Bytes msg = bytes_of("ciphertext bytes followed by envelope bytes");

  auto sig = ots_sign(kp, msg);
  CHECK(ots_verify(kp.vk, msg, sig));

  // Any flip in message, signature, or key fails.
  Bytes msg2 = msg;
  msg2[0] ^= 1;
  CHECK(!ots_verify(kp.vk, msg2, sig));

  auto sig2 = sig;
  sig2[63] ^= 1;
  CHECK(!ots_verify(kp.vk, msg, sig2));

  auto vk2 = kp.vk;
  vk2[5] ^= 1;
  CHECK(!ots_verify(vk2, msg, sig));

  // A different key pair's signature does not transfer.
  OneTimeKeyPair other = ots_keygen(rng);
  CHECK(!ots_verify(other.vk, msg, sig));
  CHECK(kp.vk != other.vk);

  // Deterministic under a fixed seed (tests rely on this).
  DeterministicRandom rng_a(99), rng_b(99);
  CHECK(ots_keygen(rng_a).vk == ots_keygen(rng_b).vk);

  // Empty message is signable.
  Bytes empty;
  auto esig = ots_sign(kp, empty);
  CHECK(ots_verify(kp.vk, empty, esig));
  CHECK(!ots_verify(kp.vk, msg, esig));
}
