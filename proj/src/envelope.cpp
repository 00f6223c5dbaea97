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

#include "phrfog/envelope.hpp"

#include <sodium.h>

#include <cstring>

namespace phrfog {

namespace {

constexpr char kKdfDomain[] = "phrfog:envelope-key:v1";

}  // namespace

std::array<std::uint8_t, kEnvelopeKeyBytes> derive_envelope_key(
    const TargetElement& k) {
  Bytes encoded = k.to_bytes();
  std::array<std::uint8_t, kEnvelopeKeyBytes> key{};
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, key.size());
  crypto_generichash_update(
      &st, reinterpret_cast<const unsigned char*>(kKdfDomain),
      sizeof(kKdfDomain) - 1);
  crypto_generichash_update(&st, encoded.data(), encoded.size());
  crypto_generichash_final(&st, key.data(), key.size());
  return key;
}

Result<Bytes> envelope_seal(
    const std::array<std::uint8_t, kEnvelopeKeyBytes>& key,
    std::span<const std::uint8_t> plaintext, std::span<const std::uint8_t> aad,
    RandomSource& rng, const EnvelopeLimits& limits) {
  if (plaintext.size() > limits.max_plaintext) {
    return Result<Bytes>::failure(Errc::kTooLarge,
                                  "plaintext exceeds envelope limit");
  }
  static_assert(kEnvelopeKeyBytes ==
                crypto_aead_xchacha20poly1305_ietf_KEYBYTES);
  static_assert(kEnvelopeNonceBytes ==
                crypto_aead_xchacha20poly1305_ietf_NPUBBYTES);
  std::array<std::uint8_t, kEnvelopeNonceBytes> nonce;
  rng.fill(nonce);

  Bytes ct(plaintext.size() + crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long ct_len = 0;
  crypto_aead_xchacha20poly1305_ietf_encrypt(
      ct.data(), &ct_len, plaintext.data(), plaintext.size(), aad.data(),
      aad.size(), nullptr, nonce.data(), key.data());
  ct.resize(static_cast<std::size_t>(ct_len));

  ByteWriter w;
  w.u8(kEnvelopeAlgXChaCha20Poly1305);
  w.u8(static_cast<std::uint8_t>(nonce.size()));
  w.raw(nonce);
  w.u64(static_cast<std::uint64_t>(ct.size()));
  w.raw(ct);
  return w.take();
}

Result<Bytes> envelope_open(
    const std::array<std::uint8_t, kEnvelopeKeyBytes>& key,
    std::span<const std::uint8_t> envelope, std::span<const std::uint8_t> aad,
    const EnvelopeLimits& limits) {
  auto malformed = [](const char* why) {
    return Result<Bytes>::failure(Errc::kMalformed, why);
  };
  ByteReader r(envelope);
  std::uint8_t alg = 0, nonce_len = 0;
  if (!r.u8(alg)) return malformed("empty envelope");
  if (alg != kEnvelopeAlgXChaCha20Poly1305) {
    return malformed("unknown envelope algorithm");
  }
  if (!r.u8(nonce_len) || nonce_len != kEnvelopeNonceBytes) {
    return malformed("bad envelope nonce length");
  }
  std::array<std::uint8_t, kEnvelopeNonceBytes> nonce;
  if (!r.raw(nonce.data(), nonce.size())) {
    return malformed("truncated envelope nonce");
  }
  std::uint64_t ct_len = 0;
  if (!r.u64(ct_len)) return malformed("truncated envelope length");
  if (ct_len < crypto_aead_xchacha20poly1305_ietf_ABYTES ||
      ct_len >
          limits.max_plaintext + crypto_aead_xchacha20poly1305_ietf_ABYTES) {
    return malformed("envelope length out of range");
  }
  if (ct_len != r.remaining()) {
    return malformed("envelope length does not match payload");
  }
  std::span<const std::uint8_t> ct;
  if (!r.view(ct, static_cast<std::size_t>(ct_len))) {
    return malformed("truncated envelope payload");
  }

  Bytes pt(static_cast<std::size_t>(ct_len) -
           crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long pt_len = 0;
  if (crypto_aead_xchacha20poly1305_ietf_decrypt(
          pt.data(), &pt_len, nullptr, ct.data(), ct.size(), aad.data(),
          aad.size(), nonce.data(), key.data()) != 0) {
    return Result<Bytes>::failure(Errc::kEnvelopeAuthFailed,
                                  "envelope authentication failed");
  }
  pt.resize(static_cast<std::size_t>(pt_len));
  return pt;
}

}  // namespace phrfog
