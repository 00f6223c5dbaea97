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
// Data envelope: the symmetric layer of hybrid encryption.
//
// The attribute-based layer transports a random group element K in the
// pairing target group; the record payload itself is sealed under an AEAD
// key derived from K.  Tampering with either layer is caught — the AEAD tag
// covers the payload and the associated data, and the associated data binds
// the envelope to the record metadata around it.

#ifndef PHRFOG_ENVELOPE_HPP_
#define PHRFOG_ENVELOPE_HPP_

#include <array>
#include <cstdint>
#include <span>

#include "phrfog/bytes.hpp"
#include "phrfog/group.hpp"
#include "phrfog/result.hpp"
#include "phrfog/rng.hpp"

namespace phrfog {

// Algorithm identifier stored in the envelope header.
inline constexpr std::uint8_t kEnvelopeAlgXChaCha20Poly1305 = 1;

inline constexpr std::size_t kEnvelopeKeyBytes = 32;
inline constexpr std::size_t kEnvelopeNonceBytes = 24;

struct EnvelopeLimits {
  std::uint64_t max_plaintext = 64ull << 20;  // 64 MiB
};

// Derives the 32-byte AEAD key from a pairing target-group element by
// hashing its canonical encoding under a fixed domain label.
std::array<std::uint8_t, kEnvelopeKeyBytes> derive_envelope_key(
    const TargetElement& k);

// Seals `plaintext` with a fresh random nonce.  `aad` is authenticated but
// not stored; open() must supply identical bytes.
//
// Envelope layout (little-endian lengths):
//   u8  algorithm id (1 = XChaCha20-Poly1305)
//   u8  nonce length (24)
//   24B nonce
//   u64 ciphertext length (plaintext length + 16-byte tag)
//   ..  ciphertext
Result<Bytes> envelope_seal(const std::array<std::uint8_t, kEnvelopeKeyBytes>& key,
                            std::span<const std::uint8_t> plaintext,
                            std::span<const std::uint8_t> aad,
                            RandomSource& rng,
                            const EnvelopeLimits& limits = {});

// Opens an envelope.  Fails with kMalformed on structural problems and
// kEnvelopeAuthFailed when the tag does not verify (wrong key, wrong aad,
// or modified ciphertext).
Result<Bytes> envelope_open(const std::array<std::uint8_t, kEnvelopeKeyBytes>& key,
                            std::span<const std::uint8_t> envelope,
                            std::span<const std::uint8_t> aad,
                            const EnvelopeLimits& limits = {});

}  // namespace phrfog

#endif  // PHRFOG_ENVELOPE_HPP_
