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
// One-time signatures binding ciphertexts to their creating party.
//
// Each sealed record carries a fresh verification key.  The key is woven
// into the attribute-based ciphertext itself (see cpabe.hpp), so replacing
// the signature requires re-running encryption — a signature cannot be
// stripped off one ciphertext and reattached to another.  Ed25519 provides
// the signature scheme; "one-time" refers to usage (a fresh pair per
// record), not to a security limitation of the primitive.

#ifndef PHRFOG_ONETIME_SIG_HPP_
#define PHRFOG_ONETIME_SIG_HPP_

#include <array>
#include <cstdint>
#include <span>

#include "phrfog/rng.hpp"

namespace phrfog {

inline constexpr std::size_t kOtsVerifyKeyBytes = 32;
inline constexpr std::size_t kOtsSecretKeyBytes = 64;
inline constexpr std::size_t kOtsSignatureBytes = 64;

struct OneTimeKeyPair {
  std::array<std::uint8_t, kOtsVerifyKeyBytes> vk{};
  std::array<std::uint8_t, kOtsSecretKeyBytes> sk{};
};

// Draws a fresh key pair; deterministic under a deterministic rng.
OneTimeKeyPair ots_keygen(RandomSource& rng);

// Detached signature over `message`.
std::array<std::uint8_t, kOtsSignatureBytes> ots_sign(
    const OneTimeKeyPair& pair, std::span<const std::uint8_t> message);

bool ots_verify(const std::array<std::uint8_t, kOtsVerifyKeyBytes>& vk,
                std::span<const std::uint8_t> message,
                std::span<const std::uint8_t> signature);

}  // namespace phrfog

#endif  // PHRFOG_ONETIME_SIG_HPP_
