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

#include "phrfog/onetime_sig.hpp"

#include <sodium.h>

namespace phrfog {

OneTimeKeyPair ots_keygen(RandomSource& rng) {
  static_assert(kOtsVerifyKeyBytes == crypto_sign_PUBLICKEYBYTES);
  static_assert(kOtsSecretKeyBytes == crypto_sign_SECRETKEYBYTES);
  std::array<std::uint8_t, crypto_sign_SEEDBYTES> seed;
  rng.fill(seed);
  OneTimeKeyPair pair;
  crypto_sign_seed_keypair(pair.vk.data(), pair.sk.data(), seed.data());
  sodium_memzero(seed.data(), seed.size());
  return pair;
}

std::array<std::uint8_t, kOtsSignatureBytes> ots_sign(
    const OneTimeKeyPair& pair, std::span<const std::uint8_t> message) {
  static_assert(kOtsSignatureBytes == crypto_sign_BYTES);
  std::array<std::uint8_t, kOtsSignatureBytes> sig{};
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(),
                       pair.sk.data());
  return sig;
}

bool ots_verify(const std::array<std::uint8_t, kOtsVerifyKeyBytes>& vk,
                std::span<const std::uint8_t> message,
                std::span<const std::uint8_t> signature) {
  if (signature.size() != kOtsSignatureBytes) return false;
  return crypto_sign_verify_detached(signature.data(), message.data(),
                                     message.size(), vk.data()) == 0;
}

}  // namespace phrfog
