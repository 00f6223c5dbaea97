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

#include "phrfog/rng.hpp"

#include <sodium.h>

#include <cstring>

namespace phrfog {

namespace {

void ensure_sodium() {
  // sodium_init is idempotent; -1 only on broken platforms.
  static const int rc = sodium_init();
  (void)rc;
}

}  // namespace

void SystemRandom::fill(std::uint8_t* buf, std::size_t n) {
  ensure_sodium();
  randombytes_buf(buf, n);
}

DeterministicRandom::DeterministicRandom(std::uint64_t seed) {
  ensure_sodium();
  std::uint8_t seed_bytes[8];
  for (int i = 0; i < 8; ++i) {
    seed_bytes[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  }
  crypto_generichash(key_, sizeof(key_), seed_bytes, sizeof(seed_bytes),
                     nullptr, 0);
}

DeterministicRandom::DeterministicRandom(std::span<const std::uint8_t> seed) {
  ensure_sodium();
  crypto_generichash(key_, sizeof(key_), seed.data(), seed.size(), nullptr, 0);
}

void DeterministicRandom::refill() {
  std::uint8_t msg[8];
  for (int i = 0; i < 8; ++i) {
    msg[i] = static_cast<std::uint8_t>(counter_ >> (8 * i));
  }
  ++counter_;
  crypto_generichash(block_, sizeof(block_), msg, sizeof(msg), key_,
                     sizeof(key_));
  used_ = 0;
}

void DeterministicRandom::fill(std::uint8_t* buf, std::size_t n) {
  while (n > 0) {
    if (used_ == sizeof(block_)) refill();
    std::size_t take = sizeof(block_) - used_;
    if (take > n) take = n;
    std::memcpy(buf, block_ + used_, take);
    used_ += take;
    buf += take;
    n -= take;
  }
}

}  // namespace phrfog
