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

// Randomness abstraction.  All key- and ciphertext-producing operations take
// a RandomSource so tests and the CLI's --seed mode can run deterministically.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace phrfog {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::uint8_t* buf, std::size_t n) = 0;

  void fill(std::span<std::uint8_t> buf) { fill(buf.data(), buf.size()); }
};

// Operating-system CSPRNG (libsodium randombytes).  The default for all
// production paths.
class SystemRandom final : public RandomSource {
 public:
  using RandomSource::fill;
  void fill(std::uint8_t* buf, std::size_t n) override;
};

// Keyed BLAKE2b counter stream.  Reproducible by construction and therefore
// UNSAFE FOR PRODUCTION USE; exists only for tests and the CLI's explicit
// deterministic test mode.
class DeterministicRandom final : public RandomSource {
 public:
  explicit DeterministicRandom(std::uint64_t seed);
  explicit DeterministicRandom(std::span<const std::uint8_t> seed);

  using RandomSource::fill;
  void fill(std::uint8_t* buf, std::size_t n) override;

 private:
  void refill();

  std::uint8_t key_[32];
  std::uint8_t block_[64];
  std::uint64_t counter_ = 0;
  std::size_t used_ = sizeof(block_);
};

}  // namespace phrfog
