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

#include "phrfog/bytes.hpp"

#include "phrfog/result.hpp"

namespace phrfog {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kInvalidArgument: return "invalid_argument";
    case Errc::kUnsupportedCurve: return "unsupported_curve";
    case Errc::kMalformed: return "malformed";
    case Errc::kSideMismatch: return "side_mismatch";
    case Errc::kSignatureInvalid: return "signature_invalid";
    case Errc::kEnvelopeAuthFailed: return "envelope_auth_failed";
    case Errc::kPolicyUnsatisfied: return "policy_unsatisfied";
    case Errc::kKeyExpired: return "key_expired";
    case Errc::kPolicyViolation: return "policy_violation";
    case Errc::kParseError: return "parse_error";
    case Errc::kTooLarge: return "too_large";
    case Errc::kIoError: return "io_error";
    case Errc::kInternal: return "internal";
  }
  return "unknown";
}

std::string to_hex(std::span<const std::uint8_t> data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

std::optional<Bytes> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]);
    int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

}  // namespace phrfog
