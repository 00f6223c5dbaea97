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

// Typed error handling used across the library: every fallible operation
// returns Result<T> carrying either a value or an Error with a stable code.

#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace phrfog {

enum class Errc {
  kInvalidArgument,
  kUnsupportedCurve,
  kMalformed,         // undecodable bytes, bad lengths, invalid encodings
  kSideMismatch,      // pairing/group-op arguments on incompatible sides
  kSignatureInvalid,
  kEnvelopeAuthFailed,
  kPolicyUnsatisfied,
  kKeyExpired,
  kPolicyViolation,   // authority refused issuance
  kParseError,        // policy text
  kTooLarge,
  kIoError,
  kInternal,
};

const char* errc_name(Errc c);

struct Error {
  Errc code;
  std::string message;
};

template <class T>
class [[nodiscard]] Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  static Result failure(Errc code, std::string message) {
    return Result(Error{code, std::move(message)});
  }

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    assert(ok());
    return std::get<T>(v_);
  }
  T& value() & {
    assert(ok());
    return std::get<T>(v_);
  }
  T&& take() && {
    assert(ok());
    return std::get<T>(std::move(v_));
  }

  const Error& error() const {
    assert(!ok());
    return std::get<Error>(v_);
  }
  Errc code() const { return error().code; }

 private:
  std::variant<T, Error> v_;
};

using Status = Result<std::monostate>;

inline Status ok_status() { return Status(std::monostate{}); }

}  // namespace phrfog
