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

// Byte-buffer helpers: length-prefixed little-endian serialization used by
// every on-disk structure, plus hex conversion.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phrfog {

using Bytes = std::vector<std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

std::string to_hex(std::span<const std::uint8_t> data);
std::optional<Bytes> from_hex(std::string_view hex);

// Appends fixed-width little-endian integers and length-prefixed blobs.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void raw(std::span<const std::uint8_t> data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
  }
  // u32 length followed by the payload.
  void blob(std::span<const std::uint8_t> data) {
    u32(static_cast<std::uint32_t>(data.size()));
    raw(data);
  }
  void str(std::string_view s) {
    blob(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
  }

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }
  std::size_t size() const { return buf_.size(); }

 private:
  Bytes buf_;
};

// Bounds-checked reader; every accessor reports failure instead of reading
// out of range, and failed() stays set once any read failed.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  bool u8(std::uint8_t& out) {
    if (!need(1)) return false;
    out = data_[off_++];
    return true;
  }
  bool u32(std::uint32_t& out) {
    if (!need(4)) return false;
    out = 0;
    for (int i = 3; i >= 0; --i) out = (out << 8) | data_[off_ + i];
    off_ += 4;
    return true;
  }
  bool u64(std::uint64_t& out) {
    if (!need(8)) return false;
    out = 0;
    for (int i = 7; i >= 0; --i) out = (out << 8) | data_[off_ + i];
    off_ += 8;
    return true;
  }
  bool raw(std::uint8_t* out, std::size_t n) {
    if (!need(n)) return false;
    for (std::size_t i = 0; i < n; ++i) out[i] = data_[off_ + i];
    off_ += n;
    return true;
  }
  // Reads a u32-length-prefixed blob; `cap` guards against hostile lengths.
  bool blob(Bytes& out, std::size_t cap = kDefaultBlobCap) {
    std::uint32_t n = 0;
    if (!u32(n)) return false;
    if (n > cap || !need(n)) return fail();
    out.assign(data_.begin() + static_cast<std::ptrdiff_t>(off_),
               data_.begin() + static_cast<std::ptrdiff_t>(off_ + n));
    off_ += n;
    return true;
  }
  bool str(std::string& out, std::size_t cap = kDefaultBlobCap) {
    Bytes b;
    if (!blob(b, cap)) return false;
    out.assign(b.begin(), b.end());
    return true;
  }
  // Returns the next n bytes as a view without copying.
  bool view(std::span<const std::uint8_t>& out, std::size_t n) {
    if (!need(n)) return false;
    out = data_.subspan(off_, n);
    off_ += n;
    return true;
  }

  std::size_t offset() const { return off_; }
  std::size_t remaining() const { return data_.size() - off_; }
  bool done() const { return !failed_ && off_ == data_.size(); }
  bool failed() const { return failed_; }

  static constexpr std::size_t kDefaultBlobCap = 1u << 30;

 private:
  bool need(std::size_t n) {
    if (failed_ || data_.size() - off_ < n) return fail();
    return true;
  }
  bool fail() {
    failed_ = true;
    return false;
  }

  std::span<const std::uint8_t> data_;
  std::size_t off_ = 0;
  bool failed_ = false;
};

}  // namespace phrfog
