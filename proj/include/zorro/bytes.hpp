// Copyright 2026 The Zorro Authors
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

#ifndef ZORRO_BYTES_HPP_
#define ZORRO_BYTES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zorro/error.hpp"

namespace zorro {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

// Strict inverse of to_hex: lowercase digits only, even length.
inline Bytes from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) {
    throw Error(Errc::kMalformedEncoding, "odd-length hex string");
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(Errc::kMalformedEncoding, "invalid hex digit");
    }
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

// Big-endian append-only encoder for canonical wire formats.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint8_t v) {
    buf_.push_back(v);
    return *this;
  }
  ByteWriter& u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
      buf_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
    return *this;
  }
  ByteWriter& u64(std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
      buf_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
    return *this;
  }
  ByteWriter& raw(ByteView bytes) {
    buf_.insert(buf_.end(), bytes.begin(), bytes.end());
    return *this;
  }
  template <class T>
  ByteWriter& put(const T& value) {
    return raw(value.encode());
  }

  const Bytes& bytes() const& { return buf_; }
  Bytes bytes() && { return std::move(buf_); }

 private:
  Bytes buf_;
};

// Strict decoder: every read is bounds-checked and finish() rejects trailing
// bytes, so each byte string has at most one parse.
class ByteReader {
 public:
  explicit ByteReader(ByteView bytes) : bytes_(bytes) {}
  // Readers do not own their input.
  explicit ByteReader(Bytes&&) = delete;

  std::uint8_t u8() { return take(1)[0]; }
  std::uint32_t u32() {
    auto b = take(4);
    std::uint32_t v = 0;
    for (std::uint8_t x : b) v = (v << 8) | x;
    return v;
  }
  std::uint64_t u64() {
    auto b = take(8);
    std::uint64_t v = 0;
    for (std::uint8_t x : b) v = (v << 8) | x;
    return v;
  }
  ByteView take(std::size_t n) {
    if (n > bytes_.size() - pos_) {
      throw Error(Errc::kMalformedEncoding, "truncated input");
    }
    ByteView out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  template <class G>
  typename G::Element element() {
    return G::decode_element(take(G::kElementSize));
  }
  template <class G>
  typename G::Scalar scalar() {
    return G::decode_scalar(take(G::kScalarSize));
  }
  void expect_tag(std::uint8_t tag) {
    if (u8() != tag) throw Error(Errc::kMalformedEncoding, "unexpected tag");
  }
  // Length fields are bounded by what the remaining input could hold, so a
  // corrupted count fails fast instead of triggering a huge allocation.
  std::uint32_t count(std::size_t min_item_size) {
    std::uint32_t n = u32();
    if (min_item_size != 0 && n > remaining() / min_item_size) {
      throw Error(Errc::kMalformedEncoding, "count exceeds input size");
    }
    return n;
  }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  void finish() const {
    if (pos_ != bytes_.size()) {
      throw Error(Errc::kMalformedEncoding, "trailing bytes");
    }
  }

 private:
  ByteView bytes_;
  std::size_t pos_ = 0;
};

}  // namespace zorro

#endif  // ZORRO_BYTES_HPP_
