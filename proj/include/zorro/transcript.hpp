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

#ifndef ZORRO_TRANSCRIPT_HPP_
#define ZORRO_TRANSCRIPT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "zorro/bytes.hpp"
#include "zorro/group.hpp"
#include "zorro/hash.hpp"

namespace zorro {

// Fiat-Shamir transcript: a domain tag followed by length-prefixed messages.
// The challenge is SHA-256 of the framed bytes, read big-endian and reduced
// mod q, so it is a pure function of the tag and the message sequence.
class Transcript {
 public:
  explicit Transcript(std::string_view domain_tag) {
    frame(ByteView(reinterpret_cast<const std::uint8_t*>(domain_tag.data()),
                   domain_tag.size()));
  }

  Transcript& append(ByteView message) {
    frame(message);
    return *this;
  }
  Transcript& append(std::string_view label) {
    return append(ByteView(reinterpret_cast<const std::uint8_t*>(label.data()),
                           label.size()));
  }
  template <class T>
    requires requires(const T& t) { t.encode(); }
  Transcript& append(const T& value) {
    return append(ByteView(value.encode()));
  }

  // Sub-context for one proof slot; the parent stays untouched.
  Transcript fork(std::string_view label) const {
    Transcript t = *this;
    t.append(label);
    return t;
  }

  Digest digest() const { return sha256(buf_); }

  template <Group G>
  typename G::Scalar challenge() const {
    return G::scalar_from_bytes(digest());
  }

  const Bytes& framed_bytes() const { return buf_; }

 private:
  void frame(ByteView message) {
    const auto n = static_cast<std::uint32_t>(message.size());
    for (int shift = 24; shift >= 0; shift -= 8) {
      buf_.push_back(static_cast<std::uint8_t>(n >> shift));
    }
    buf_.insert(buf_.end(), message.begin(), message.end());
  }

  Bytes buf_;
};

}  // namespace zorro

#endif  // ZORRO_TRANSCRIPT_HPP_
