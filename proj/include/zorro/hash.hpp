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

#ifndef ZORRO_HASH_HPP_
#define ZORRO_HASH_HPP_

#include <sodium.h>

#include <array>
#include <cstdint>
#include <string_view>

#include "zorro/bytes.hpp"
#include "zorro/error.hpp"

namespace zorro {

inline void ensure_sodium() {
  static const int status = sodium_init();
  if (status < 0) {
    throw Error(Errc::kEntropyFailure, "libsodium initialisation failed");
  }
}

using Digest = std::array<std::uint8_t, 32>;

class Sha256 {
 public:
  Sha256() {
    ensure_sodium();
    crypto_hash_sha256_init(&state_);
  }
  Sha256& update(ByteView bytes) {
    crypto_hash_sha256_update(&state_, bytes.data(), bytes.size());
    return *this;
  }
  Sha256& update(std::string_view s) {
    crypto_hash_sha256_update(
        &state_, reinterpret_cast<const unsigned char*>(s.data()), s.size());
    return *this;
  }
  Digest finish() {
    Digest out;
    crypto_hash_sha256_final(&state_, out.data());
    return out;
  }

 private:
  crypto_hash_sha256_state state_;
};

inline Digest sha256(ByteView bytes) { return Sha256().update(bytes).finish(); }

}  // namespace zorro

#endif  // ZORRO_HASH_HPP_
