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

#ifndef ZORRO_RNG_HPP_
#define ZORRO_RNG_HPP_

#include <sodium.h>

#include <array>
#include <cstdint>
#include <span>

#include "zorro/bytes.hpp"
#include "zorro/hash.hpp"

namespace zorro {

// Source of randomness handed to every prover. Implementations must be
// cryptographically secure outside of tests.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  std::uint64_t next_u64() {
    std::array<std::uint8_t, 8> b;
    fill(b);
    std::uint64_t v = 0;
    for (std::uint8_t x : b) v = (v << 8) | x;
    return v;
  }

  // Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }
};

// Operating-system entropy via libsodium.
class SystemRng final : public Rng {
 public:
  SystemRng() { ensure_sodium(); }
  void fill(std::span<std::uint8_t> out) override {
    randombytes_buf(out.data(), out.size());
  }
};

// ChaCha20 keystream keyed from a seed. Identical seeds give identical
// streams, which makes whole protocol runs reproducible.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(std::uint64_t seed) {
    ByteWriter w;
    w.u64(seed);
    key_ = Sha256().update("zorro/v1/seeded-rng").update(w.bytes()).finish();
  }
  explicit SeededRng(const Digest& key) : key_(key) { ensure_sodium(); }

  void fill(std::span<std::uint8_t> out) override {
    for (std::uint8_t& b : out) {
      if (pos_ == block_.size()) refill();
      b = block_[pos_++];
    }
  }

  // Independent child stream, e.g. one per simulated party.
  SeededRng fork(std::uint64_t label) {
    ByteWriter w;
    w.u64(label);
    Digest child = Sha256().update(key_).update(w.bytes()).finish();
    return SeededRng(child);
  }

 private:
  void refill() {
    std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
    std::uint64_t c = counter_++;
    for (int i = 0; i < 8; ++i) nonce[i] = static_cast<std::uint8_t>(c >> (8 * i));
    crypto_stream_chacha20_ietf(block_.data(), block_.size(), nonce.data(),
                                key_.data());
    pos_ = 0;
  }

  Digest key_;
  std::array<std::uint8_t, 512> block_{};
  std::size_t pos_ = block_.size();
  std::uint64_t counter_ = 0;
};

}  // namespace zorro

#endif  // ZORRO_RNG_HPP_
