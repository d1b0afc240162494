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

#ifndef ZORRO_RISTRETTO_GROUP_HPP_
#define ZORRO_RISTRETTO_GROUP_HPP_

#include <sodium.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <string_view>

#include "zorro/bytes.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"
#include "zorro/hash.hpp"

namespace zorro {

// Production group: ristretto255, the prime-order quotient of Curve25519
// (q = 2^252 + 27742317777372353535851937790883648493). Elements are held in
// their 32-byte canonical encoding; scalars are held little-endian internally
// and encoded big-endian on the wire.
class Ristretto255 {
 public:
  static constexpr GroupId kId = GroupId::kRistretto255;
  static constexpr std::string_view kName = "ristretto255";
  static constexpr std::size_t kElementSize = 32;
  static constexpr std::size_t kScalarSize = 32;
  static constexpr std::uint64_t kOrderFloor = UINT64_MAX;

  class Scalar {
   public:
    Scalar() = default;

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
      Scalar r;
      crypto_core_ristretto255_scalar_add(r.le_.data(), a.le_.data(),
                                          b.le_.data());
      return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
      Scalar r;
      crypto_core_ristretto255_scalar_sub(r.le_.data(), a.le_.data(),
                                          b.le_.data());
      return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
      Scalar r;
      crypto_core_ristretto255_scalar_mul(r.le_.data(), a.le_.data(),
                                          b.le_.data());
      return r;
    }
    Scalar operator-() const {
      Scalar r;
      crypto_core_ristretto255_scalar_negate(r.le_.data(), le_.data());
      return r;
    }
    friend bool operator==(const Scalar&, const Scalar&) = default;

    Scalar inverse() const {
      Scalar r;
      if (crypto_core_ristretto255_scalar_invert(r.le_.data(), le_.data()) !=
          0) {
        throw Error(Errc::kInvalidArgument, "inverse of zero");
      }
      return r;
    }
    bool is_zero() const {
      return std::all_of(le_.begin(), le_.end(),
                         [](std::uint8_t b) { return b == 0; });
    }
    Bytes encode() const { return Bytes(le_.rbegin(), le_.rend()); }

   private:
    friend class Ristretto255;
    std::array<std::uint8_t, 32> le_{};
  };

  class Element {
   public:
    Element() = default;

    friend Element operator*(const Element& a, const Element& b) {
      Element r;
      crypto_core_ristretto255_add(r.enc_.data(), a.enc_.data(), b.enc_.data());
      return r;
    }
    friend Element operator/(const Element& a, const Element& b) {
      Element r;
      crypto_core_ristretto255_sub(r.enc_.data(), a.enc_.data(), b.enc_.data());
      return r;
    }
    friend bool operator==(const Element&, const Element&) = default;

    Element inverse() const { return identity() / *this; }
    // libsodium reports an identity result with -1 and a zeroed output, which
    // is exactly the identity encoding, so the status is not an error here.
    Element pow(const Scalar& e) const {
      Element r;
      int rc = crypto_scalarmult_ristretto255(r.enc_.data(), e.le_.data(),
                                              enc_.data());
      (void)rc;
      return r;
    }
    Bytes encode() const { return Bytes(enc_.begin(), enc_.end()); }

   private:
    friend class Ristretto255;
    std::array<std::uint8_t, 32> enc_{};
  };

  static Element identity() { return Element(); }
  static Element generator() {
    static const Element g = [] {
      ensure_sodium();
      return exp_g(scalar(1));
    }();
    return g;
  }
  static Element exp_g(const Scalar& e) {
    Element r;
    int rc = crypto_scalarmult_ristretto255_base(r.enc_.data(), e.le_.data());
    (void)rc;
    return r;
  }
  static Element gamma() {
    static const Element value = [] {
      ensure_sodium();
      std::array<std::uint8_t, crypto_hash_sha512_BYTES> h;
      constexpr std::string_view tag = "zorro/v1/gamma/ristretto255";
      crypto_hash_sha512(h.data(),
                         reinterpret_cast<const unsigned char*>(tag.data()),
                         tag.size());
      Element r;
      crypto_core_ristretto255_from_hash(r.enc_.data(), h.data());
      return r;
    }();
    return value;
  }

  static Scalar scalar(std::int64_t v) {
    ensure_sodium();
    std::uint64_t mag = v >= 0 ? static_cast<std::uint64_t>(v)
                               : static_cast<std::uint64_t>(-(v + 1)) + 1;
    Scalar s;
    for (int i = 0; i < 8; ++i) s.le_[i] = static_cast<std::uint8_t>(mag >> (8 * i));
    return v >= 0 ? s : -s;
  }

  // Big-endian integer of any length reduced mod q.
  static Scalar scalar_from_bytes(ByteView bytes) {
    ensure_sodium();
    Scalar acc;
    const Scalar radix = scalar(256);
    std::size_t i = 0;
    // Consume whole 32-byte-or-smaller chunks through a 64-byte reduction.
    while (i < bytes.size()) {
      std::size_t take = std::min<std::size_t>(31, bytes.size() - i);
      std::array<std::uint8_t, 64> wide{};
      for (std::size_t k = 0; k < take; ++k) wide[take - 1 - k] = bytes[i + k];
      Scalar chunk;
      crypto_core_ristretto255_scalar_reduce(chunk.le_.data(), wide.data());
      Scalar shift = scalar(1);
      for (std::size_t k = 0; k < take; ++k) shift = shift * radix;
      acc = acc * shift + chunk;
      i += take;
    }
    return acc;
  }

  static Element decode_element(ByteView bytes) {
    ensure_sodium();
    if (bytes.size() != kElementSize) {
      throw Error(Errc::kMalformedEncoding, "element has wrong length");
    }
    // libsodium masks the top bit before its canonicity check.
    if ((bytes[31] & 0x80) != 0 || crypto_core_ristretto255_is_valid_point(bytes.data()) != 1) {
      throw Error(Errc::kMalformedEncoding, "not a canonical ristretto point");
    }
    Element r;
    std::copy(bytes.begin(), bytes.end(), r.enc_.begin());
    return r;
  }
  static Scalar decode_scalar(ByteView bytes) {
    ensure_sodium();
    if (bytes.size() != kScalarSize) {
      throw Error(Errc::kMalformedEncoding, "scalar has wrong length");
    }
    std::array<std::uint8_t, 64> wide{};
    std::reverse_copy(bytes.begin(), bytes.end(), wide.begin());
    Scalar s;
    crypto_core_ristretto255_scalar_reduce(s.le_.data(), wide.data());
    if (!std::equal(s.le_.begin(), s.le_.end(), wide.begin())) {
      throw Error(Errc::kMalformedEncoding, "scalar not reduced");
    }
    return s;
  }
};

static_assert(Group<Ristretto255>);

}  // namespace zorro

#endif  // ZORRO_RISTRETTO_GROUP_HPP_
