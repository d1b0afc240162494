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

#ifndef ZORRO_MODP_GROUP_HPP_
#define ZORRO_MODP_GROUP_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "zorro/bytes.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"
#include "zorro/hash.hpp"

namespace zorro {

namespace detail {

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t e,
                               std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return acc;
}

constexpr std::size_t byte_length(std::uint64_t v) {
  return (static_cast<std::size_t>(std::bit_width(v)) + 7) / 8;
}

inline void put_be(std::uint64_t v, std::size_t len, Bytes& out) {
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * (len - 1 - i))));
  }
}

inline std::uint64_t get_be(ByteView bytes) {
  std::uint64_t v = 0;
  for (std::uint8_t b : bytes) v = (v << 8) | b;
  return v;
}

// Arbitrary-length big-endian integer reduced mod m (m < 2^63).
inline std::uint64_t reduce_be(ByteView bytes, std::uint64_t m) {
  unsigned __int128 acc = 0;
  for (std::uint8_t b : bytes) acc = ((acc << 8) | b) % m;
  return static_cast<std::uint64_t>(acc);
}

}  // namespace detail

// Order-q subgroup of Z_p^* for a safe prime p = 2q + 1 below 2^63.
// Elements encode as fixed-length big-endian residues, scalars likewise.
template <class Params>
class ModpGroup {
 public:
  static constexpr std::uint64_t kP = Params::kP;
  static constexpr std::uint64_t kQ = Params::kQ;
  static constexpr GroupId kId = Params::kId;
  static constexpr std::string_view kName = Params::kName;
  static constexpr std::size_t kElementSize = detail::byte_length(kP);
  static constexpr std::size_t kScalarSize = detail::byte_length(kQ);
  static constexpr std::uint64_t kOrderFloor = kQ;

  static_assert(kP < (std::uint64_t{1} << 63));
  static_assert((kP - 1) % kQ == 0);

  class Scalar {
   public:
    constexpr Scalar() = default;

    friend Scalar operator+(Scalar a, Scalar b) {
      std::uint64_t s = a.v_ + b.v_;
      return Scalar(s >= kQ ? s - kQ : s);
    }
    friend Scalar operator-(Scalar a, Scalar b) {
      return Scalar(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kQ - b.v_);
    }
    friend Scalar operator*(Scalar a, Scalar b) {
      return Scalar(detail::mulmod(a.v_, b.v_, kQ));
    }
    Scalar operator-() const { return Scalar(v_ == 0 ? 0 : kQ - v_); }
    friend bool operator==(Scalar, Scalar) = default;

    Scalar inverse() const {
      if (v_ == 0) throw Error(Errc::kInvalidArgument, "inverse of zero");
      return Scalar(detail::powmod(v_, kQ - 2, kQ));
    }
    bool is_zero() const { return v_ == 0; }
    std::uint64_t value() const { return v_; }

    Bytes encode() const {
      Bytes out;
      out.reserve(kScalarSize);
      detail::put_be(v_, kScalarSize, out);
      return out;
    }

   private:
    friend class ModpGroup;
    constexpr explicit Scalar(std::uint64_t v) : v_(v) {}
    std::uint64_t v_ = 0;
  };

  class Element {
   public:
    constexpr Element() = default;

    friend Element operator*(Element a, Element b) {
      return Element(detail::mulmod(a.v_, b.v_, kP));
    }
    friend Element operator/(Element a, Element b) { return a * b.inverse(); }
    friend bool operator==(Element, Element) = default;

    // x^(q-1) = x^-1 inside the order-q subgroup.
    Element inverse() const { return Element(detail::powmod(v_, kQ - 1, kP)); }
    Element pow(Scalar e) const { return Element(detail::powmod(v_, e.v_, kP)); }
    std::uint64_t value() const { return v_; }

    Bytes encode() const {
      Bytes out;
      out.reserve(kElementSize);
      detail::put_be(v_, kElementSize, out);
      return out;
    }

   private:
    friend class ModpGroup;
    constexpr explicit Element(std::uint64_t v) : v_(v) {}
    std::uint64_t v_ = 1;
  };

  static Element identity() { return Element(1); }
  static Element generator() { return Element(Params::kG); }
  static Element exp_g(Scalar e) { return generator().pow(e); }

  // Hash-to-group: SHA-256 of a fixed domain string and counter, raised to
  // the cofactor. Nobody learns log_g(gamma) along the way.
  static Element gamma() {
    static const Element value = [] {
      for (std::uint32_t ctr = 0;; ++ctr) {
        ByteWriter w;
        w.u32(ctr);
        Digest d = Sha256()
                       .update("zorro/v1/gamma/")
                       .update(kName)
                       .update(w.bytes())
                       .finish();
        std::uint64_t v = detail::reduce_be(d, kP);
        if (v == 0) continue;
        std::uint64_t e = detail::powmod(v, (kP - 1) / kQ, kP);
        if (e != 1) return Element(e);
      }
    }();
    return value;
  }

  static Scalar scalar(std::int64_t v) {
    if (v >= 0) return Scalar(static_cast<std::uint64_t>(v) % kQ);
    std::uint64_t mag = (static_cast<std::uint64_t>(-(v + 1)) + 1) % kQ;
    return Scalar(mag == 0 ? 0 : kQ - mag);
  }
  static Scalar scalar_from_bytes(ByteView bytes) {
    return Scalar(detail::reduce_be(bytes, kQ));
  }

  static Element decode_element(ByteView bytes) {
    if (bytes.size() != kElementSize) {
      throw Error(Errc::kMalformedEncoding, "element has wrong length");
    }
    std::uint64_t v = detail::get_be(bytes);
    if (v == 0 || v >= kP) {
      throw Error(Errc::kMalformedEncoding, "residue out of range");
    }
    if (detail::powmod(v, kQ, kP) != 1) {
      throw Error(Errc::kNotInSubgroup, "residue outside order-q subgroup");
    }
    return Element(v);
  }
  static Scalar decode_scalar(ByteView bytes) {
    if (bytes.size() != kScalarSize) {
      throw Error(Errc::kMalformedEncoding, "scalar has wrong length");
    }
    std::uint64_t v = detail::get_be(bytes);
    if (v >= kQ) throw Error(Errc::kMalformedEncoding, "scalar not reduced");
    return Scalar(v);
  }

  // Test-group helpers for exhaustive enumeration.
  static Element element_from_residue(std::uint64_t v) {
    Bytes b;
    detail::put_be(v, kElementSize, b);
    return decode_element(b);
  }
  static Scalar scalar_from_u64(std::uint64_t v) { return Scalar(v % kQ); }
};

struct Toy23Params {
  static constexpr std::uint64_t kP = 23;
  static constexpr std::uint64_t kQ = 11;
  static constexpr std::uint64_t kG = 2;
  static constexpr GroupId kId = GroupId::kToy23;
  static constexpr std::string_view kName = "toy23";
};

struct Schnorr64Params {
  static constexpr std::uint64_t kP = 9223372036854771239ULL;
  static constexpr std::uint64_t kQ = 4611686018427385619ULL;
  static constexpr std::uint64_t kG = 4;
  static constexpr GroupId kId = GroupId::kSchnorr64;
  static constexpr std::string_view kName = "schnorr64";
};

// Exhaustively testable group: 11 elements.
using Toy23 = ModpGroup<Toy23Params>;
// Fast desk-scale test group; large enough that Fiat-Shamir challenges cannot
// be ground, far too small for real security.
using Schnorr64 = ModpGroup<Schnorr64Params>;

static_assert(Group<Toy23>);
static_assert(Group<Schnorr64>);

}  // namespace zorro

#endif  // ZORRO_MODP_GROUP_HPP_
