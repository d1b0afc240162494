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

#ifndef ZORRO_GROUP_HPP_
#define ZORRO_GROUP_HPP_

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "zorro/bytes.hpp"
#include "zorro/rng.hpp"

namespace zorro {

// Registry of group instantiations. The numeric tag and the name are written
// into ledger headers so that files are self-describing.
enum class GroupId : std::uint8_t {
  kToy23 = 1,         // p = 23, q = 11, g = 2
  kSchnorr64 = 2,     // p = 2q + 1 safe prime below 2^63, g = 4
  kRistretto255 = 3,  // prime-order group over Curve25519
};

// A cyclic group of prime order q written multiplicatively, together with its
// field of exponents. Elements and scalars are immutable values whose
// encode() output is fixed-length and canonical.
template <class G>
concept Group = requires(const typename G::Element& e,
                         const typename G::Scalar& s, ByteView bytes,
                         std::int64_t i) {
  { G::kId } -> std::convertible_to<GroupId>;
  { G::kName } -> std::convertible_to<std::string_view>;
  { G::kElementSize } -> std::convertible_to<std::size_t>;
  { G::kScalarSize } -> std::convertible_to<std::size_t>;
  // min(q, 2^64 - 1): windows and plaintext ranges are checked against it.
  { G::kOrderFloor } -> std::convertible_to<std::uint64_t>;
  { G::identity() } -> std::same_as<typename G::Element>;
  { G::generator() } -> std::same_as<typename G::Element>;
  { G::gamma() } -> std::same_as<typename G::Element>;
  { G::exp_g(s) } -> std::same_as<typename G::Element>;
  { e * e } -> std::same_as<typename G::Element>;
  { e / e } -> std::same_as<typename G::Element>;
  { e.inverse() } -> std::same_as<typename G::Element>;
  { e.pow(s) } -> std::same_as<typename G::Element>;
  { e == e } -> std::convertible_to<bool>;
  { e.encode() } -> std::same_as<Bytes>;
  { s + s } -> std::same_as<typename G::Scalar>;
  { s - s } -> std::same_as<typename G::Scalar>;
  { s * s } -> std::same_as<typename G::Scalar>;
  { -s } -> std::same_as<typename G::Scalar>;
  { s.inverse() } -> std::same_as<typename G::Scalar>;
  { s.is_zero() } -> std::convertible_to<bool>;
  { s == s } -> std::convertible_to<bool>;
  { s.encode() } -> std::same_as<Bytes>;
  { G::scalar(i) } -> std::same_as<typename G::Scalar>;
  { G::scalar_from_bytes(bytes) } -> std::same_as<typename G::Scalar>;
  { G::decode_element(bytes) } -> std::same_as<typename G::Element>;
  { G::decode_scalar(bytes) } -> std::same_as<typename G::Scalar>;
};

// Uniform scalar: 512 random bits reduced mod q, so the bias is negligible
// for every supported order.
template <Group G>
typename G::Scalar random_scalar(Rng& rng) {
  std::array<std::uint8_t, 64> wide;
  rng.fill(wide);
  return G::scalar_from_bytes(wide);
}

// Integer power of two as a scalar, used for digit weights.
template <Group G>
typename G::Scalar pow2_scalar(unsigned k) {
  typename G::Scalar two = G::scalar(2);
  typename G::Scalar acc = G::scalar(1);
  for (unsigned i = 0; i < k; ++i) acc = acc * two;
  return acc;
}

}  // namespace zorro

#endif  // ZORRO_GROUP_HPP_
