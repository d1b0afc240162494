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

#ifndef ZORRO_POLICY_HPP_
#define ZORRO_POLICY_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "zorro/bytes.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"

namespace zorro {

enum class NormKind : std::uint8_t { kNone = 0, kL1 = 1, kL2 = 2 };

constexpr std::string_view norm_kind_name(NormKind k) {
  switch (k) {
    case NormKind::kNone: return "none";
    case NormKind::kL1: return "l1";
    case NormKind::kL2: return "l2";
  }
  return "unknown";
}

inline NormKind parse_norm_kind(std::string_view s) {
  if (s == "none") return NormKind::kNone;
  if (s == "l1") return NormKind::kL1;
  if (s == "l2") return NormKind::kL2;
  throw Error(Errc::kInvalidArgument, "unknown norm kind '" + std::string(s) + "'");
}

inline std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Validity condition attached to a contribution.
//   L1: every entry >= 0 and the entry sum < 2^digits, digits = ceil(log2(B+1)).
//   L2: sum of squares < 2^digits, digits = ceil(log2(B^2+1)).
// Binary decomposition proves membership in [0, 2^digits), so the enforced
// bound is effective_bound() = 2^digits - 1, which is >= the nominal one.
struct BoundPolicy {
  NormKind kind = NormKind::kNone;
  std::uint64_t bound = 0;
  unsigned digits = 0;

  static constexpr std::uint64_t kMaxL1Bound = std::uint64_t{1} << 61;
  static constexpr std::uint64_t kMaxL2Bound = std::uint64_t{1} << 30;

  static BoundPolicy none() { return {}; }
  static BoundPolicy l1(std::uint64_t bound) {
    if (bound == 0 || bound > kMaxL1Bound) {
      throw Error(Errc::kInvalidArgument, "L1 bound out of range");
    }
    return {NormKind::kL1, bound,
            static_cast<unsigned>(std::bit_width(bound))};
  }
  static BoundPolicy l2(std::uint64_t bound) {
    if (bound == 0 || bound > kMaxL2Bound) {
      throw Error(Errc::kInvalidArgument, "L2 bound out of range");
    }
    return {NormKind::kL2, bound,
            static_cast<unsigned>(std::bit_width(bound * bound))};
  }
  static BoundPolicy make(NormKind kind, std::uint64_t bound) {
    switch (kind) {
      case NormKind::kNone: return none();
      case NormKind::kL1: return l1(bound);
      case NormKind::kL2: return l2(bound);
    }
    throw Error(Errc::kInvalidArgument, "unknown norm kind");
  }

  std::uint64_t effective_bound() const {
    return digits == 0 ? 0 : (std::uint64_t{1} << digits) - 1;
  }

  // Largest |entry| an accepted contribution can carry.
  std::uint64_t max_abs_entry() const {
    switch (kind) {
      case NormKind::kNone: return 0;
      case NormKind::kL1: return effective_bound();
      case NormKind::kL2: return isqrt(effective_bound());
    }
    return 0;
  }

  friend bool operator==(const BoundPolicy&, const BoundPolicy&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(static_cast<std::uint8_t>(kind)).u64(bound).u8(static_cast<std::uint8_t>(digits));
    return std::move(w).bytes();
  }
  static BoundPolicy read(ByteReader& r) {
    auto kind = r.u8();
    auto bound = r.u64();
    auto digits = r.u8();
    if (kind > 2) throw Error(Errc::kMalformedEncoding, "unknown norm kind");
    BoundPolicy p = make(static_cast<NormKind>(kind), bound);
    if (p.digits != digits) {
      throw Error(Errc::kMalformedEncoding, "digit count does not match bound");
    }
    return p;
  }

  std::string describe() const {
    std::string out(norm_kind_name(kind));
    if (kind != NormKind::kNone) {
      out += "(B=" + std::to_string(bound) + ", L=" + std::to_string(digits) +
             ", effective=" + std::to_string(effective_bound()) + ")";
    }
    return out;
  }
};

// Rejects parameter sets where honest values or sums could wrap around the
// group order, which would void both the range statement and the tally.
template <Group G>
void check_policy_fits(const BoundPolicy& policy, std::uint64_t m,
                       std::uint64_t n) {
  using u128 = unsigned __int128;
  const u128 q = G::kOrderFloor;
  const u128 eff = policy.effective_bound();
  bool fits = true;
  switch (policy.kind) {
    case NormKind::kNone:
      break;
    case NormKind::kL1:
      fits = u128{m} * eff < q && u128{n} * eff < q;
      break;
    case NormKind::kL2:
      fits = eff < q && 2 * u128{n} * policy.max_abs_entry() < q;
      break;
  }
  if (!fits) {
    throw Error(Errc::kParameterTooLarge,
                "policy " + policy.describe() + " does not fit the group order");
  }
}

}  // namespace zorro

#endif  // ZORRO_POLICY_HPP_
