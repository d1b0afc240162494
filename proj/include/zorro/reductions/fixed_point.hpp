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

#ifndef ZORRO_REDUCTIONS_FIXED_POINT_HPP_
#define ZORRO_REDUCTIONS_FIXED_POINT_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>

#include "zorro/error.hpp"

namespace zorro {

enum class Rounding { kFloor, kCeil };

inline Rounding parse_rounding(std::string_view s) {
  if (s == "floor") return Rounding::kFloor;
  if (s == "ceil") return Rounding::kCeil;
  throw Error(Errc::kInvalidArgument, "unknown rounding mode '" + std::string(s) + "'");
}

// Real x is carried as the integer round(f x).
struct FixedPoint {
  double scale = 1.0;
  Rounding rounding = Rounding::kFloor;

  std::int64_t encode(double x) const {
    const double v = rounding == Rounding::kFloor ? std::floor(x * scale) : std::ceil(x * scale);
    if (!std::isfinite(v) || std::fabs(v) > 9.0e15) {
      throw Error(Errc::kBoundExceeded, "value does not fit the fixed-point range");
    }
    return static_cast<std::int64_t>(v);
  }
  double decode(std::int64_t v) const { return static_cast<double>(v) / scale; }
};

// Fails closed when sum v^2 > bound^2.
inline void check_l2(std::span<const std::int64_t> values, std::uint64_t bound) {
  unsigned __int128 s = 0;
  const unsigned __int128 limit = static_cast<unsigned __int128>(bound) * bound;
  for (auto v : values) {
    const auto a = static_cast<unsigned __int128>(v < 0 ? -static_cast<__int128>(v) : v);
    s += a * a;
    if (s > limit) {
      throw Error(Errc::kBoundExceeded,
                  "L2 norm of encoded values exceeds " + std::to_string(bound));
    }
  }
}

}  // namespace zorro

#endif  // ZORRO_REDUCTIONS_FIXED_POINT_HPP_
