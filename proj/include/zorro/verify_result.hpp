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

#ifndef ZORRO_VERIFY_RESULT_HPP_
#define ZORRO_VERIFY_RESULT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace zorro {

// Why a verifier rejected. Rejections are attributable: `index` names the
// slot, digit or party that failed first.
enum class Reason : std::uint8_t {
  kOk = 0,
  kMalformed,
  kPolicy,
  kShape,
  kTuple,
  kConsistency,
  kBit,
  kSquare,
  kRecomposition,
  kRound1Proof,
  kRound1Link,
  kMissingPost,
};

constexpr std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::kOk: return "ok";
    case Reason::kMalformed: return "malformed";
    case Reason::kPolicy: return "policy";
    case Reason::kShape: return "shape";
    case Reason::kTuple: return "tuple";
    case Reason::kConsistency: return "consistency";
    case Reason::kBit: return "bit";
    case Reason::kSquare: return "square";
    case Reason::kRecomposition: return "recomposition";
    case Reason::kRound1Proof: return "round1-proof";
    case Reason::kRound1Link: return "round1-link";
    case Reason::kMissingPost: return "missing-post";
  }
  return "unknown";
}

struct VerifyResult {
  Reason reason = Reason::kOk;
  std::size_t index = 0;
  std::string detail;

  static VerifyResult pass() { return {}; }
  static VerifyResult fail(Reason reason, std::size_t index = 0,
                           std::string detail = {}) {
    return VerifyResult{reason, index, std::move(detail)};
  }

  bool ok() const { return reason == Reason::kOk; }
  explicit operator bool() const { return ok(); }

  std::string describe() const {
    if (ok()) return "ok";
    std::string out(reason_name(reason));
    out += " check failed at index " + std::to_string(index);
    if (!detail.empty()) out += " (" + detail + ")";
    return out;
  }
};

}  // namespace zorro

#endif  // ZORRO_VERIFY_RESULT_HPP_
