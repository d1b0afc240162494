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

#ifndef ZORRO_ERROR_HPP_
#define ZORRO_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zorro {

enum class Errc {
  kMalformedEncoding,
  kNotInSubgroup,
  kEntropyFailure,
  kNotInWindow,
  kInvalidArgument,
  kInvalidStatement,
  kKeyMismatch,
  kBoundExceeded,
  kNegativeEntry,
  kParameterTooLarge,
  kMissingPost,
  kInvalidRound1Proof,
  kSessionAborted,
  kProtocolState,
  kDuplicatePost,
  kChainBroken,
  kIllegalBallot,
  kNegativeCount,
  kCapExceeded,
  kEmptyDataset,
  kZeroClassCount,
  kSingularGram,
  kShapeMismatch,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kMalformedEncoding: return "MalformedEncoding";
    case Errc::kNotInSubgroup: return "NotInSubgroup";
    case Errc::kEntropyFailure: return "EntropyFailure";
    case Errc::kNotInWindow: return "NotInWindow";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kInvalidStatement: return "InvalidStatement";
    case Errc::kKeyMismatch: return "KeyMismatch";
    case Errc::kBoundExceeded: return "BoundExceeded";
    case Errc::kNegativeEntry: return "NegativeEntry";
    case Errc::kParameterTooLarge: return "ParameterTooLarge";
    case Errc::kMissingPost: return "MissingPost";
    case Errc::kInvalidRound1Proof: return "InvalidRound1Proof";
    case Errc::kSessionAborted: return "SessionAborted";
    case Errc::kProtocolState: return "ProtocolState";
    case Errc::kDuplicatePost: return "DuplicatePost";
    case Errc::kChainBroken: return "ChainBroken";
    case Errc::kIllegalBallot: return "IllegalBallot";
    case Errc::kNegativeCount: return "NegativeCount";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kEmptyDataset: return "EmptyDataset";
    case Errc::kZeroClassCount: return "ZeroClassCount";
    case Errc::kSingularGram: return "SingularGram";
    case Errc::kShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

// Every failure raised by the library. `party` and `index` carry the culprit
// (1-based party, 0-based slot or ledger seq) when the error is attributable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::size_t> party = std::nullopt,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        party_(party),
        index_(index) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> party() const noexcept { return party_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> party_;
  std::optional<std::size_t> index_;
};

}  // namespace zorro

#endif  // ZORRO_ERROR_HPP_
