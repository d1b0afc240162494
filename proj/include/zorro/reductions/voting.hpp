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

#ifndef ZORRO_REDUCTIONS_VOTING_HPP_
#define ZORRO_REDUCTIONS_VOTING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zorro/error.hpp"
#include "zorro/policy.hpp"
#include "zorro/reductions/encoded.hpp"

// Cumulative voting: each voter spreads at most B - 1 votes over m candidates.
namespace zorro {

inline void check_ballot(std::span<const std::int64_t> votes, std::uint64_t budget) {
  if (budget < 2) throw Error(Errc::kInvalidArgument, "vote budget B must be at least 2");
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < votes.size(); ++j) {
    if (votes[j] < 0) {
      throw Error(Errc::kIllegalBallot, "negative vote for candidate " + std::to_string(j),
                  std::nullopt, j);
    }
    total += static_cast<std::uint64_t>(votes[j]);
    if (total >= budget) {
      throw Error(Errc::kIllegalBallot,
                  "ballot casts " + std::to_string(total) + " votes, budget is " +
                      std::to_string(budget - 1));
    }
  }
}

inline EncodedContribution encode_ballot(std::span<const std::int64_t> votes,
                                         std::uint64_t budget) {
  check_ballot(votes, budget);
  return {std::vector<std::int64_t>(votes.begin(), votes.end()),
          BoundPolicy::l1(budget - 1)};
}

inline std::vector<std::int64_t> decode_tally(std::span<const std::int64_t> sums) {
  return {sums.begin(), sums.end()};
}

}  // namespace zorro

#endif  // ZORRO_REDUCTIONS_VOTING_HPP_
