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

#ifndef ZORRO_REDUCTIONS_ENCODED_HPP_
#define ZORRO_REDUCTIONS_ENCODED_HPP_

#include <cstdint>
#include <vector>

#include "zorro/policy.hpp"

namespace zorro {

// A party's input vector together with the validity policy it is proven
// against.
struct EncodedContribution {
  std::vector<std::int64_t> values;
  BoundPolicy policy;
};

}  // namespace zorro

#endif  // ZORRO_REDUCTIONS_ENCODED_HPP_
