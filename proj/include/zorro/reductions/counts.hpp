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

#ifndef ZORRO_REDUCTIONS_COUNTS_HPP_
#define ZORRO_REDUCTIONS_COUNTS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zorro/error.hpp"
#include "zorro/policy.hpp"
#include "zorro/reductions/encoded.hpp"

// Non-negative count matrices (LDA word/topic counts and friends), flattened
// row-major and proven under an L1 cap.
namespace zorro {

struct CountMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  CountMatrix() = default;
  CountMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  CountMatrix(std::size_t r, std::size_t c, std::vector<std::int64_t> d)
      : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols) {
      throw Error(Errc::kShapeMismatch, "count matrix data does not match shape");
    }
  }

  std::int64_t& at(std::size_t r, std::size_t c) { return data.at(r * cols + c); }
  std::int64_t at(std::size_t r, std::size_t c) const { return data.at(r * cols + c); }

  CountMatrix& operator+=(const CountMatrix& o) {
    if (o.rows != rows || o.cols != cols) {
      throw Error(Errc::kShapeMismatch, "count matrix shapes differ");
    }
    for (std::size_t k = 0; k < data.size(); ++k) data[k] += o.data[k];
    return *this;
  }
  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;
};

inline void check_counts(std::span<const std::int64_t> values, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 0) {
      throw Error(Errc::kNegativeCount, "negative count at index " + std::to_string(k),
                  std::nullopt, k);
    }
    total += static_cast<std::uint64_t>(values[k]);
  }
  if (total > cap) {
    throw Error(Errc::kCapExceeded,
                "counts total " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
  }
}

inline EncodedContribution encode_counts(const CountMatrix& matrix, std::uint64_t cap) {
  if (matrix.data.empty()) throw Error(Errc::kShapeMismatch, "empty count matrix");
  check_counts(matrix.data, cap);
  return {matrix.data, BoundPolicy::l1(cap)};
}

inline CountMatrix decode_counts(std::span<const std::int64_t> sums, std::size_t rows,
                                 std::size_t cols) {
  if (sums.size() != rows * cols) {
    throw Error(Errc::kShapeMismatch, "tally length does not match matrix shape");
  }
  return CountMatrix(rows, cols, std::vector<std::int64_t>(sums.begin(), sums.end()));
}

}  // namespace zorro

#endif  // ZORRO_REDUCTIONS_COUNTS_HPP_
