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

#ifndef ZORRO_REDUCTIONS_ID3_HPP_
#define ZORRO_REDUCTIONS_ID3_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zorro/error.hpp"
#include "zorro/reductions/counts.hpp"
#include "zorro/reductions/encoded.hpp"

// Information gain of one candidate split. Each party submits only the
// per-value label counts D_v; the label totals c = sum_v D_v are recovered
// after the tally, so c never needs its own consistency proof.
namespace zorro {

// Shannon entropy in bits.
inline double compute_entropy(std::span<const std::int64_t> counts) {
  std::int64_t total = 0;
  for (auto c : counts) {
    if (c < 0) throw Error(Errc::kNegativeCount, "negative label count");
    total += c;
  }
  if (total == 0) throw Error(Errc::kEmptyDataset, "entropy of an empty set");
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

// gain = H(D) - sum_v |D_v|/|D| H(D_v); empty branches contribute nothing.
inline double compute_gain(std::span<const std::int64_t> labels,
                           std::span<const std::vector<std::int64_t>> branches) {
  std::int64_t total = 0;
  for (auto c : labels) total += c;
  double gain = compute_entropy(labels);
  for (const auto& b : branches) {
    if (b.size() != labels.size()) {
      throw Error(Errc::kShapeMismatch, "branch label count differs");
    }
    std::int64_t size = 0;
    for (auto c : b) size += c;
    if (size == 0) continue;
    gain -= static_cast<double>(size) / static_cast<double>(total) * compute_entropy(b);
  }
  return gain;
}

struct SplitCounts {
  std::vector<std::int64_t> labels;                  // c
  std::vector<std::vector<std::int64_t>> branches;   // D_v, one per feature value

  double gain() const { return compute_gain(labels, branches); }
};

// Row v of `branches` holds the label counts of samples with feature value v.
inline EncodedContribution encode_split(const CountMatrix& branches, std::uint64_t cap) {
  return encode_counts(branches, cap);
}

inline SplitCounts decode_split(std::span<const std::int64_t> sums, std::size_t values,
                                std::size_t labels) {
  CountMatrix m = decode_counts(sums, values, labels);
  SplitCounts out;
  out.labels.assign(labels, 0);
  for (std::size_t v = 0; v < values; ++v) {
    std::vector<std::int64_t> row(labels);
    for (std::size_t l = 0; l < labels; ++l) {
      row[l] = m.at(v, l);
      out.labels[l] += row[l];
    }
    out.branches.push_back(std::move(row));
  }
  return out;
}

// Local counts for one categorical feature over labeled samples.
inline CountMatrix split_counts(std::span<const std::size_t> feature,
                                std::span<const std::size_t> label, std::size_t values,
                                std::size_t labels) {
  if (feature.size() != label.size()) {
    throw Error(Errc::kShapeMismatch, "feature and label columns differ in length");
  }
  CountMatrix m(values, labels);
  for (std::size_t k = 0; k < feature.size(); ++k) {
    if (feature[k] >= values || label[k] >= labels) {
      throw Error(Errc::kInvalidArgument, "category index out of range", std::nullopt, k);
    }
    ++m.at(feature[k], label[k]);
  }
  return m;
}

}  // namespace zorro

#endif  // ZORRO_REDUCTIONS_ID3_HPP_
