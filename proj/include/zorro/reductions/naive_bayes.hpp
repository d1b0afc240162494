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

#ifndef ZORRO_REDUCTIONS_NAIVE_BAYES_HPP_
#define ZORRO_REDUCTIONS_NAIVE_BAYES_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "zorro/error.hpp"
#include "zorro/reductions/counts.hpp"
#include "zorro/reductions/encoded.hpp"

// Categorical naive Bayes from aggregated counts.
// Vector layout: |y=l| for every label, then for each feature i a
// values_i x labels block of |x_i=v, y=l|.
namespace zorro {

struct NbShape {
  std::size_t labels = 0;
  std::vector<std::size_t> values;  // per feature

  std::size_t size() const {
    std::size_t n = labels;
    for (auto v : values) n += v * labels;
    return n;
  }
  std::size_t offset(std::size_t feature) const {
    std::size_t o = labels;
    for (std::size_t i = 0; i < feature; ++i) o += values[i] * labels;
    return o;
  }
};

struct LabeledSample {
  std::size_t label = 0;
  std::vector<std::size_t> features;
};

inline std::vector<std::int64_t> nb_counts(std::span<const LabeledSample> samples,
                                           const NbShape& shape) {
  std::vector<std::int64_t> out(shape.size(), 0);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto& x = samples[s];
    if (x.label >= shape.labels || x.features.size() != shape.values.size()) {
      throw Error(Errc::kShapeMismatch, "sample does not match shape", std::nullopt, s);
    }
    ++out[x.label];
    for (std::size_t i = 0; i < x.features.size(); ++i) {
      if (x.features[i] >= shape.values[i]) {
        throw Error(Errc::kInvalidArgument, "feature value out of range", std::nullopt, s);
      }
      ++out[shape.offset(i) + x.features[i] * shape.labels + x.label];
    }
  }
  return out;
}

inline EncodedContribution encode_nb(std::span<const LabeledSample> samples,
                                     const NbShape& shape, std::uint64_t cap) {
  auto counts = nb_counts(samples, shape);
  check_counts(counts, cap);
  return {std::move(counts), BoundPolicy::l1(cap)};
}

struct NbModel {
  std::vector<double> prior;                           // Pr(y = l)
  std::vector<std::vector<std::vector<double>>> cond;  // [feature][label][value]

  std::size_t predict(std::span<const std::size_t> features) const {
    std::size_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < prior.size(); ++l) {
      double s = std::log(prior[l]);
      for (std::size_t i = 0; i < features.size(); ++i) s += std::log(cond[i][l][features[i]]);
      if (s > best_score) {
        best_score = s;
        best = l;
      }
    }
    return best;
  }
};

// Empirical estimates; with `laplace` the conditionals use add-one smoothing.
inline NbModel nb_parameters(std::span<const std::int64_t> sums, const NbShape& shape,
                             bool laplace = false) {
  if (sums.size() != shape.size()) {
    throw Error(Errc::kShapeMismatch, "tally length does not match naive Bayes shape");
  }
  std::int64_t total = 0;
  for (std::size_t l = 0; l < shape.labels; ++l) total += sums[l];
  if (total <= 0) throw Error(Errc::kEmptyDataset, "no samples");
  NbModel model;
  for (std::size_t l = 0; l < shape.labels; ++l) {
    model.prior.push_back(static_cast<double>(sums[l]) / static_cast<double>(total));
  }
  for (std::size_t i = 0; i < shape.values.size(); ++i) {
    const std::size_t vals = shape.values[i];
    std::vector<std::vector<double>> per_label(shape.labels, std::vector<double>(vals));
    for (std::size_t l = 0; l < shape.labels; ++l) {
      const auto class_count = static_cast<double>(sums[l]);
      if (sums[l] == 0 && !laplace) {
        throw Error(Errc::kZeroClassCount,
                    "label " + std::to_string(l) + " has no samples", std::nullopt, l);
      }
      const double denom = class_count + (laplace ? static_cast<double>(vals) : 0.0);
      for (std::size_t v = 0; v < vals; ++v) {
        const auto c = static_cast<double>(sums[shape.offset(i) + v * shape.labels + l]);
        per_label[l][v] = (c + (laplace ? 1.0 : 0.0)) / denom;
      }
    }
    model.cond.push_back(std::move(per_label));
  }
  return model;
}

}  // namespace zorro

#endif  // ZORRO_REDUCTIONS_NAIVE_BAYES_HPP_
