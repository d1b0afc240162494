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

#ifndef ZORRO_REDUCTIONS_CF_HPP_
#define ZORRO_REDUCTIONS_CF_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zorro/error.hpp"
#include "zorro/policy.hpp"
#include "zorro/reductions/encoded.hpp"
#include "zorro/reductions/fixed_point.hpp"

// Collaborative filtering: the shared k x m factor A is updated with the sum
// of per-user gradients G_i = A P_i^T P_i (I - A^T A).
namespace zorro {

inline Eigen::MatrixXd cf_gradient(const Eigen::MatrixXd& a, const Eigen::RowVectorXd& p) {
  if (p.cols() != a.cols()) {
    throw Error(Errc::kShapeMismatch, "ratings length differs from item count");
  }
  const Eigen::Index m = a.cols();
  const Eigen::MatrixXd residual = Eigen::MatrixXd::Identity(m, m) - a.transpose() * a;
  return (a * p.transpose()) * (p * residual);
}

inline EncodedContribution encode_cf_gradient(const Eigen::MatrixXd& a,
                                              const Eigen::RowVectorXd& p,
                                              const FixedPoint& fp, std::uint64_t bound) {
  const Eigen::MatrixXd g = cf_gradient(a, p);
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(g.size()));
  for (Eigen::Index r = 0; r < g.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.cols(); ++c) values.push_back(fp.encode(g(r, c)));
  }
  check_l2(values, bound);
  return {std::move(values), BoundPolicy::l2(bound)};
}

inline Eigen::MatrixXd decode_cf_gradient(std::span<const std::int64_t> sums, std::size_t k,
                                          std::size_t m, const FixedPoint& fp) {
  if (sums.size() != k * m) {
    throw Error(Errc::kShapeMismatch, "tally length does not match k x m");
  }
  Eigen::MatrixXd g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = fp.decode(sums[r * m + c]);
    }
  }
  return g;
}

// Ascent step A + step G.
inline Eigen::MatrixXd cf_gradient_step(const Eigen::MatrixXd& g, const Eigen::MatrixXd& a,
                                        double step) {
  if (g.rows() != a.rows() || g.cols() != a.cols()) {
    throw Error(Errc::kShapeMismatch, "gradient and factor shapes differ");
  }
  return a + step * g;
}

}  // namespace zorro

#endif  // ZORRO_REDUCTIONS_CF_HPP_
