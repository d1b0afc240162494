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

#ifndef ZORRO_REDUCTIONS_REGRESSION_HPP_
#define ZORRO_REDUCTIONS_REGRESSION_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zorro/error.hpp"
#include "zorro/policy.hpp"
#include "zorro/reductions/encoded.hpp"
#include "zorro/reductions/fixed_point.hpp"

// Least squares over horizontally partitioned data. Each party contributes
// X_i^T X_i and X_i^T Y_i computed on fixed-point inputs; the common scale
// factor f^2 cancels in beta = (X^T X)^-1 X^T Y.
namespace zorro {

struct RegressionTensors {
  std::size_t d = 0;
  std::vector<std::int64_t> gram;    // d x d, row-major
  std::vector<std::int64_t> moment;  // d

  std::vector<std::int64_t> flatten() const {
    std::vector<std::int64_t> out(gram);
    out.insert(out.end(), moment.begin(), moment.end());
    return out;
  }
};

inline Eigen::MatrixXd with_intercept(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd out(x.rows(), x.cols() + 1);
  out.col(0).setOnes();
  out.rightCols(x.cols()) = x;
  return out;
}

inline RegressionTensors local_tensors(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                       const FixedPoint& fp) {
  if (x.rows() != y.rows()) {
    throw Error(Errc::kShapeMismatch, "design matrix and response differ in length");
  }
  const auto rows = static_cast<std::size_t>(x.rows());
  const auto d = static_cast<std::size_t>(x.cols());
  std::vector<std::int64_t> xi(rows * d), yi(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    yi[r] = fp.encode(y(static_cast<Eigen::Index>(r)));
    for (std::size_t c = 0; c < d; ++c) {
      xi[r * d + c] = fp.encode(x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
    }
  }
  auto narrow = [](__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
      throw Error(Errc::kBoundExceeded, "regression tensor entry overflows 64 bits");
    }
    return static_cast<std::int64_t>(v);
  };
  RegressionTensors t;
  t.d = d;
  t.gram.resize(d * d);
  t.moment.resize(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      __int128 s = 0;
      for (std::size_t r = 0; r < rows; ++r) s += __int128{xi[r * d + a]} * xi[r * d + b];
      t.gram[a * d + b] = narrow(s);
    }
    __int128 s = 0;
    for (std::size_t r = 0; r < rows; ++r) s += __int128{xi[r * d + a]} * yi[r];
    t.moment[a] = narrow(s);
  }
  return t;
}

inline EncodedContribution encode_regression(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                             const FixedPoint& fp, std::uint64_t bound) {
  auto values = local_tensors(x, y, fp).flatten();
  check_l2(values, bound);
  return {std::move(values), BoundPolicy::l2(bound)};
}

inline RegressionTensors decode_regression(std::span<const std::int64_t> sums, std::size_t d) {
  if (sums.size() != d * d + d) {
    throw Error(Errc::kShapeMismatch, "tally length does not match regression dimension");
  }
  RegressionTensors t;
  t.d = d;
  t.gram.assign(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(d * d));
  t.moment.assign(sums.begin() + static_cast<std::ptrdiff_t>(d * d), sums.end());
  return t;
}

inline Eigen::VectorXd solve_normal_equations(const Eigen::MatrixXd& gram,
                                              const Eigen::VectorXd& moment) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible()) throw Error(Errc::kSingularGram, "Gram matrix is singular");
  return lu.solve(moment);
}

inline Eigen::VectorXd solve_beta(const RegressionTensors& t) {
  const auto d = static_cast<Eigen::Index>(t.d);
  Eigen::MatrixXd gram(d, d);
  Eigen::VectorXd moment(d);
  for (Eigen::Index a = 0; a < d; ++a) {
    moment(a) = static_cast<double>(t.moment[static_cast<std::size_t>(a)]);
    for (Eigen::Index b = 0; b < d; ++b) {
      gram(a, b) = static_cast<double>(t.gram[static_cast<std::size_t>(a * d + b)]);
    }
  }
  return solve_normal_equations(gram, moment);
}

// Ordinary least squares on pooled real-valued data.
inline Eigen::VectorXd least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  return solve_normal_equations(x.transpose() * x, x.transpose() * y);
}

inline double mean_squared_error(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                 const Eigen::VectorXd& beta) {
  return (x * beta - y).squaredNorm() / static_cast<double>(y.size());
}

}  // namespace zorro

#endif  // ZORRO_REDUCTIONS_REGRESSION_HPP_
