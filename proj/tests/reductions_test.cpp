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


#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "support/honest_run.hpp"
#include "zorro/modp_group.hpp"
#include "zorro/reductions/cf.hpp"
#include "zorro/reductions/counts.hpp"
#include "zorro/reductions/id3.hpp"
#include "zorro/reductions/naive_bayes.hpp"
#include "zorro/reductions/regression.hpp"
#include "zorro/reductions/voting.hpp"

namespace zorro {
namespace {

// Runs the encodings through an honest protocol session and returns the tally.
std::vector<std::int64_t> aggregate(const std::vector<EncodedContribution>& parts,
                                    std::uint64_t seed) {
  using G = Schnorr64;
  SeededRng rng(seed);
  BoundPolicy policy = parts.front().policy;
  std::vector<std::vector<std::int64_t>> in;
  for (const auto& p : parts) {
    EXPECT_EQ(p.policy, policy);
    in.push_back(p.values);
  }
  auto cfg = testing::make_config(parts.size(), in.front().size(), policy, rng);
  auto run = testing::honest_run<G>(cfg, in, rng);
  for (const auto& p : run.round2) EXPECT_TRUE(verify_contribution<G>(cfg, run.round1, p));
  auto sums = tally<G>(cfg, run.round2).sums;
  EXPECT_EQ(sums, testing::plain_sum(in));
  return sums;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::kInvalidArgument;
}

TEST(Voting, Legality) {
  const std::vector<std::int64_t> ok{3, 0, 0}, over{2, 2, 0}, zero{0, 0, 0}, neg{-1, 1, 0};
  auto e = encode_ballot(ok, 4);
  EXPECT_EQ(e.policy, BoundPolicy::l1(3));
  EXPECT_EQ(e.values, ok);
  EXPECT_EQ(code_of([&] { encode_ballot(over, 4); }), Errc::kIllegalBallot);
  EXPECT_NO_THROW(encode_ballot(zero, 4));
  EXPECT_EQ(code_of([&] { encode_ballot(neg, 4); }), Errc::kIllegalBallot);
}

TEST(Voting, ThreeVotersTwoCandidates) {
  std::vector<EncodedContribution> parts;
  for (std::vector<std::int64_t> b : {std::vector<std::int64_t>{3, 0}, {1, 2}, {0, 1}}) {
    parts.push_back(encode_ballot(b, 4));
  }
  EXPECT_EQ(decode_tally(aggregate(parts, 1)), (std::vector<std::int64_t>{4, 3}));
}

TEST(Counts, LdaTwoByTwo) {
  CountMatrix a(2, 2, {1, 0, 2, 1}), b(2, 2, {0, 3, 1, 0});
  auto sums = aggregate({encode_counts(a, 4), encode_counts(b, 4)}, 2);
  auto t = decode_counts(sums, 2, 2);
  EXPECT_EQ(t, CountMatrix(2, 2, {1, 3, 3, 1}));
  CountMatrix pooled = a;
  pooled += b;
  EXPECT_EQ(t, pooled);
}

TEST(Counts, Errors) {
  EXPECT_EQ(code_of([] { encode_counts(CountMatrix(1, 2, {-1, 0}), 4); }), Errc::kNegativeCount);
  EXPECT_EQ(code_of([] { encode_counts(CountMatrix(1, 2, {3, 2}), 4); }), Errc::kCapExceeded);
  EXPECT_EQ(code_of([] { CountMatrix(2, 2, {1}); }), Errc::kShapeMismatch);
  EXPECT_EQ(encode_counts(CountMatrix(2, 2), 4).values, (std::vector<std::int64_t>(4, 0)));
}

TEST(Id3, EntropyAndGain) {
  EXPECT_DOUBLE_EQ(compute_entropy(std::vector<std::int64_t>{5, 5}), 1.0);
  EXPECT_DOUBLE_EQ(compute_entropy(std::vector<std::int64_t>{10, 0}), 0.0);
  EXPECT_NEAR(compute_entropy(std::vector<std::int64_t>{1, 2, 3}), 1.4591479170272448, 1e-12);
  EXPECT_EQ(code_of([] { compute_entropy(std::vector<std::int64_t>{0, 0}); }),
            Errc::kEmptyDataset);
  const std::vector<std::vector<std::int64_t>> branches{{3, 1}, {1, 3}};
  EXPECT_NEAR(compute_gain(std::vector<std::int64_t>{4, 4}, branches), 0.1887218755408671,
              1e-12);
}

TEST(Id3, DistributedSplitMatchesPooled) {
  // feature values / labels for three parties
  const std::vector<std::vector<std::size_t>> f{{0, 0, 1, 2}, {1, 1, 2}, {0, 2, 2, 1}};
  const std::vector<std::vector<std::size_t>> y{{0, 1, 1, 0}, {1, 1, 0}, {0, 0, 1, 1}};
  std::vector<EncodedContribution> parts;
  std::vector<std::size_t> pf, py;
  for (std::size_t k = 0; k < 3; ++k) {
    parts.push_back(encode_split(split_counts(f[k], y[k], 3, 2), 4));
    pf.insert(pf.end(), f[k].begin(), f[k].end());
    py.insert(py.end(), y[k].begin(), y[k].end());
  }
  auto split = decode_split(aggregate(parts, 3), 3, 2);
  auto pooled = split_counts(pf, py, 3, 2);
  for (std::size_t v = 0; v < 3; ++v) {
    for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(split.branches[v][l], pooled.at(v, l));
  }
  EXPECT_EQ(split.labels, (std::vector<std::int64_t>{5, 6}));
  EXPECT_DOUBLE_EQ(split.gain(), compute_gain(split.labels, split.branches));
}

TEST(NaiveBayes, SingleLabelAndCentralizedFit) {
  NbShape one{1, {2}};
  std::vector<LabeledSample> s1{{0, {1}}, {0, {0}}};
  auto model = nb_parameters(nb_counts(s1, one), one);
  EXPECT_DOUBLE_EQ(model.prior[0], 1.0);

  NbShape shape{2, {2, 3}};
  std::vector<std::vector<LabeledSample>> parties{
      {{0, {0, 0}}, {1, {1, 2}}, {0, {0, 1}}},
      {{1, {1, 1}}, {1, {0, 2}}},
      {{0, {1, 0}}, {0, {0, 0}}, {1, {1, 2}}}};
  std::vector<EncodedContribution> parts;
  std::vector<LabeledSample> pooled;
  for (const auto& p : parties) {
    parts.push_back(encode_nb(p, shape, 10));
    pooled.insert(pooled.end(), p.begin(), p.end());
  }
  auto m = nb_parameters(aggregate(parts, 4), shape);
  // Direct empirical estimates on the pooled samples.
  for (std::size_t l = 0; l < 2; ++l) {
    double cls = 0;
    for (const auto& s : pooled) cls += s.label == l;
    EXPECT_DOUBLE_EQ(m.prior[l], cls / static_cast<double>(pooled.size()));
    for (std::size_t i = 0; i < 2; ++i) {
      double norm = 0;
      for (std::size_t v = 0; v < shape.values[i]; ++v) {
        double c = 0;
        for (const auto& s : pooled) c += s.label == l && s.features[i] == v;
        EXPECT_DOUBLE_EQ(m.cond[i][l][v], c / cls);
        norm += m.cond[i][l][v];
      }
      EXPECT_NEAR(norm, 1.0, 1e-12);
    }
  }
}

TEST(NaiveBayes, ZeroCountsAndSmoothing) {
  NbShape shape{2, {3}};
  std::vector<LabeledSample> s{{0, {0}}, {0, {1}}};
  auto counts = nb_counts(s, shape);
  EXPECT_EQ(code_of([&] { nb_parameters(counts, shape); }), Errc::kZeroClassCount);
  auto m = nb_parameters(counts, shape, true);
  EXPECT_GT(m.cond[0][0][2], 0.0);
  EXPECT_DOUBLE_EQ(m.cond[0][0][2], 1.0 / 5.0);
  EXPECT_EQ(code_of([&] { nb_parameters(std::vector<std::int64_t>(shape.size(), 0), shape); }),
            Errc::kEmptyDataset);
}

TEST(Regression, ExactLine) {
  Eigen::MatrixXd x(5, 1);
  Eigen::VectorXd y(5);
  for (int i = 0; i < 5; ++i) {
    x(i, 0) = i + 1;
    y(i) = 2.0 * (i + 1);
  }
  FixedPoint fp{1.0, Rounding::kFloor};
  auto e = encode_regression(x, y, fp, 200);
  EXPECT_EQ(e.policy.kind, NormKind::kL2);
  auto beta = solve_beta(decode_regression(aggregate({e, encode_regression(x, y, fp, 200)}, 5), 1));
  EXPECT_DOUBLE_EQ(beta(0), 2.0);
}

TEST(Regression, ThreeWaySplitMatchesCentralized) {
  std::mt19937_64 gen(6);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Eigen::MatrixXd x(30, 2);
  Eigen::VectorXd y(30);
  for (int r = 0; r < 30; ++r) {
    x(r, 0) = u(gen);
    x(r, 1) = u(gen);
    y(r) = 1.5 - 2.0 * x(r, 0) + 0.5 * x(r, 1) + noise(gen);
  }
  const Eigen::MatrixXd xd = with_intercept(x);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(3, 3);
  Eigen::VectorXd moment = Eigen::VectorXd::Zero(3);
  for (int k = 0; k < 3; ++k) {
    const auto xs = xd.middleRows(k * 10, 10);
    const auto ys = y.segment(k * 10, 10);
    gram += xs.transpose() * xs;
    moment += xs.transpose() * ys;
  }
  EXPECT_LT((solve_normal_equations(gram, moment) - least_squares(xd, y)).norm(), 1e-9);
}

TEST(Regression, SingularGram) {
  RegressionTensors t{2, {1, 1, 1, 1}, {1, 1}};
  EXPECT_EQ(code_of([&] { solve_beta(t); }), Errc::kSingularGram);
}

TEST(Regression, BoundEnforced) {
  Eigen::MatrixXd x(2, 1);
  x << 10, 10;
  Eigen::VectorXd y(2);
  y << 10, 10;
  EXPECT_EQ(code_of([&] { encode_regression(x, y, FixedPoint{}, 100); }), Errc::kBoundExceeded);
}

TEST(FixedPointCodec, Rounding) {
  FixedPoint floor{4.0, Rounding::kFloor}, ceil{4.0, Rounding::kCeil};
  EXPECT_EQ(floor.encode(1.3), 5);
  EXPECT_EQ(ceil.encode(1.3), 6);
  EXPECT_EQ(floor.encode(-1.3), -6);
  EXPECT_EQ(ceil.encode(-1.3), -5);
  EXPECT_DOUBLE_EQ(floor.decode(6), 1.5);
  EXPECT_EQ(parse_rounding("ceil"), Rounding::kCeil);
  EXPECT_THROW(parse_rounding("nearest"), Error);
}

TEST(Cf, OrthogonalFactorAndUnratedUser) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(3, 3);
  Eigen::RowVectorXd p(3);
  p << 5, 1, 3;
  EXPECT_LT(cf_gradient(a, p).norm(), 1e-12);
  Eigen::MatrixXd q(2, 2);
  q << std::cos(0.3), -std::sin(0.3), std::sin(0.3), std::cos(0.3);
  Eigen::RowVectorXd p2(2);
  p2 << 4, 2;
  EXPECT_LT(cf_gradient(q, p2).norm(), 1e-12);
  Eigen::MatrixXd rect = Eigen::MatrixXd::Random(2, 4);
  EXPECT_EQ(cf_gradient(rect, Eigen::RowVectorXd::Zero(4)).norm(), 0.0);
  EXPECT_EQ(code_of([&] { cf_gradient(rect, p); }), Errc::kShapeMismatch);
}

TEST(Cf, DistributedGradientWithinTolerance) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_int_distribution<int> rating(0, 5);
  const int k = 2, m = 4, n = 3;
  Eigen::MatrixXd a(k, m);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < m; ++c) a(r, c) = u(gen);
  }
  const FixedPoint fp{64.0, Rounding::kFloor};
  std::vector<EncodedContribution> parts;
  Eigen::MatrixXd central = Eigen::MatrixXd::Zero(k, m);
  for (int i = 0; i < n; ++i) {
    Eigen::RowVectorXd p(m);
    for (int c = 0; c < m; ++c) p(c) = rating(gen);
    central += cf_gradient(a, p);
    parts.push_back(encode_cf_gradient(a, p, fp, 1 << 15));
  }
  auto g = decode_cf_gradient(aggregate(parts, 8), k, m, fp);
  EXPECT_LE((g - central).cwiseAbs().maxCoeff(), 2.0 * n / fp.scale);
  auto next = cf_gradient_step(g, a, 0.01);
  EXPECT_LT((next - (a + 0.01 * g)).norm(), 1e-15);
  EXPECT_EQ(code_of([&] { encode_cf_gradient(a, Eigen::RowVectorXd::Constant(m, 5), fp, 1); }),
            Errc::kBoundExceeded);
}

}  // namespace
}  // namespace zorro
