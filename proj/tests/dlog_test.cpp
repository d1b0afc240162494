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

#include "zorro/dlog.hpp"
#include "zorro/modp_group.hpp"
#include "zorro/ristretto_group.hpp"

namespace zorro {
namespace {

template <class G>
std::int64_t solve(std::int64_t x, DlogWindow w) {
  return bsgs<G>(G::exp_g(G::scalar(x)), w);
}

TEST(Bsgs, ToyExhaustive) {
  for (std::int64_t x = 0; x <= 10; ++x) EXPECT_EQ(solve<Toy23>(x, {0, 10}), x);
  // Shifted window: the 11 residues map one-to-one onto [-5, 5].
  for (std::int64_t x = -5; x <= 5; ++x) EXPECT_EQ(solve<Toy23>(x, {-5, 5}), x);
  // 12 values would alias modulo q = 11.
  EXPECT_THROW(solve<Toy23>(0, {0, 11}), Error);
}

TEST(Bsgs, Schnorr64WindowEdges) {
  const DlogWindow w{-1000, 2500};
  for (std::int64_t x = -1000; x <= 2500; ++x) ASSERT_EQ(solve<Schnorr64>(x, w), x);
  for (std::int64_t x : {-1001, 2501, 1 << 20}) {
    try {
      solve<Schnorr64>(x, w);
      FAIL() << x;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kNotInWindow);
    }
  }
}

TEST(Bsgs, SingletonAndEmptyWindows) {
  EXPECT_EQ(solve<Schnorr64>(7, {7, 7}), 7);
  try {
    solve<Schnorr64>(7, {8, 7});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidArgument);
  }
}

TEST(Bsgs, RistrettoLargeWindowSample) {
  const DlogWindow w{0, 32000};
  for (std::int64_t x : {0, 1, 178, 179, 31999, 32000, 12345}) {
    EXPECT_EQ(solve<Ristretto255>(x, w), x);
  }
}

TEST(Bsgs, TablesAreMemoizedPerSize) {
  BsgsSolver<Schnorr64> solver;
  EXPECT_EQ(solver.cached_tables(), 0u);
  solver.solve(Schnorr64::exp_g(Schnorr64::scalar(5)), {0, 99});
  solver.solve(Schnorr64::exp_g(Schnorr64::scalar(50)), {10, 109});
  EXPECT_EQ(solver.cached_tables(), 1u);
  solver.solve(Schnorr64::exp_g(Schnorr64::scalar(5)), {0, 1000});
  EXPECT_EQ(solver.cached_tables(), 2u);
  EXPECT_EQ(BsgsSolver<Schnorr64>::table_size(100), 10u);
  EXPECT_EQ(BsgsSolver<Schnorr64>::table_size(101), 11u);
}

}  // namespace
}  // namespace zorro
