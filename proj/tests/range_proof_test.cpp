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

#include "zorro/modp_group.hpp"
#include "zorro/range_proof.hpp"
#include "zorro/ristretto_group.hpp"

namespace zorro {
namespace {

// A party's view: values, randomness x_j, pads h_j, the resulting ciphertexts
// and a long-term key distinct from every pad.
template <class G>
struct Fixture {
  std::vector<std::int64_t> values;
  std::vector<typename G::Scalar> x;
  std::vector<typename G::Element> pads;
  std::vector<Ciphertext<G>> cts;
  Keypair<G> key;

  Fixture(std::vector<std::int64_t> v, Rng& rng) : values(std::move(v)) {
    key = Keypair<G>::generate(rng);
    for (std::size_t j = 0; j < values.size(); ++j) {
      x.push_back(random_scalar<G>(rng));
      typename G::Element h;
      do {
        h = G::exp_g(random_scalar<G>(rng));
      } while (h == key.pk);
      pads.push_back(h);
      cts.push_back(encrypt_exp<G>(values[j], x[j], h));
    }
  }
  RangeWitness<G> witness() const { return {values, x, pads, key.pk}; }
};

const Transcript kCtx("test/range");

template <class G>
class RangeTyped : public ::testing::Test {};
using AllGroups = ::testing::Types<Toy23, Schnorr64, Ristretto255>;
TYPED_TEST_SUITE(RangeTyped, AllGroups);

TYPED_TEST(RangeTyped, L1Completeness) {
  using G = TypeParam;
  SeededRng rng(10);
  const std::uint64_t bound = std::is_same_v<G, Toy23> ? 3 : 20;
  const std::size_t max_m = std::is_same_v<G, Toy23> ? 2 : 6;
  const auto policy = BoundPolicy::l1(bound);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + trial % max_m;
    std::vector<std::int64_t> v(m, 0);
    auto total = rng.uniform(0, static_cast<std::int64_t>(bound));
    for (std::int64_t u = 0; u < total; ++u) ++v[rng.uniform(0, m - 1)];
    Fixture<G> f(v, rng);
    auto proof = prove_l1<G>(f.witness(), policy, kCtx, rng);
    auto r = verify_l1<G>(f.cts, f.pads, proof, policy, kCtx);
    EXPECT_TRUE(r) << r.describe();
    const Bytes enc = proof.encode();
    ByteReader rd(enc);
    EXPECT_EQ(L1RangeProof<G>::read(rd), proof);
    EXPECT_NO_THROW(rd.finish());
  }
}

TYPED_TEST(RangeTyped, L2Completeness) {
  using G = TypeParam;
  SeededRng rng(11);
  const std::uint64_t bound = std::is_same_v<G, Toy23> ? 1 : 12;
  const auto policy = BoundPolicy::l2(bound);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + trial % 12;
    const auto w = static_cast<std::int64_t>(bound / std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(m))));
    std::vector<std::int64_t> v(m);
    std::uint64_t s = 0;
    for (auto& t : v) {
      t = rng.uniform(-w, w);
      s += static_cast<std::uint64_t>(t * t);
    }
    if (s > policy.effective_bound()) continue;
    Fixture<G> f(v, rng);
    L2Trace<G> trace;
    auto proof = prove_l2<G>(f.witness(), policy, kCtx, rng, &trace);
    auto r = verify_l2<G>(f.cts, f.pads, proof, policy, kCtx);
    EXPECT_TRUE(r) << r.describe();
    EXPECT_EQ(proof.squares.size(), padded_length(m, policy.digits));
    const Bytes enc = proof.encode();
    ByteReader rd(enc);
    EXPECT_EQ(L2RangeProof<G>::read(rd), proof);
  }
}

// Noise terms cancel and the squares recombine into the digit encryptions.
TEST(L2, NoiseCancellationAndConsistencyIdentity) {
  using G = Schnorr64;
  SeededRng rng(12);
  const auto policy = BoundPolicy::l2(32);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::int64_t> v(1 + trial % 15);
    for (auto& t : v) t = rng.uniform(-8, 8);
    Fixture<G> f(v, rng);
    L2Trace<G> trace;
    auto proof = prove_l2<G>(f.witness(), policy, kCtx, rng, &trace);
    G::Scalar noise = G::scalar(0);
    for (const auto& r : trace.noise) noise = noise + r;
    EXPECT_EQ(noise, G::scalar(0));
    Ciphertext<G> lhs, rhs;
    for (const auto& c : proof.squares) lhs = lhs * c;
    for (unsigned l = 0; l < policy.digits; ++l) {
      rhs = rhs * proof.digits[l].pow(pow2_scalar<G>(l));
    }
    EXPECT_EQ(lhs, rhs);
    std::uint64_t s = 0;
    for (auto t : v) s += static_cast<std::uint64_t>(t * t);
    EXPECT_EQ(trace.sum_of_squares, s);
    EXPECT_EQ(trace.digits, binary_digits(s, policy.digits));
  }
}

TEST(RangeProof, ProverRefusesOutOfRange) {
  using G = Schnorr64;
  SeededRng rng(13);
  auto expect_code = [](auto&& f, Errc code) {
    try {
      f();
      FAIL() << "no error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << e.what();
    }
  };
  // B = 3: L = 2, effective bound 3.
  Fixture<G> over({3, 1}, rng);
  expect_code([&] { prove_l1<G>(over.witness(), BoundPolicy::l1(3), kCtx, rng); },
              Errc::kBoundExceeded);
  Fixture<G> neg({-1, 2}, rng);
  expect_code([&] { prove_l1<G>(neg.witness(), BoundPolicy::l1(3), kCtx, rng); },
              Errc::kNegativeEntry);
  // B = 2: L = 3, effective bound 7 on the sum of squares.
  Fixture<G> sq({2, -2}, rng);
  expect_code([&] { prove_l2<G>(sq.witness(), BoundPolicy::l2(2), kCtx, rng); },
              Errc::kBoundExceeded);
  Fixture<G> ok({2, -1}, rng);
  EXPECT_NO_THROW(prove_l2<G>(ok.witness(), BoundPolicy::l2(2), kCtx, rng));
  expect_code([&] { prove_l2<G>(ok.witness(), BoundPolicy::l1(2), kCtx, rng); },
              Errc::kInvalidArgument);
}

TEST(RangeProof, ToyPolicyThatWrapsIsRejected) {
  // m (2^L - 1) must stay below q = 11.
  EXPECT_THROW(check_policy_fits<Toy23>(BoundPolicy::l1(4), 2, 1), Error);
  EXPECT_NO_THROW(check_policy_fits<Toy23>(BoundPolicy::l1(3), 3, 3));
  EXPECT_NO_THROW(check_policy_fits<Toy23>(BoundPolicy::l2(2), 1, 1));
  EXPECT_THROW(check_policy_fits<Toy23>(BoundPolicy::l2(3), 1, 1), Error);
}

// Honest-shaped forgeries for every T in a box around the valid region: the
// digits are the low L bits of the real values, so invalid T can only pass if
// a bit or recomposition check is fooled.
TEST(L1, ExhaustiveForgeriesSchnorr64) {
  using G = Schnorr64;
  SeededRng rng(14);
  const auto policy = BoundPolicy::l1(3);
  const unsigned L = policy.digits;
  const std::uint64_t mask = (1u << L) - 1;
  for (std::int64_t t0 = -3; t0 <= 5; ++t0) {
    for (std::int64_t t1 = -3; t1 <= 5; ++t1) {
      Fixture<G> f({t0, t1}, rng);
      detail::L1Plan<G> plan;
      plan.reencrypted = f.values;
      for (auto t : f.values) {
        auto bits = binary_digits(static_cast<std::uint64_t>(t) & mask, L);
        plan.element_digits.insert(plan.element_digits.end(), bits.begin(), bits.end());
      }
      plan.sum_digits = binary_digits(static_cast<std::uint64_t>(t0 + t1) & mask, L);
      auto proof = detail::build_l1<G>(f.witness(), policy, plan, kCtx, rng);
      const bool valid = t0 >= 0 && t1 >= 0 && t0 + t1 <= 3;
      EXPECT_EQ(static_cast<bool>(verify_l1<G>(f.cts, f.pads, proof, policy, kCtx)), valid)
          << t0 << "," << t1;
    }
  }
}

TEST(L1, ForgedDigitsAreCaught) {
  using G = Schnorr64;
  SeededRng rng(15);
  const auto policy = BoundPolicy::l1(3);
  Fixture<G> f({4, 0}, rng);
  // Digits that recompose correctly but are not bits.
  detail::L1Plan<G> plan{{4, 0}, {2, 1, 0, 0}, {2, 1}};
  auto proof = detail::build_l1<G>(f.witness(), policy, plan, kCtx, rng);
  auto r = verify_l1<G>(f.cts, f.pads, proof, policy, kCtx);
  EXPECT_EQ(r.reason, Reason::kBit);
  // Bits that are honest but claim a smaller value than encrypted.
  detail::L1Plan<G> plan2{{4, 0}, {1, 1, 0, 0}, {1, 1}};
  proof = detail::build_l1<G>(f.witness(), policy, plan2, kCtx, rng);
  EXPECT_EQ(verify_l1<G>(f.cts, f.pads, proof, policy, kCtx).reason, Reason::kRecomposition);
  // Re-encrypting a different value breaks the link proof.
  detail::L1Plan<G> plan3{{3, 0}, {1, 1, 0, 0}, {1, 1}};
  proof = detail::build_l1<G>(f.witness(), policy, plan3, kCtx, rng);
  EXPECT_EQ(verify_l1<G>(f.cts, f.pads, proof, policy, kCtx).reason, Reason::kTuple);
}

TEST(L2, ExhaustiveForgeriesSchnorr64) {
  using G = Schnorr64;
  SeededRng rng(16);
  const auto policy = BoundPolicy::l2(2);  // L = 3, sum of squares <= 7
  const unsigned L = policy.digits;
  for (std::int64_t t0 = -3; t0 <= 3; ++t0) {
    for (std::int64_t t1 = -3; t1 <= 3; ++t1) {
      Fixture<G> f({t0, t1}, rng);
      detail::L2Plan<G> plan;
      plan.reencrypted = f.values;
      for (std::size_t j = 0; j < padded_length(2, L); ++j) {
        plan.squares.push_back(j < 2 ? G::scalar(f.values[j] * f.values[j]) : G::scalar(0));
      }
      const std::uint64_t s = static_cast<std::uint64_t>(t0 * t0 + t1 * t1);
      plan.digits = binary_digits(s & 7, L);
      auto proof = detail::build_l2<G>(f.witness(), policy, plan, kCtx, rng, nullptr);
      const bool valid = s <= 7;
      EXPECT_EQ(static_cast<bool>(verify_l2<G>(f.cts, f.pads, proof, policy, kCtx)), valid)
          << t0 << "," << t1;
    }
  }
}

TEST(L2, ForgedSquaresAreCaught) {
  using G = Schnorr64;
  SeededRng rng(17);
  const auto policy = BoundPolicy::l2(2);
  Fixture<G> f({3, 0}, rng);
  // Claim w_0 = 1 instead of 9 so that the digits describe a legal sum.
  detail::L2Plan<G> plan{{3, 0}, {G::scalar(1), G::scalar(0), G::scalar(0), G::scalar(0)}, {1, 0, 0}};
  auto proof = detail::build_l2<G>(f.witness(), policy, plan, kCtx, rng, nullptr);
  auto r = verify_l2<G>(f.cts, f.pads, proof, policy, kCtx);
  EXPECT_EQ(r.reason, Reason::kSquare);
  EXPECT_EQ(r.index, 0u);
  // Correct squares with understated digits.
  detail::L2Plan<G> plan2{{3, 0}, {G::scalar(9), G::scalar(0), G::scalar(0), G::scalar(0)}, {1, 0, 0}};
  proof = detail::build_l2<G>(f.witness(), policy, plan2, kCtx, rng, nullptr);
  EXPECT_EQ(verify_l2<G>(f.cts, f.pads, proof, policy, kCtx).reason, Reason::kConsistency);
  // Non-binary digits that sum correctly.
  detail::L2Plan<G> plan3{{3, 0}, {G::scalar(9), G::scalar(0), G::scalar(0), G::scalar(0)}, {1, 0, 2}};
  proof = detail::build_l2<G>(f.witness(), policy, plan3, kCtx, rng, nullptr);
  EXPECT_EQ(verify_l2<G>(f.cts, f.pads, proof, policy, kCtx).reason, Reason::kBit);
}

TEST(RangeProof, BundlesAreBoundToPadsPolicyAndContext) {
  using G = Schnorr64;
  SeededRng rng(18);
  const auto policy = BoundPolicy::l1(7);
  Fixture<G> f({1, 2, 3}, rng);
  auto proof = prove_l1<G>(f.witness(), policy, kCtx, rng);
  ASSERT_TRUE(verify_l1<G>(f.cts, f.pads, proof, policy, kCtx));
  EXPECT_EQ(verify_l1<G>(f.cts, f.pads, proof, BoundPolicy::l1(8), kCtx).reason, Reason::kPolicy);
  EXPECT_FALSE(verify_l1<G>(f.cts, f.pads, proof, policy, Transcript("test/elsewhere")));
  auto pads = f.pads;
  std::swap(pads[0], pads[1]);
  EXPECT_EQ(verify_l1<G>(f.cts, pads, proof, policy, kCtx).reason, Reason::kTuple);
  auto cts = f.cts;
  cts[2].b = cts[2].b * G::generator();
  EXPECT_EQ(verify_l1<G>(cts, f.pads, proof, policy, kCtx).reason, Reason::kTuple);
  cts.pop_back();
  EXPECT_EQ(verify_l1<G>(cts, f.pads, proof, policy, kCtx).reason, Reason::kShape);
}

TEST(RangeProof, PadEqualToLongTermKeyIsRefused) {
  using G = Schnorr64;
  SeededRng rng(19);
  Fixture<G> f({1}, rng);
  f.pads[0] = f.key.pk;
  EXPECT_THROW(prove_l1<G>(f.witness(), BoundPolicy::l1(3), kCtx, rng), Error);
}

TEST(RangeProof, DecodeRejectsMalformedBundles) {
  using G = Schnorr64;
  SeededRng rng(20);
  Fixture<G> f({1, 1}, rng);
  Bytes b = prove_l2<G>(f.witness(), BoundPolicy::l2(3), kCtx, rng).encode();
  {
    ByteReader r(ByteView(b).first(b.size() - 1));
    EXPECT_THROW(L2RangeProof<G>::read(r), Error);
  }
  {
    Bytes wrong = b;
    wrong[0] = kL1BundleTag;
    ByteReader r(wrong);
    EXPECT_THROW(L1RangeProof<G>::read(r), Error);
  }
  {
    // Digit count byte that disagrees with the policy.
    Bytes wrong = b;
    wrong[1 + 10 + 4] ^= 1;
    ByteReader r(wrong);
    EXPECT_THROW(L2RangeProof<G>::read(r), Error);
  }
}

TEST(RangeProof, PaddedLengthAndDigits) {
  EXPECT_EQ(padded_length(1, 5), 6u);
  EXPECT_EQ(padded_length(5, 5), 6u);
  EXPECT_EQ(padded_length(6, 5), 6u);
  EXPECT_EQ(padded_length(20, 5), 20u);
  EXPECT_EQ(binary_digits(6, 4), (std::vector<std::int64_t>{0, 1, 1, 0}));
  // Digit counts: L1 uses bit_width(B), L2 bit_width(B^2).
  EXPECT_EQ(BoundPolicy::l1(3).digits, 2u);
  EXPECT_EQ(BoundPolicy::l1(4).digits, 3u);
  EXPECT_EQ(BoundPolicy::l1(32).digits, 6u);
  EXPECT_EQ(BoundPolicy::l2(2).digits, 3u);
  EXPECT_EQ(BoundPolicy::l2(3).digits, 4u);
  EXPECT_EQ(BoundPolicy::l2(32).digits, 11u);
  EXPECT_EQ(BoundPolicy::l2(32).effective_bound(), 2047u);
  EXPECT_EQ(BoundPolicy::l2(32).max_abs_entry(), 45u);
}

}  // namespace
}  // namespace zorro
