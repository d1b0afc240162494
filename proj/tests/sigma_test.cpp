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

#include <map>

#include "zorro/modp_group.hpp"
#include "zorro/ristretto_group.hpp"
#include "zorro/sigma.hpp"

namespace zorro {
namespace {

template <class G>
class SigmaTyped : public ::testing::Test {};
using AllGroups = ::testing::Types<Toy23, Schnorr64, Ristretto255>;
TYPED_TEST_SUITE(SigmaTyped, AllGroups);

TYPED_TEST(SigmaTyped, DlogCompleteness) {
  using G = TypeParam;
  SeededRng rng(1);
  Transcript ctx("test/dlog");
  for (int i = 0; i < 100; ++i) {
    auto a = random_scalar<G>(rng);
    auto pub = G::exp_g(a);
    auto proof = prove_dlog<G>(a, pub, ctx, rng);
    EXPECT_TRUE(verify_dlog<G>(pub, proof, ctx));
    const Bytes enc = proof.encode();
    ByteReader r(enc);
    EXPECT_EQ(DlogProof<G>::read(r), proof);
  }
}

TYPED_TEST(SigmaTyped, DhTupleCompleteness) {
  using G = TypeParam;
  SeededRng rng(2);
  Transcript ctx("test/dh");
  for (int i = 0; i < 100; ++i) {
    auto w = random_scalar<G>(rng);
    auto h = G::exp_g(random_scalar<G>(rng));
    if (h == G::identity()) continue;
    DhTuple<G> st{G::generator(), h, G::exp_g(w), h.pow(w)};
    EXPECT_TRUE(verify_dh_tuple<G>(st, prove_dh_tuple<G>(w, st, ctx, rng), ctx));
  }
}

TYPED_TEST(SigmaTyped, BitCompleteness) {
  using G = TypeParam;
  SeededRng rng(3);
  Transcript ctx("test/bit");
  auto key = Keypair<G>::generate(rng);
  for (int i = 0; i < 100; ++i) {
    const int bit = i % 2;
    auto r = random_scalar<G>(rng);
    BitStatement<G> st{key.pk, encrypt_exp<G>(bit, r, key.pk)};
    auto proof = prove_bit<G>(bit, r, st, ctx, rng);
    EXPECT_TRUE(verify_bit<G>(st, proof, ctx));
    const Bytes enc = proof.encode();
    ByteReader rd(enc);
    EXPECT_EQ(BitProof<G>::read(rd), proof);
  }
}

TYPED_TEST(SigmaTyped, SquareCompleteness) {
  using G = TypeParam;
  SeededRng rng(4);
  Transcript ctx("test/square");
  auto key = Keypair<G>::generate(rng);
  for (int i = 0; i < 100; ++i) {
    auto a = G::scalar(rng.uniform(-50, 50));
    auto s_a = random_scalar<G>(rng), s_b = random_scalar<G>(rng);
    // Alternate between the protocol base g and the hash-derived gamma.
    auto base = i % 2 ? G::gamma() : G::generator();
    Ciphertext<G> ct_a{G::exp_g(s_a), base.pow(a) * key.pk.pow(s_a)};
    Ciphertext<G> ct_b{G::exp_g(s_b), base.pow(a * a) * key.pk.pow(s_b)};
    SquareStatement<G> st{key.pk, key.pk, base, ct_a, ct_b};
    auto proof = prove_square<G>(a, s_a, s_b, st, ctx, rng);
    EXPECT_TRUE(verify_square<G>(st, proof, ctx));
    const Bytes enc = proof.encode();
    ByteReader rd(enc);
    EXPECT_EQ(SquareProof<G>::read(rd), proof);
  }
}

TEST(Sigma, RejectsTamperingAndForeignContext) {
  using G = Schnorr64;
  SeededRng rng(5);
  Transcript ctx("test/ctx"), other("test/other");
  auto a = random_scalar<G>(rng);
  auto pub = G::exp_g(a);
  auto proof = prove_dlog<G>(a, pub, ctx, rng);
  EXPECT_FALSE(verify_dlog<G>(pub, proof, other));
  EXPECT_FALSE(verify_dlog<G>(pub * G::generator(), proof, ctx));
  auto bad = proof;
  bad.response = bad.response + G::scalar(1);
  EXPECT_FALSE(verify_dlog<G>(pub, bad, ctx));

  auto key = Keypair<G>::generate(rng);
  auto r = random_scalar<G>(rng);
  BitStatement<G> st{key.pk, encrypt_exp<G>(1, r, key.pk)};
  auto bp = prove_bit<G>(1, r, st, ctx, rng);
  EXPECT_FALSE(verify_bit<G>(st, bp, other));
  BitStatement<G> st2{key.pk, encrypt_exp<G>(2, r, key.pk)};
  EXPECT_FALSE(verify_bit<G>(st2, bp, ctx));
  // Proving the wrong branch produces a proof that does not verify.
  EXPECT_FALSE(verify_bit<G>(st, prove_bit<G>(0, r, st, ctx, rng), ctx));
}

TEST(Sigma, InvalidStatementsAreRefused) {
  using G = Schnorr64;
  SeededRng rng(6);
  Transcript ctx("test/invalid");
  DhTuple<G> degenerate{G::generator(), G::identity(), G::generator(), G::identity()};
  EXPECT_THROW(prove_dh_tuple<G>(G::scalar(1), degenerate, ctx, rng), Error);
  EXPECT_FALSE(verify_dh_tuple<G>(degenerate, DhTupleProof<G>{}, ctx));
  auto key = Keypair<G>::generate(rng);
  BitStatement<G> st{key.pk, encrypt_exp<G>(2, G::scalar(1), key.pk)};
  EXPECT_THROW(bit_commit<G>(2, st, rng), Error);
  auto other = Keypair<G>::generate(rng);
  SquareStatement<G> sq{key.pk, other.pk, G::generator(), {}, {}};
  try {
    square_commit<G>(sq, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kKeyMismatch);
  }
}

// Two accepting transcripts sharing a commitment reveal the witness.
TEST(Sigma, SpecialSoundnessExtractsWitness) {
  using G = Schnorr64;
  SeededRng rng(7);
  auto a = random_scalar<G>(rng);
  auto k = random_scalar<G>(rng);
  auto c1 = random_scalar<G>(rng), c2 = random_scalar<G>(rng);
  auto s1 = dlog_respond<G>(a, k, c1), s2 = dlog_respond<G>(a, k, c2);
  ASSERT_TRUE(dlog_check<G>(G::exp_g(a), G::exp_g(k), c1, s1));
  ASSERT_TRUE(dlog_check<G>(G::exp_g(a), G::exp_g(k), c2, s2));
  EXPECT_EQ((s1 - s2) * (c1 - c2).inverse(), a);

  auto key = Keypair<G>::generate(rng);
  auto r = random_scalar<G>(rng);
  BitStatement<G> st{key.pk, encrypt_exp<G>(1, r, key.pk)};
  auto [nonce, p1] = bit_commit<G>(1, st, rng);
  auto p2 = p1;
  bit_respond<G>(nonce, r, c1, p1);
  bit_respond<G>(nonce, r, c2, p2);
  ASSERT_TRUE(bit_check<G>(st, p1, c1));
  ASSERT_TRUE(bit_check<G>(st, p2, c2));
  // The branch whose challenge share moved is the real one.
  ASSERT_FALSE(p1.d2 == p2.d2);
  EXPECT_EQ((p2.r2 - p1.r2) * (p1.d2 - p2.d2).inverse(), r);
}

// Interactive soundness in the 11-element group: for a false statement, no
// commitment admits accepting responses for two different challenges.
class ToySoundness : public ::testing::Test {
 protected:
  using G = Toy23;
  void SetUp() override {
    for (std::uint64_t k = 0; k < 11; ++k) {
      auto e = G::exp_g(G::scalar_from_u64(k));
      elems.push_back(e);
      log[e.value()] = k;
    }
  }
  G::Scalar dl(G::Element e) const { return G::scalar_from_u64(log.at(e.value())); }
  G::Scalar sc(std::uint64_t v) const { return G::scalar_from_u64(v); }

  std::vector<G::Element> elems;
  std::map<std::uint64_t, std::uint64_t> log;
};

TEST_F(ToySoundness, DhTupleFalseStatement) {
  auto h = G::exp_g(sc(3));
  DhTuple<G> st{G::generator(), h, G::exp_g(sc(4)), h.pow(sc(5))};
  for (auto a : elems) {
    for (auto b : elems) {
      int answerable = 0;
      for (std::uint64_t e = 0; e < 11; ++e) {
        // z is pinned by the first equation.
        auto z = dl(a * st.u.pow(sc(e)));
        if (dh_tuple_check<G>(st, a, b, sc(e), z)) ++answerable;
      }
      ASSERT_LE(answerable, 1);
    }
  }
}

TEST_F(ToySoundness, BitProofForTwo) {
  auto key = Keypair<G>::from_secret(sc(7));
  BitStatement<G> st{key.pk, encrypt_exp<G>(2, sc(4), key.pk)};
  const auto& x = st.ct.a;
  for (auto a1 : elems) for (auto b1 : elems) for (auto a2 : elems) for (auto b2 : elems) {
    int answerable = 0;
    for (std::uint64_t c = 0; c < 11; ++c) {
      bool ok = false;
      for (std::uint64_t d1 = 0; d1 < 11 && !ok; ++d1) {
        BitProof<G> p{a1, b1, a2, b2, sc(d1), sc(c) - sc(d1), {}, {}};
        p.r1 = dl(a1 / x.pow(p.d1));
        p.r2 = dl(a2 / x.pow(p.d2));
        ok = bit_check<G>(st, p, sc(c));
      }
      answerable += ok;
    }
    ASSERT_LE(answerable, 1);
  }
}

TEST_F(ToySoundness, SquareProofWrongSquare) {
  auto key = Keypair<G>::from_secret(sc(6));
  const auto a = sc(3);
  Ciphertext<G> ct_a = encrypt_exp<G>(a, sc(2), key.pk);
  Ciphertext<G> ct_b = encrypt_exp<G>(a * a + sc(1), sc(9), key.pk);
  SquareStatement<G> st{key.pk, key.pk, G::generator(), ct_a, ct_b};
  for (auto ca_a : elems) for (auto ca_b : elems) for (auto cb_a : elems) for (auto cb_b : elems) {
    int answerable = 0;
    for (std::uint64_t c = 0; c < 11; ++c) {
      SquareProof<G> p{{ca_a, ca_b}, {cb_a, cb_b}, {}, {}, {}};
      p.z_a = dl(ct_a.a.pow(sc(c)) * ca_a);
      p.v = dl(ct_a.b.pow(sc(c)) * ca_b / key.pk.pow(p.z_a));
      p.z_b = dl(ct_b.a.pow(sc(c)) * cb_a / ct_a.a.pow(p.v));
      answerable += square_check<G>(st, p, sc(c));
    }
    ASSERT_LE(answerable, 1);
  }
}

}  // namespace
}  // namespace zorro
