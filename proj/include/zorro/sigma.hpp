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

#ifndef ZORRO_SIGMA_HPP_
#define ZORRO_SIGMA_HPP_

#include <cstdint>
#include <utility>

#include "zorro/bytes.hpp"
#include "zorro/elgamal.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"
#include "zorro/rng.hpp"
#include "zorro/transcript.hpp"

// Sigma protocols made non-interactive with Fiat-Shamir. Each protocol is
// exposed in two layers: the interactive moves (commit / respond / check with
// an explicit challenge) and the NIZK prove / verify pair built on them. The
// challenge hashes ctx || group name || protocol label || statement ||
// commitments, in that order.
namespace zorro {

inline constexpr std::uint8_t kDlogProofTag = 0x11;
inline constexpr std::uint8_t kDhTupleProofTag = 0x12;
inline constexpr std::uint8_t kBitProofTag = 0x13;
inline constexpr std::uint8_t kSquareProofTag = 0x14;

// ---------------------------------------------------------------------------
// Knowledge of a discrete log: A = g^a.

template <Group G>
struct DlogProof {
  typename G::Element commitment;  // K = g^k
  typename G::Scalar response;     // s = k + c a

  friend bool operator==(const DlogProof&, const DlogProof&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(kDlogProofTag).put(commitment).put(response);
    return std::move(w).bytes();
  }
  static DlogProof read(ByteReader& r) {
    r.expect_tag(kDlogProofTag);
    auto k = r.element<G>();
    auto s = r.scalar<G>();
    return DlogProof{k, s};
  }
};

template <Group G>
typename G::Scalar dlog_challenge(const typename G::Element& public_value,
                                  const typename G::Element& commitment,
                                  const Transcript& ctx) {
  Transcript t = ctx;
  t.append(G::kName).append("dlog");
  t.append(G::generator()).append(public_value).append(commitment);
  return t.template challenge<G>();
}

template <Group G>
bool dlog_check(const typename G::Element& public_value,
                const typename G::Element& commitment,
                const typename G::Scalar& challenge,
                const typename G::Scalar& response) {
  return G::exp_g(response) == commitment * public_value.pow(challenge);
}

template <Group G>
typename G::Scalar dlog_respond(const typename G::Scalar& secret,
                                const typename G::Scalar& nonce,
                                const typename G::Scalar& challenge) {
  return nonce + challenge * secret;
}

template <Group G>
DlogProof<G> prove_dlog(const typename G::Scalar& secret,
                        const typename G::Element& public_value,
                        const Transcript& ctx, Rng& rng) {
  auto k = random_scalar<G>(rng);
  auto commitment = G::exp_g(k);
  auto c = dlog_challenge<G>(public_value, commitment, ctx);
  return DlogProof<G>{commitment, dlog_respond<G>(secret, k, c)};
}

template <Group G>
bool verify_dlog(const typename G::Element& public_value,
                 const DlogProof<G>& proof, const Transcript& ctx) {
  auto c = dlog_challenge<G>(public_value, proof.commitment, ctx);
  return dlog_check<G>(public_value, proof.commitment, c, proof.response);
}

// ---------------------------------------------------------------------------
// Diffie-Hellman tuple: u = g^w and v = h^w for a common w.

template <Group G>
struct DhTuple {
  typename G::Element g, h, u, v;

  // Degenerate bases make the statement vacuous.
  bool well_formed() const {
    return !(g == G::identity()) && !(h == G::identity());
  }
};

template <Group G>
struct DhTupleProof {
  typename G::Element a;  // g^r
  typename G::Element b;  // h^r
  typename G::Scalar z;   // r + e w

  friend bool operator==(const DhTupleProof&, const DhTupleProof&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(kDhTupleProofTag).put(a).put(b).put(z);
    return std::move(w).bytes();
  }
  static DhTupleProof read(ByteReader& r) {
    r.expect_tag(kDhTupleProofTag);
    auto a = r.element<G>();
    auto b = r.element<G>();
    auto z = r.scalar<G>();
    return DhTupleProof{a, b, z};
  }
};

template <Group G>
typename G::Scalar dh_tuple_challenge(const DhTuple<G>& st,
                                      const typename G::Element& a,
                                      const typename G::Element& b,
                                      const Transcript& ctx) {
  Transcript t = ctx;
  t.append(G::kName).append("dh-tuple");
  t.append(st.g).append(st.h).append(st.u).append(st.v).append(a).append(b);
  return t.template challenge<G>();
}

template <Group G>
bool dh_tuple_check(const DhTuple<G>& st, const typename G::Element& a,
                    const typename G::Element& b, const typename G::Scalar& e,
                    const typename G::Scalar& z) {
  return st.g.pow(z) == a * st.u.pow(e) && st.h.pow(z) == b * st.v.pow(e);
}

template <Group G>
DhTupleProof<G> prove_dh_tuple(const typename G::Scalar& w,
                               const DhTuple<G>& st, const Transcript& ctx,
                               Rng& rng) {
  if (!st.well_formed()) {
    throw Error(Errc::kInvalidStatement, "DH tuple with identity base");
  }
  auto r = random_scalar<G>(rng);
  auto a = st.g.pow(r);
  auto b = st.h.pow(r);
  auto e = dh_tuple_challenge<G>(st, a, b, ctx);
  return DhTupleProof<G>{a, b, r + e * w};
}

template <Group G>
bool verify_dh_tuple(const DhTuple<G>& st, const DhTupleProof<G>& proof,
                     const Transcript& ctx) {
  if (!st.well_formed()) return false;
  auto e = dh_tuple_challenge<G>(st, proof.a, proof.b, ctx);
  return dh_tuple_check<G>(st, proof.a, proof.b, e, proof.z);
}

// ---------------------------------------------------------------------------
// Encryption of a bit: ct = (x, y) = (g^r, h^r) or (g^r, h^r g).
// Disjunctive Chaum-Pedersen proof. Branch 1 covers m = 0 (statement (x, y)),
// branch 2 covers m = 1 (statement (x, y/g)); the branch not taken is
// simulated with a pre-chosen challenge share. Responses use r_k = w - x d_k.

template <Group G>
struct BitStatement {
  typename G::Element pk;
  Ciphertext<G> ct;
};

template <Group G>
struct BitProof {
  typename G::Element a1, b1, a2, b2;
  typename G::Scalar d1, d2, r1, r2;

  friend bool operator==(const BitProof&, const BitProof&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(kBitProofTag).put(a1).put(b1).put(a2).put(b2);
    w.put(d1).put(d2).put(r1).put(r2);
    return std::move(w).bytes();
  }
  static BitProof read(ByteReader& r) {
    r.expect_tag(kBitProofTag);
    BitProof p;
    p.a1 = r.element<G>();
    p.b1 = r.element<G>();
    p.a2 = r.element<G>();
    p.b2 = r.element<G>();
    p.d1 = r.scalar<G>();
    p.d2 = r.scalar<G>();
    p.r1 = r.scalar<G>();
    p.r2 = r.scalar<G>();
    return p;
  }
};

template <Group G>
struct BitNonce {
  int bit = 0;
  typename G::Scalar w;
  typename G::Scalar d_sim;
  typename G::Scalar r_sim;
};

template <Group G>
typename G::Scalar bit_challenge(const BitStatement<G>& st,
                                 const BitProof<G>& commitment,
                                 const Transcript& ctx) {
  Transcript t = ctx;
  t.append(G::kName).append("bit");
  t.append(G::generator()).append(st.pk).append(st.ct.a).append(st.ct.b);
  t.append(commitment.a1).append(commitment.b1);
  t.append(commitment.a2).append(commitment.b2);
  return t.template challenge<G>();
}

// First move. Returns the nonce state and a proof whose commitment fields
// (and the simulated branch) are filled in.
template <Group G>
std::pair<BitNonce<G>, BitProof<G>> bit_commit(int bit,
                                               const BitStatement<G>& st,
                                               Rng& rng) {
  if (bit != 0 && bit != 1) {
    throw Error(Errc::kInvalidStatement, "bit proof for a non-binary value");
  }
  const auto& x = st.ct.a;
  const auto& y = st.ct.b;
  const auto& h = st.pk;
  BitNonce<G> n{bit, random_scalar<G>(rng), random_scalar<G>(rng),
                random_scalar<G>(rng)};
  BitProof<G> p;
  if (bit == 0) {
    p.a1 = G::exp_g(n.w);
    p.b1 = h.pow(n.w);
    p.a2 = G::exp_g(n.r_sim) * x.pow(n.d_sim);
    p.b2 = h.pow(n.r_sim) * (y / G::generator()).pow(n.d_sim);
    p.d2 = n.d_sim;
    p.r2 = n.r_sim;
  } else {
    p.a1 = G::exp_g(n.r_sim) * x.pow(n.d_sim);
    p.b1 = h.pow(n.r_sim) * y.pow(n.d_sim);
    p.a2 = G::exp_g(n.w);
    p.b2 = h.pow(n.w);
    p.d1 = n.d_sim;
    p.r1 = n.r_sim;
  }
  return {n, p};
}

template <Group G>
void bit_respond(const BitNonce<G>& n, const typename G::Scalar& randomness,
                 const typename G::Scalar& c, BitProof<G>& p) {
  if (n.bit == 0) {
    p.d1 = c - n.d_sim;
    p.r1 = n.w - randomness * p.d1;
  } else {
    p.d2 = c - n.d_sim;
    p.r2 = n.w - randomness * p.d2;
  }
}

template <Group G>
bool bit_check(const BitStatement<G>& st, const BitProof<G>& p,
               const typename G::Scalar& c) {
  const auto& x = st.ct.a;
  const auto& y = st.ct.b;
  const auto& h = st.pk;
  return c == p.d1 + p.d2 &&
         p.a1 == G::exp_g(p.r1) * x.pow(p.d1) &&
         p.b1 == h.pow(p.r1) * y.pow(p.d1) &&
         p.a2 == G::exp_g(p.r2) * x.pow(p.d2) &&
         p.b2 == h.pow(p.r2) * (y / G::generator()).pow(p.d2);
}

template <Group G>
BitProof<G> prove_bit(int bit, const typename G::Scalar& randomness,
                      const BitStatement<G>& st, const Transcript& ctx,
                      Rng& rng) {
  auto [nonce, proof] = bit_commit<G>(bit, st, rng);
  bit_respond<G>(nonce, randomness, bit_challenge<G>(st, proof, ctx), proof);
  return proof;
}

template <Group G>
bool verify_bit(const BitStatement<G>& st, const BitProof<G>& proof,
                const Transcript& ctx) {
  return bit_check<G>(st, proof, bit_challenge<G>(st, proof, ctx));
}

// ---------------------------------------------------------------------------
// Square relation between the plaintexts of two ciphertexts under one key:
//   A = (g^sa, base^a pk^sa),  B = (g^sb, base^(a^2) pk^sb).
// The message base is part of the statement; protocol ciphertexts use g.

template <Group G>
struct SquareStatement {
  typename G::Element pk_a;
  typename G::Element pk_b;
  typename G::Element base = G::generator();
  Ciphertext<G> ct_a;
  Ciphertext<G> ct_b;
};

template <Group G>
struct SquareProof {
  Ciphertext<G> c_a;
  Ciphertext<G> c_b;
  typename G::Scalar v, z_a, z_b;

  friend bool operator==(const SquareProof&, const SquareProof&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(kSquareProofTag).put(c_a).put(c_b).put(v).put(z_a).put(z_b);
    return std::move(w).bytes();
  }
  static SquareProof read(ByteReader& r) {
    r.expect_tag(kSquareProofTag);
    SquareProof p;
    p.c_a = Ciphertext<G>::read(r);
    p.c_b = Ciphertext<G>::read(r);
    p.v = r.scalar<G>();
    p.z_a = r.scalar<G>();
    p.z_b = r.scalar<G>();
    return p;
  }
};

template <Group G>
struct SquareNonce {
  typename G::Scalar x, r_a, r_b;
};

template <Group G>
typename G::Scalar square_challenge(const SquareStatement<G>& st,
                                    const SquareProof<G>& commitment,
                                    const Transcript& ctx) {
  Transcript t = ctx;
  t.append(G::kName).append("square");
  t.append(G::generator()).append(st.pk_a).append(st.base);
  t.append(st.ct_a.a).append(st.ct_a.b).append(st.ct_b.a).append(st.ct_b.b);
  t.append(commitment.c_a.a).append(commitment.c_a.b);
  t.append(commitment.c_b.a).append(commitment.c_b.b);
  return t.template challenge<G>();
}

template <Group G>
std::pair<SquareNonce<G>, SquareProof<G>> square_commit(
    const SquareStatement<G>& st, Rng& rng) {
  if (!(st.pk_a == st.pk_b)) {
    throw Error(Errc::kKeyMismatch,
                "square relation needs both ciphertexts under one key");
  }
  SquareNonce<G> n{random_scalar<G>(rng), random_scalar<G>(rng),
                   random_scalar<G>(rng)};
  SquareProof<G> p;
  p.c_a = Ciphertext<G>{G::exp_g(n.r_a), st.base.pow(n.x) * st.pk_a.pow(n.r_a)};
  p.c_b = st.ct_a.pow(n.x) * Ciphertext<G>{G::exp_g(n.r_b), st.pk_a.pow(n.r_b)};
  return {n, p};
}

template <Group G>
void square_respond(const typename G::Scalar& a, const typename G::Scalar& s_a,
                    const typename G::Scalar& s_b, const SquareNonce<G>& n,
                    const typename G::Scalar& c, SquareProof<G>& p) {
  p.v = c * a + n.x;
  p.z_a = c * s_a + n.r_a;
  p.z_b = c * (s_b - a * s_a) + n.r_b;
}

template <Group G>
bool square_check(const SquareStatement<G>& st, const SquareProof<G>& p,
                  const typename G::Scalar& c) {
  if (!(st.pk_a == st.pk_b)) return false;
  const auto& pk = st.pk_a;
  Ciphertext<G> lhs_a{G::exp_g(p.z_a), st.base.pow(p.v) * pk.pow(p.z_a)};
  if (!(lhs_a == st.ct_a.pow(c) * p.c_a)) return false;
  Ciphertext<G> lhs_b =
      st.ct_a.pow(p.v) * Ciphertext<G>{G::exp_g(p.z_b), pk.pow(p.z_b)};
  return lhs_b == st.ct_b.pow(c) * p.c_b;
}

// a is the plaintext of ct_a; s_a, s_b the encryption randomness of ct_a, ct_b.
template <Group G>
SquareProof<G> prove_square(const typename G::Scalar& a,
                            const typename G::Scalar& s_a,
                            const typename G::Scalar& s_b,
                            const SquareStatement<G>& st,
                            const Transcript& ctx, Rng& rng) {
  auto [nonce, proof] = square_commit<G>(st, rng);
  square_respond<G>(a, s_a, s_b, nonce, square_challenge<G>(st, proof, ctx),
                    proof);
  return proof;
}

template <Group G>
bool verify_square(const SquareStatement<G>& st, const SquareProof<G>& proof,
                   const Transcript& ctx) {
  return square_check<G>(st, proof, square_challenge<G>(st, proof, ctx));
}

}  // namespace zorro

#endif  // ZORRO_SIGMA_HPP_
