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

#ifndef ZORRO_PROTOCOL_HPP_
#define ZORRO_PROTOCOL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zorro/bytes.hpp"
#include "zorro/dlog.hpp"
#include "zorro/elgamal.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"
#include "zorro/policy.hpp"
#include "zorro/range_proof.hpp"
#include "zorro/rng.hpp"
#include "zorro/sigma.hpp"
#include "zorro/transcript.hpp"
#include "zorro/verify_result.hpp"

// Two-round self-tallying vector summation.
//
// Round 1: party i draws x_i1..x_im and posts g^x_ij with proofs of knowledge.
// Pads:    h_ij = prod_{k<i} g^x_kj / prod_{k>i} g^x_kj, so that
//          prod_i h_ij^x_ij = 1 for every slot j.
// Round 2: party i posts E[T_ij] = (g^x_ij, g^T_ij h_ij^x_ij) with a validity
//          bundle. Anyone multiplies the second components over i and solves
//          a small discrete log to read sum_i T_ij.
namespace zorro {

inline constexpr std::uint8_t kRound1Tag = 0x31;
inline constexpr std::uint8_t kRound2Tag = 0x32;

using SessionId = std::array<std::uint8_t, 16>;

inline SessionId random_session_id(Rng& rng) {
  SessionId id;
  rng.fill(id);
  return id;
}

struct ProtocolConfig {
  std::size_t n = 0;
  std::size_t m = 0;
  BoundPolicy policy;
  SessionId session{};
  // Per-slot tally window; required when the policy implies none.
  std::optional<DlogWindow> window;
};

template <Group G>
void validate_config(const ProtocolConfig& cfg) {
  if (cfg.n < 2) throw Error(Errc::kInvalidArgument, "need at least two parties");
  if (cfg.m < 1) throw Error(Errc::kInvalidArgument, "dimension must be positive");
  if (cfg.n > UINT32_MAX || cfg.m > UINT32_MAX) {
    throw Error(Errc::kInvalidArgument, "party count or dimension too large");
  }
  check_policy_fits<G>(cfg.policy, cfg.m, cfg.n);
  if (cfg.window && (cfg.window->hi < cfg.window->lo ||
                     cfg.window->size() > G::kOrderFloor)) {
    throw Error(Errc::kParameterTooLarge, "tally window does not fit the group order");
  }
}

// Window the per-slot sum must fall into: [0, n(2^L - 1)] under L1 and
// [-n W, n W] under L2 with W the largest admissible |entry|.
inline DlogWindow tally_window(const ProtocolConfig& cfg) {
  if (cfg.window) return *cfg.window;
  const auto n = static_cast<std::int64_t>(cfg.n);
  switch (cfg.policy.kind) {
    case NormKind::kL1:
      return {0, n * static_cast<std::int64_t>(cfg.policy.effective_bound())};
    case NormKind::kL2: {
      const auto w = static_cast<std::int64_t>(cfg.policy.max_abs_entry());
      return {-n * w, n * w};
    }
    case NormKind::kNone:
      break;
  }
  throw Error(Errc::kInvalidArgument, "no tally window for policy none");
}

// Fiat-Shamir context for one party's posts in one round.
template <Group G>
Transcript protocol_context(const ProtocolConfig& cfg, unsigned round,
                            std::size_t party) {
  Transcript t("zorro/v1/protocol");
  ByteWriter w;
  w.raw(cfg.session).u32(static_cast<std::uint32_t>(cfg.n));
  w.u32(static_cast<std::uint32_t>(cfg.m)).put(cfg.policy);
  w.u8(static_cast<std::uint8_t>(round)).u32(static_cast<std::uint32_t>(party));
  t.append(G::kName).append(ByteView(w.bytes()));
  return t;
}

// Ephemeral round-1 exponents. Move-only: they are consumed as the round-2
// encryption randomness and must not be reused for another contribution.
template <Group G>
class Round1Secret {
 public:
  Round1Secret(std::size_t party, std::vector<typename G::Scalar> x)
      : party_(party), x_(std::move(x)) {}
  Round1Secret(const Round1Secret&) = delete;
  Round1Secret& operator=(const Round1Secret&) = delete;
  Round1Secret(Round1Secret&&) noexcept = default;
  Round1Secret& operator=(Round1Secret&&) noexcept = default;

  std::size_t party() const { return party_; }
  std::span<const typename G::Scalar> exponents() const { return x_; }

 private:
  std::size_t party_;
  std::vector<typename G::Scalar> x_;
};

template <Group G>
struct Round1Post {
  std::size_t party = 0;
  std::vector<typename G::Element> keys;  // g^x_ij
  std::vector<DlogProof<G>> proofs;

  friend bool operator==(const Round1Post&, const Round1Post&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(kRound1Tag).u32(static_cast<std::uint32_t>(party));
    w.u32(static_cast<std::uint32_t>(keys.size()));
    for (const auto& k : keys) w.put(k);
    for (const auto& p : proofs) w.put(p);
    return std::move(w).bytes();
  }
  static Round1Post decode(ByteView bytes) {
    ByteReader r(bytes);
    r.expect_tag(kRound1Tag);
    Round1Post p;
    p.party = r.u32();
    const std::uint32_t m = r.count(G::kElementSize);
    for (std::uint32_t j = 0; j < m; ++j) p.keys.push_back(r.element<G>());
    for (std::uint32_t j = 0; j < m; ++j) p.proofs.push_back(DlogProof<G>::read(r));
    r.finish();
    return p;
  }
};

template <Group G>
struct PadKeys {
  std::size_t party = 0;
  std::vector<typename G::Element> pads;  // h_ij
};

template <Group G>
using ValidityBundle = std::variant<std::monostate, L1RangeProof<G>, L2RangeProof<G>>;

template <Group G>
struct Round2Post {
  std::size_t party = 0;
  std::vector<Ciphertext<G>> ciphertexts;
  ValidityBundle<G> bundle;

  friend bool operator==(const Round2Post&, const Round2Post&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(kRound2Tag).u32(static_cast<std::uint32_t>(party));
    w.u32(static_cast<std::uint32_t>(ciphertexts.size()));
    for (const auto& c : ciphertexts) w.put(c);
    w.u8(static_cast<std::uint8_t>(bundle.index()));
    std::visit(
        [&](const auto& b) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(b)>, std::monostate>) {
            w.put(b);
          }
        },
        bundle);
    return std::move(w).bytes();
  }
  static Round2Post decode(ByteView bytes) {
    ByteReader r(bytes);
    r.expect_tag(kRound2Tag);
    Round2Post p;
    p.party = r.u32();
    const std::uint32_t m = r.count(2 * G::kElementSize);
    for (std::uint32_t j = 0; j < m; ++j) p.ciphertexts.push_back(Ciphertext<G>::read(r));
    switch (r.u8()) {
      case 0: break;
      case 1: p.bundle = L1RangeProof<G>::read(r); break;
      case 2: p.bundle = L2RangeProof<G>::read(r); break;
      default: throw Error(Errc::kMalformedEncoding, "unknown bundle kind");
    }
    r.finish();
    return p;
  }
};

struct TallyResult {
  std::vector<std::int64_t> sums;
  friend bool operator==(const TallyResult&, const TallyResult&) = default;
};

namespace detail {

inline void check_party(const ProtocolConfig& cfg, std::size_t party) {
  if (party < 1 || party > cfg.n) {
    throw Error(Errc::kInvalidArgument,
                "party index " + std::to_string(party) + " outside [1, n]");
  }
}

// posts ordered by party, or the first missing party.
template <class Post>
std::vector<const Post*> index_posts(const ProtocolConfig& cfg,
                                     std::span<const Post> posts) {
  std::vector<const Post*> by_party(cfg.n + 1, nullptr);
  for (const auto& p : posts) {
    if (p.party < 1 || p.party > cfg.n) {
      throw Error(Errc::kInvalidArgument, "post from unknown party", p.party);
    }
    if (by_party[p.party] != nullptr) {
      throw Error(Errc::kDuplicatePost, "two posts from one party", p.party);
    }
    by_party[p.party] = &p;
  }
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    if (by_party[k] == nullptr) {
      throw Error(Errc::kMissingPost, "no post from party " + std::to_string(k), k);
    }
  }
  return by_party;
}

template <Group G>
std::vector<typename G::Element> pads_for(
    const ProtocolConfig& cfg, const std::vector<const Round1Post<G>*>& by_party,
    std::size_t i) {
  std::vector<typename G::Element> pads(cfg.m, G::identity());
  for (std::size_t j = 0; j < cfg.m; ++j) {
    typename G::Element num = G::identity();
    typename G::Element den = G::identity();
    for (std::size_t k = 1; k < i; ++k) num = num * by_party[k]->keys[j];
    for (std::size_t k = i + 1; k <= cfg.n; ++k) den = den * by_party[k]->keys[j];
    pads[j] = num / den;
  }
  return pads;
}

}  // namespace detail

template <Group G>
std::pair<Round1Secret<G>, Round1Post<G>> round1_generate(
    const ProtocolConfig& cfg, std::size_t party, Rng& rng) {
  detail::check_party(cfg, party);
  const Transcript ctx = protocol_context<G>(cfg, 1, party);
  std::vector<typename G::Scalar> x;
  Round1Post<G> post;
  post.party = party;
  for (std::size_t j = 0; j < cfg.m; ++j) {
    x.push_back(random_scalar<G>(rng));
    if (x.back().is_zero()) {
      throw Error(Errc::kEntropyFailure, "zero round-1 exponent", party, j);
    }
    post.keys.push_back(G::exp_g(x.back()));
    post.proofs.push_back(prove_dlog<G>(x.back(), post.keys.back(),
                                        detail::slot_context(ctx, "key", j), rng));
  }
  return {Round1Secret<G>(party, std::move(x)), std::move(post)};
}

template <Group G>
VerifyResult verify_round1(const ProtocolConfig& cfg, const Round1Post<G>& post) {
  if (post.party < 1 || post.party > cfg.n || post.keys.size() != cfg.m ||
      post.proofs.size() != cfg.m) {
    return VerifyResult::fail(Reason::kShape);
  }
  const Transcript ctx = protocol_context<G>(cfg, 1, post.party);
  for (std::size_t j = 0; j < cfg.m; ++j) {
    if (post.keys[j] == G::identity() ||
        !verify_dlog<G>(post.keys[j], post.proofs[j],
                        detail::slot_context(ctx, "key", j))) {
      return VerifyResult::fail(Reason::kRound1Proof, j);
    }
  }
  return VerifyResult::pass();
}

template <Group G>
VerifyResult verify_round1(const ProtocolConfig& cfg, ByteView bytes) {
  try {
    return verify_round1<G>(cfg, Round1Post<G>::decode(bytes));
  } catch (const Error& e) {
    return VerifyResult::fail(Reason::kMalformed, 0, e.what());
  }
}

// Pads for `party`, after checking every round-1 post.
template <Group G>
PadKeys<G> derive_pads(const ProtocolConfig& cfg,
                       std::span<const Round1Post<G>> posts, std::size_t party) {
  detail::check_party(cfg, party);
  auto by_party = detail::index_posts<Round1Post<G>>(cfg, posts);
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    if (auto r = verify_round1<G>(cfg, *by_party[k]); !r) {
      throw Error(Errc::kInvalidRound1Proof,
                  "party " + std::to_string(k) + ": " + r.describe(), k, r.index);
    }
  }
  return PadKeys<G>{party, detail::pads_for<G>(cfg, by_party, party)};
}

// Encrypts T_i with the round-1 exponents as randomness and attaches the
// bundle the policy asks for. The secret is consumed.
template <Group G>
Round2Post<G> round2_generate(const ProtocolConfig& cfg, std::size_t party,
                              std::span<const std::int64_t> values,
                              Round1Secret<G>&& secret, const PadKeys<G>& pads,
                              const Keypair<G>& longterm, Rng& rng) {
  detail::check_party(cfg, party);
  if (secret.party() != party || pads.party != party) {
    throw Error(Errc::kProtocolState, "round-1 secret or pads belong to another party",
                party);
  }
  if (values.size() != cfg.m || secret.exponents().size() != cfg.m ||
      pads.pads.size() != cfg.m) {
    throw Error(Errc::kShapeMismatch, "contribution length differs from m", party);
  }
  const Round1Secret<G> x = std::move(secret);
  Round2Post<G> post;
  post.party = party;
  for (std::size_t j = 0; j < cfg.m; ++j) {
    post.ciphertexts.push_back(
        encrypt_exp<G>(values[j], x.exponents()[j], pads.pads[j]));
  }
  const Transcript ctx = protocol_context<G>(cfg, 2, party);
  const RangeWitness<G> w{values, x.exponents(), pads.pads, longterm.pk};
  switch (cfg.policy.kind) {
    case NormKind::kNone:
      break;
    case NormKind::kL1:
      post.bundle = prove_l1<G>(w, cfg.policy, ctx, rng);
      break;
    case NormKind::kL2:
      post.bundle = prove_l2<G>(w, cfg.policy, ctx, rng);
      break;
  }
  return post;
}

// Checks a round-2 post against the (already verified) round-1 posts.
template <Group G>
VerifyResult verify_contribution(const ProtocolConfig& cfg,
                                 std::span<const Round1Post<G>> round1,
                                 const Round2Post<G>& post) {
  if (post.party < 1 || post.party > cfg.n || post.ciphertexts.size() != cfg.m) {
    return VerifyResult::fail(Reason::kShape);
  }
  if (post.bundle.index() != static_cast<std::size_t>(cfg.policy.kind)) {
    return VerifyResult::fail(Reason::kPolicy);
  }
  std::vector<const Round1Post<G>*> by_party;
  try {
    by_party = detail::index_posts<Round1Post<G>>(cfg, round1);
  } catch (const Error& e) {
    return VerifyResult::fail(Reason::kMissingPost, e.party().value_or(0), e.what());
  }
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    if (by_party[k]->keys.size() != cfg.m) {
      return VerifyResult::fail(Reason::kMissingPost, k, "round-1 post has wrong length");
    }
  }
  const auto& own = *by_party[post.party];
  for (std::size_t j = 0; j < cfg.m; ++j) {
    if (!(post.ciphertexts[j].a == own.keys[j])) {
      return VerifyResult::fail(Reason::kRound1Link, j);
    }
  }
  const auto pads = detail::pads_for<G>(cfg, by_party, post.party);
  const Transcript ctx = protocol_context<G>(cfg, 2, post.party);
  if (const auto* b = std::get_if<L1RangeProof<G>>(&post.bundle)) {
    return verify_l1<G>(post.ciphertexts, pads, *b, cfg.policy, ctx);
  }
  if (const auto* b = std::get_if<L2RangeProof<G>>(&post.bundle)) {
    return verify_l2<G>(post.ciphertexts, pads, *b, cfg.policy, ctx);
  }
  return VerifyResult::pass();
}

// Byte-level entry point for untrusted input; never throws on bad encodings.
template <Group G>
VerifyResult verify_contribution(const ProtocolConfig& cfg,
                                 std::span<const Round1Post<G>> round1,
                                 ByteView bytes) {
  Round2Post<G> post;
  try {
    post = Round2Post<G>::decode(bytes);
  } catch (const Error& e) {
    return VerifyResult::fail(Reason::kMalformed, 0, e.what());
  }
  return verify_contribution<G>(cfg, round1, post);
}

// prod_i E[T_ij].b = g^(sum_i T_ij) once the pads cancel.
template <Group G>
TallyResult tally(const ProtocolConfig& cfg, std::span<const Round2Post<G>> posts) {
  auto by_party = detail::index_posts<Round2Post<G>>(cfg, posts);
  const DlogWindow window = tally_window(cfg);
  TallyResult out;
  for (std::size_t j = 0; j < cfg.m; ++j) {
    typename G::Element acc = G::identity();
    for (std::size_t k = 1; k <= cfg.n; ++k) {
      if (by_party[k]->ciphertexts.size() != cfg.m) {
        throw Error(Errc::kShapeMismatch, "round-2 post has wrong length", k);
      }
      acc = acc * by_party[k]->ciphertexts[j].b;
    }
    try {
      out.sums.push_back(bsgs<G>(acc, window));
    } catch (const Error& e) {
      if (e.code() != Errc::kNotInWindow) throw;
      throw Error(Errc::kNotInWindow,
                  "slot " + std::to_string(j) + " sum outside tally window",
                  std::nullopt, j);
    }
  }
  return out;
}

// One participant: Init -> Round1 -> PadsDerived -> Round2 -> Tallied. Each
// step is explicit and out-of-order calls fail with ProtocolState.
template <Group G>
class Party {
 public:
  enum class State { kInit, kRound1, kPadsDerived, kRound2, kTallied };

  Party(ProtocolConfig cfg, std::size_t index, Keypair<G> longterm)
      : cfg_(std::move(cfg)), index_(index), longterm_(std::move(longterm)) {
    validate_config<G>(cfg_);
    detail::check_party(cfg_, index_);
  }

  State state() const { return state_; }
  std::size_t index() const { return index_; }
  const ProtocolConfig& config() const { return cfg_; }
  const Keypair<G>& longterm() const { return longterm_; }

  Round1Post<G> round1(Rng& rng) {
    expect(State::kInit);
    auto [secret, post] = round1_generate<G>(cfg_, index_, rng);
    secret_.emplace(std::move(secret));
    state_ = State::kRound1;
    return post;
  }

  const PadKeys<G>& derive(std::span<const Round1Post<G>> posts) {
    expect(State::kRound1);
    pads_ = derive_pads<G>(cfg_, posts, index_);
    state_ = State::kPadsDerived;
    return pads_;
  }

  Round2Post<G> round2(std::span<const std::int64_t> values, Rng& rng) {
    expect(State::kPadsDerived);
    auto post = round2_generate<G>(cfg_, index_, values, std::move(*secret_),
                                   pads_, longterm_, rng);
    secret_.reset();
    state_ = State::kRound2;
    return post;
  }

  TallyResult finish(std::span<const Round2Post<G>> posts) {
    expect(State::kRound2);
    auto result = tally<G>(cfg_, posts);
    state_ = State::kTallied;
    return result;
  }

 private:
  void expect(State s) const {
    if (state_ != s) {
      throw Error(Errc::kProtocolState, "step called out of order", index_);
    }
  }

  ProtocolConfig cfg_;
  std::size_t index_;
  Keypair<G> longterm_;
  State state_ = State::kInit;
  std::optional<Round1Secret<G>> secret_;
  PadKeys<G> pads_;
};

}  // namespace zorro

#endif  // ZORRO_PROTOCOL_HPP_
