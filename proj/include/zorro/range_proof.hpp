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

#ifndef ZORRO_RANGE_PROOF_HPP_
#define ZORRO_RANGE_PROOF_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zorro/bytes.hpp"
#include "zorro/elgamal.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"
#include "zorro/policy.hpp"
#include "zorro/rng.hpp"
#include "zorro/sigma.hpp"
#include "zorro/transcript.hpp"
#include "zorro/verify_result.hpp"

// Validity proofs for an encrypted contribution E[T_j] = (g^x_j, g^T_j h_j^x_j)
// built from the sigma protocols. Both bundles first re-encrypt every entry
// under the party's long-term key h_i,
//   E*[T_j] = (g^x_j, g^T_j h_i^x_j),
// and link the two with a DH-tuple proof on (g, h_j/h_i, g^x_j, E/E*). All
// further digit and square ciphertexts live under h_i.
namespace zorro {

inline constexpr std::uint8_t kL1BundleTag = 0x21;
inline constexpr std::uint8_t kL2BundleTag = 0x22;

// Length of the square vector: the digit-embedding trick needs more slots
// than digits, so short vectors are padded with encryptions of 0^2.
constexpr std::size_t padded_length(std::size_t m, unsigned digits) {
  return m > digits ? m : static_cast<std::size_t>(digits) + 1;
}

inline std::vector<std::int64_t> binary_digits(std::uint64_t v,
                                               unsigned digits) {
  std::vector<std::int64_t> out(digits);
  for (unsigned l = 0; l < digits; ++l) out[l] = static_cast<std::int64_t>((v >> l) & 1);
  return out;
}

template <Group G>
struct RangeWitness {
  std::span<const std::int64_t> values;               // T_j
  std::span<const typename G::Scalar> randomness;     // x_j, shared with round 1
  std::span<const typename G::Element> pads;          // h_j
  typename G::Element key;                            // long-term h_i
};

template <Group G>
struct L2RangeProof {
  BoundPolicy policy;
  typename G::Element key;
  std::vector<Ciphertext<G>> reencryptions;  // E*[T_j], m
  std::vector<DhTupleProof<G>> links;        // m
  std::vector<Ciphertext<G>> digits;         // E[s_l], L
  std::vector<Ciphertext<G>> squares;        // E[w_j], padded_length(m, L)
  std::vector<BitProof<G>> digit_proofs;     // L
  std::vector<SquareProof<G>> square_proofs; // padded_length(m, L)

  friend bool operator==(const L2RangeProof&, const L2RangeProof&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(kL2BundleTag).put(policy);
    w.u32(static_cast<std::uint32_t>(reencryptions.size()));
    w.u8(static_cast<std::uint8_t>(policy.digits));
    for (const auto& c : reencryptions) w.put(c);
    w.put(key);
    for (const auto& p : links) w.put(p);
    for (const auto& c : digits) w.put(c);
    for (const auto& c : squares) w.put(c);
    for (const auto& p : digit_proofs) w.put(p);
    for (const auto& p : square_proofs) w.put(p);
    return std::move(w).bytes();
  }

  static L2RangeProof read(ByteReader& r) {
    r.expect_tag(kL2BundleTag);
    L2RangeProof p;
    p.policy = BoundPolicy::read(r);
    if (p.policy.kind != NormKind::kL2) {
      throw Error(Errc::kMalformedEncoding, "L2 bundle with non-L2 policy");
    }
    const std::uint32_t m = r.count(2 * G::kElementSize);
    if (r.u8() != p.policy.digits) {
      throw Error(Errc::kMalformedEncoding, "digit count mismatch");
    }
    const unsigned digits = p.policy.digits;
    const std::size_t padded = padded_length(m, digits);
    for (std::uint32_t j = 0; j < m; ++j) p.reencryptions.push_back(Ciphertext<G>::read(r));
    p.key = r.element<G>();
    for (std::uint32_t j = 0; j < m; ++j) p.links.push_back(DhTupleProof<G>::read(r));
    for (unsigned l = 0; l < digits; ++l) p.digits.push_back(Ciphertext<G>::read(r));
    for (std::size_t j = 0; j < padded; ++j) p.squares.push_back(Ciphertext<G>::read(r));
    for (unsigned l = 0; l < digits; ++l) p.digit_proofs.push_back(BitProof<G>::read(r));
    for (std::size_t j = 0; j < padded; ++j) p.square_proofs.push_back(SquareProof<G>::read(r));
    return p;
  }
};

template <Group G>
struct L1RangeProof {
  BoundPolicy policy;
  typename G::Element key;
  std::vector<Ciphertext<G>> reencryptions;      // E*[T_j], m
  std::vector<DhTupleProof<G>> links;            // m
  std::vector<Ciphertext<G>> element_bits;       // E[b_jl], row-major m x L
  std::vector<BitProof<G>> element_bit_proofs;   // m x L
  std::vector<Ciphertext<G>> sum_bits;           // E[sigma_l], L
  std::vector<BitProof<G>> sum_bit_proofs;       // L

  friend bool operator==(const L1RangeProof&, const L1RangeProof&) = default;

  Bytes encode() const {
    ByteWriter w;
    w.u8(kL1BundleTag).put(policy);
    w.u32(static_cast<std::uint32_t>(reencryptions.size()));
    w.u8(static_cast<std::uint8_t>(policy.digits));
    for (const auto& c : reencryptions) w.put(c);
    w.put(key);
    for (const auto& p : links) w.put(p);
    for (const auto& c : element_bits) w.put(c);
    for (const auto& c : sum_bits) w.put(c);
    for (const auto& p : element_bit_proofs) w.put(p);
    for (const auto& p : sum_bit_proofs) w.put(p);
    return std::move(w).bytes();
  }

  static L1RangeProof read(ByteReader& r) {
    r.expect_tag(kL1BundleTag);
    L1RangeProof p;
    p.policy = BoundPolicy::read(r);
    if (p.policy.kind != NormKind::kL1) {
      throw Error(Errc::kMalformedEncoding, "L1 bundle with non-L1 policy");
    }
    const std::uint32_t m = r.count(2 * G::kElementSize);
    if (r.u8() != p.policy.digits) {
      throw Error(Errc::kMalformedEncoding, "digit count mismatch");
    }
    const unsigned digits = p.policy.digits;
    for (std::uint32_t j = 0; j < m; ++j) p.reencryptions.push_back(Ciphertext<G>::read(r));
    p.key = r.element<G>();
    for (std::uint32_t j = 0; j < m; ++j) p.links.push_back(DhTupleProof<G>::read(r));
    for (std::size_t k = 0; k < std::size_t{m} * digits; ++k) {
      p.element_bits.push_back(Ciphertext<G>::read(r));
    }
    for (unsigned l = 0; l < digits; ++l) p.sum_bits.push_back(Ciphertext<G>::read(r));
    for (std::size_t k = 0; k < std::size_t{m} * digits; ++k) {
      p.element_bit_proofs.push_back(BitProof<G>::read(r));
    }
    for (unsigned l = 0; l < digits; ++l) p.sum_bit_proofs.push_back(BitProof<G>::read(r));
    return p;
  }
};

// Prover-side intermediate values, exposed so tests can check the algebraic
// identities directly.
template <Group G>
struct L2Trace {
  std::vector<typename G::Scalar> noise;              // r_j, sums to zero
  std::vector<typename G::Scalar> digit_randomness;   // x'_l
  std::vector<typename G::Scalar> square_randomness;  // r_j + x'_j 2^(j-1)
  std::vector<std::int64_t> digits;                   // s_l
  std::uint64_t sum_of_squares = 0;                   // s
};

namespace detail {

inline Transcript slot_context(const Transcript& ctx, std::string_view what,
                               std::size_t a, std::size_t b = SIZE_MAX) {
  std::string label(what);
  label += "/" + std::to_string(a);
  if (b != SIZE_MAX) label += "/" + std::to_string(b);
  return ctx.fork(label);
}

// r_j = (sum_{k<j} x*_k - sum_{k>j} x*_k) x*_j; the terms cancel pairwise.
template <Group G>
std::vector<typename G::Scalar> l2_noise(
    std::span<const typename G::Scalar> xstar) {
  using Scalar = typename G::Scalar;
  Scalar after = G::scalar(0);
  for (const auto& x : xstar) after = after + x;
  Scalar before = G::scalar(0);
  std::vector<Scalar> out;
  out.reserve(xstar.size());
  for (const auto& x : xstar) {
    after = after - x;
    out.push_back((before - after) * x);
    before = before + x;
  }
  return out;
}

// Randomness rho_0..rho_{L-1} with sum_l 2^l rho_l = target: all but the top
// digit are uniform, the top one absorbs the difference.
template <Group G>
std::vector<typename G::Scalar> weighted_split(const typename G::Scalar& target,
                                               unsigned digits, Rng& rng) {
  using Scalar = typename G::Scalar;
  std::vector<Scalar> out;
  out.reserve(digits);
  Scalar acc = G::scalar(0);
  for (unsigned l = 0; l + 1 < digits; ++l) {
    out.push_back(random_scalar<G>(rng));
    acc = acc + pow2_scalar<G>(l) * out.back();
  }
  out.push_back((target - acc) * pow2_scalar<G>(digits - 1).inverse());
  return out;
}

// Bit proof for an arbitrary claimed digit. Non-binary digits cannot be
// proven, so a forger's best attempt (the m = 0 transcript) is emitted.
template <Group G>
BitProof<G> digit_proof(std::int64_t digit, const typename G::Scalar& rand,
                        const BitStatement<G>& st, const Transcript& ctx,
                        Rng& rng) {
  int bit = (digit == 0 || digit == 1) ? static_cast<int>(digit) : 0;
  return prove_bit<G>(bit, rand, st, ctx, rng);
}

template <Group G>
void check_witness_shape(const RangeWitness<G>& w) {
  if (w.values.size() != w.randomness.size() ||
      w.values.size() != w.pads.size() || w.values.empty()) {
    throw Error(Errc::kShapeMismatch,
                "values, randomness and pads must have equal non-zero length");
  }
  for (const auto& h : w.pads) {
    if (h == w.key) {
      throw Error(Errc::kInvalidStatement,
                  "pad key equals long-term key; link statement degenerates");
    }
  }
}

// Re-encryptions and link proofs shared by both bundles.
template <Group G>
void build_links(const RangeWitness<G>& w,
                 std::span<const std::int64_t> reencrypted,
                 const Transcript& ctx, Rng& rng,
                 std::vector<Ciphertext<G>>& reencryptions,
                 std::vector<DhTupleProof<G>>& links) {
  for (std::size_t j = 0; j < w.values.size(); ++j) {
    auto e = encrypt_exp<G>(w.values[j], w.randomness[j], w.pads[j]);
    auto estar = encrypt_exp<G>(reencrypted[j], w.randomness[j], w.key);
    DhTuple<G> st{G::generator(), w.pads[j] / w.key, e.a, e.b / estar.b};
    links.push_back(prove_dh_tuple<G>(w.randomness[j], st,
                                      slot_context(ctx, "link", j), rng));
    reencryptions.push_back(estar);
  }
}

template <Group G>
struct L2Plan {
  std::vector<std::int64_t> reencrypted;       // plaintexts of E*, m
  std::vector<typename G::Scalar> squares;     // plaintexts of E[w], padded
  std::vector<std::int64_t> digits;            // s_l, L
};

template <Group G>
L2RangeProof<G> build_l2(const RangeWitness<G>& w, const BoundPolicy& policy,
                         const L2Plan<G>& plan, const Transcript& ctx,
                         Rng& rng, L2Trace<G>* trace) {
  using Scalar = typename G::Scalar;
  const std::size_t m = w.values.size();
  const unsigned digits = policy.digits;
  const std::size_t padded = padded_length(m, digits);
  const Transcript base = ctx.fork("l2");

  L2RangeProof<G> p;
  p.policy = policy;
  p.key = w.key;
  build_links<G>(w, plan.reencrypted, base, rng, p.reencryptions, p.links);

  std::vector<Scalar> xprime;
  for (unsigned l = 0; l < digits; ++l) {
    xprime.push_back(random_scalar<G>(rng));
    p.digits.push_back(encrypt_exp<G>(plan.digits[l], xprime[l], w.key));
  }
  for (unsigned l = 0; l < digits; ++l) {
    p.digit_proofs.push_back(digit_proof<G>(
        plan.digits[l], xprime[l], BitStatement<G>{w.key, p.digits[l]},
        slot_context(base, "digit", l), rng));
  }

  std::vector<Scalar> xstar;
  for (std::size_t j = 0; j < padded; ++j) xstar.push_back(random_scalar<G>(rng));
  auto noise = l2_noise<G>(xstar);
  std::vector<Scalar> rho(padded);
  for (std::size_t j = 0; j < padded; ++j) {
    rho[j] = noise[j];
    if (j < digits) rho[j] = rho[j] + xprime[j] * pow2_scalar<G>(static_cast<unsigned>(j));
    p.squares.push_back(encrypt_exp<G>(plan.squares[j], rho[j], w.key));
  }
  for (std::size_t j = 0; j < padded; ++j) {
    const bool real = j < m;
    SquareStatement<G> st{w.key, w.key, G::generator(),
                          real ? p.reencryptions[j] : Ciphertext<G>{},
                          p.squares[j]};
    const Scalar a = real ? G::scalar(w.values[j]) : G::scalar(0);
    const Scalar s_a = real ? w.randomness[j] : G::scalar(0);
    p.square_proofs.push_back(prove_square<G>(a, s_a, rho[j], st,
                                              slot_context(base, "square", j),
                                              rng));
  }

  if (trace != nullptr) {
    trace->noise = noise;
    trace->digit_randomness = xprime;
    trace->square_randomness = rho;
    trace->digits = plan.digits;
  }
  return p;
}

template <Group G>
struct L1Plan {
  std::vector<std::int64_t> reencrypted;    // plaintexts of E*, m
  std::vector<std::int64_t> element_digits; // m x L
  std::vector<std::int64_t> sum_digits;     // L
};

template <Group G>
L1RangeProof<G> build_l1(const RangeWitness<G>& w, const BoundPolicy& policy,
                         const L1Plan<G>& plan, const Transcript& ctx,
                         Rng& rng) {
  using Scalar = typename G::Scalar;
  const std::size_t m = w.values.size();
  const unsigned digits = policy.digits;
  const Transcript base = ctx.fork("l1");

  L1RangeProof<G> p;
  p.policy = policy;
  p.key = w.key;
  build_links<G>(w, plan.reencrypted, base, rng, p.reencryptions, p.links);

  Scalar total_randomness = G::scalar(0);
  for (std::size_t j = 0; j < m; ++j) {
    total_randomness = total_randomness + w.randomness[j];
    auto rho = weighted_split<G>(w.randomness[j], digits, rng);
    for (unsigned l = 0; l < digits; ++l) {
      const std::int64_t bit = plan.element_digits[j * digits + l];
      p.element_bits.push_back(encrypt_exp<G>(bit, rho[l], w.key));
      p.element_bit_proofs.push_back(digit_proof<G>(
          bit, rho[l], BitStatement<G>{w.key, p.element_bits.back()},
          slot_context(base, "element-bit", j, l), rng));
    }
  }
  auto tau = weighted_split<G>(total_randomness, digits, rng);
  for (unsigned l = 0; l < digits; ++l) {
    p.sum_bits.push_back(encrypt_exp<G>(plan.sum_digits[l], tau[l], w.key));
    p.sum_bit_proofs.push_back(digit_proof<G>(
        plan.sum_digits[l], tau[l], BitStatement<G>{w.key, p.sum_bits.back()},
        slot_context(base, "sum-bit", l), rng));
  }
  return p;
}

template <Group G>
Ciphertext<G> recompose(std::span<const Ciphertext<G>> bits) {
  Ciphertext<G> acc;
  for (std::size_t l = 0; l < bits.size(); ++l) {
    acc = acc * bits[l].pow(pow2_scalar<G>(static_cast<unsigned>(l)));
  }
  return acc;
}

template <Group G>
VerifyResult verify_links(std::span<const Ciphertext<G>> cts,
                          std::span<const typename G::Element> pads,
                          const typename G::Element& key,
                          const std::vector<Ciphertext<G>>& reencryptions,
                          const std::vector<DhTupleProof<G>>& links,
                          const Transcript& base) {
  for (std::size_t j = 0; j < cts.size(); ++j) {
    const auto& e = cts[j];
    const auto& estar = reencryptions[j];
    if (!(e.a == estar.a) || pads[j] == key) {
      return VerifyResult::fail(Reason::kTuple, j, "re-encryption randomness differs");
    }
    DhTuple<G> st{G::generator(), pads[j] / key, e.a, e.b / estar.b};
    if (!verify_dh_tuple<G>(st, links[j], slot_context(base, "link", j))) {
      return VerifyResult::fail(Reason::kTuple, j);
    }
  }
  return VerifyResult::pass();
}

}  // namespace detail

// Proves sum_j T_j^2 <= 2^L - 1 for the ciphertexts E[T_j] under pads h_j.
template <Group G>
L2RangeProof<G> prove_l2(const RangeWitness<G>& w, const BoundPolicy& policy,
                         const Transcript& ctx, Rng& rng,
                         L2Trace<G>* trace = nullptr) {
  if (policy.kind != NormKind::kL2) {
    throw Error(Errc::kInvalidArgument, "prove_l2 needs an L2 policy");
  }
  detail::check_witness_shape(w);
  const std::size_t m = w.values.size();
  check_policy_fits<G>(policy, m, 1);

  unsigned __int128 s = 0;
  for (std::int64_t t : w.values) {
    const unsigned __int128 mag = t < 0 ? static_cast<std::uint64_t>(-(t + 1)) + 1
                                        : static_cast<std::uint64_t>(t);
    s += mag * mag;
    if (s > policy.effective_bound()) {
      throw Error(Errc::kBoundExceeded,
                  "squared L2 norm exceeds " + std::to_string(policy.effective_bound()));
    }
  }
  detail::L2Plan<G> plan;
  plan.reencrypted.assign(w.values.begin(), w.values.end());
  for (std::size_t j = 0; j < padded_length(m, policy.digits); ++j) {
    plan.squares.push_back(j < m ? G::scalar(w.values[j]) * G::scalar(w.values[j])
                                 : G::scalar(0));
  }
  plan.digits = binary_digits(static_cast<std::uint64_t>(s), policy.digits);
  if (trace != nullptr) trace->sum_of_squares = static_cast<std::uint64_t>(s);
  return detail::build_l2<G>(w, policy, plan, ctx, rng, trace);
}

// Checks, in order: link tuples, the consistency identity
// prod_j E[w_j] = prod_l E[s_l]^(2^l), digit bit proofs, square proofs.
template <Group G>
VerifyResult verify_l2(std::span<const Ciphertext<G>> cts,
                       std::span<const typename G::Element> pads,
                       const L2RangeProof<G>& p, const BoundPolicy& policy,
                       const Transcript& ctx) {
  if (!(p.policy == policy) || policy.kind != NormKind::kL2) {
    return VerifyResult::fail(Reason::kPolicy);
  }
  const std::size_t m = cts.size();
  const unsigned digits = policy.digits;
  const std::size_t padded = padded_length(m, digits);
  if (m == 0 || pads.size() != m || p.reencryptions.size() != m ||
      p.links.size() != m || p.digits.size() != digits ||
      p.digit_proofs.size() != digits || p.squares.size() != padded ||
      p.square_proofs.size() != padded) {
    return VerifyResult::fail(Reason::kShape);
  }
  const Transcript base = ctx.fork("l2");

  if (auto r = detail::verify_links<G>(cts, pads, p.key, p.reencryptions,
                                       p.links, base);
      !r) {
    return r;
  }

  Ciphertext<G> lhs;
  for (const auto& c : p.squares) lhs = lhs * c;
  if (!(lhs == detail::recompose<G>(p.digits))) {
    return VerifyResult::fail(Reason::kConsistency);
  }

  for (unsigned l = 0; l < digits; ++l) {
    if (!verify_bit<G>(BitStatement<G>{p.key, p.digits[l]}, p.digit_proofs[l],
                       detail::slot_context(base, "digit", l))) {
      return VerifyResult::fail(Reason::kBit, l);
    }
  }

  for (std::size_t j = 0; j < padded; ++j) {
    SquareStatement<G> st{p.key, p.key, G::generator(),
                          j < m ? p.reencryptions[j] : Ciphertext<G>{},
                          p.squares[j]};
    if (!verify_square<G>(st, p.square_proofs[j],
                          detail::slot_context(base, "square", j))) {
      return VerifyResult::fail(Reason::kSquare, j);
    }
  }
  return VerifyResult::pass();
}

// Proves T_j >= 0 for all j and sum_j T_j <= 2^L - 1.
template <Group G>
L1RangeProof<G> prove_l1(const RangeWitness<G>& w, const BoundPolicy& policy,
                         const Transcript& ctx, Rng& rng) {
  if (policy.kind != NormKind::kL1) {
    throw Error(Errc::kInvalidArgument, "prove_l1 needs an L1 policy");
  }
  detail::check_witness_shape(w);
  const std::size_t m = w.values.size();
  check_policy_fits<G>(policy, m, 1);

  unsigned __int128 sum = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (w.values[j] < 0) {
      throw Error(Errc::kNegativeEntry, "negative entry at index " + std::to_string(j),
                  std::nullopt, j);
    }
    sum += static_cast<std::uint64_t>(w.values[j]);
  }
  if (sum > policy.effective_bound()) {
    throw Error(Errc::kBoundExceeded,
                "L1 norm exceeds " + std::to_string(policy.effective_bound()));
  }
  detail::L1Plan<G> plan;
  plan.reencrypted.assign(w.values.begin(), w.values.end());
  for (std::int64_t t : w.values) {
    auto bits = binary_digits(static_cast<std::uint64_t>(t), policy.digits);
    plan.element_digits.insert(plan.element_digits.end(), bits.begin(), bits.end());
  }
  plan.sum_digits = binary_digits(static_cast<std::uint64_t>(sum), policy.digits);
  return detail::build_l1<G>(w, policy, plan, ctx, rng);
}

// Checks, in order: link tuples, per-element recomposition
// prod_l E[b_jl]^(2^l) = E*[T_j], element bit proofs, sum consistency
// prod_j E*[T_j] = prod_l E[sigma_l]^(2^l), sum bit proofs.
template <Group G>
VerifyResult verify_l1(std::span<const Ciphertext<G>> cts,
                       std::span<const typename G::Element> pads,
                       const L1RangeProof<G>& p, const BoundPolicy& policy,
                       const Transcript& ctx) {
  if (!(p.policy == policy) || policy.kind != NormKind::kL1) {
    return VerifyResult::fail(Reason::kPolicy);
  }
  const std::size_t m = cts.size();
  const unsigned digits = policy.digits;
  if (m == 0 || pads.size() != m || p.reencryptions.size() != m ||
      p.links.size() != m || p.element_bits.size() != m * digits ||
      p.element_bit_proofs.size() != m * digits ||
      p.sum_bits.size() != digits || p.sum_bit_proofs.size() != digits) {
    return VerifyResult::fail(Reason::kShape);
  }
  const Transcript base = ctx.fork("l1");

  if (auto r = detail::verify_links<G>(cts, pads, p.key, p.reencryptions,
                                       p.links, base);
      !r) {
    return r;
  }

  for (std::size_t j = 0; j < m; ++j) {
    std::span<const Ciphertext<G>> bits(p.element_bits.data() + j * digits, digits);
    if (!(detail::recompose<G>(bits) == p.reencryptions[j])) {
      return VerifyResult::fail(Reason::kRecomposition, j);
    }
    for (unsigned l = 0; l < digits; ++l) {
      const std::size_t k = j * digits + l;
      if (!verify_bit<G>(BitStatement<G>{p.key, p.element_bits[k]},
                         p.element_bit_proofs[k],
                         detail::slot_context(base, "element-bit", j, l))) {
        return VerifyResult::fail(Reason::kBit, k);
      }
    }
  }

  Ciphertext<G> total;
  for (const auto& c : p.reencryptions) total = total * c;
  if (!(total == detail::recompose<G>(p.sum_bits))) {
    return VerifyResult::fail(Reason::kConsistency);
  }
  for (unsigned l = 0; l < digits; ++l) {
    if (!verify_bit<G>(BitStatement<G>{p.key, p.sum_bits[l]}, p.sum_bit_proofs[l],
                       detail::slot_context(base, "sum-bit", l))) {
      return VerifyResult::fail(Reason::kBit, m * digits + l);
    }
  }
  return VerifyResult::pass();
}

}  // namespace zorro

#endif  // ZORRO_RANGE_PROOF_HPP_
