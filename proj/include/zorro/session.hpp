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

#ifndef ZORRO_SESSION_HPP_
#define ZORRO_SESSION_HPP_

#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "zorro/elgamal.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"
#include "zorro/ledger.hpp"
#include "zorro/protocol.hpp"
#include "zorro/rng.hpp"
#include "zorro/verify_result.hpp"

// In-process simulation of a whole session. Parties share nothing but the
// ledger: every post is serialized, appended, and read back by the others.
namespace zorro {

// Public verdict on a ledger, computable by anyone holding the file.
struct AuditReport {
  LedgerFault chain;
  std::optional<std::size_t> bad_party;  // first party whose post failed
  unsigned bad_round = 0;
  VerifyResult verdict;
  std::optional<std::size_t> dropout;    // completed round 1 only
  std::optional<TallyResult> tally;

  bool ok() const { return chain.ok() && !bad_party && !dropout && tally.has_value(); }

  std::string describe() const {
    if (!chain.ok()) return chain.describe();
    if (bad_party) {
      return "party " + std::to_string(*bad_party) + " round " +
             std::to_string(bad_round) + ": " + verdict.describe();
    }
    if (dropout) return "party " + std::to_string(*dropout) + " did not post round 2";
    if (!tally) return "no tally";
    return "ok";
  }
};

namespace detail {

// Runs f(0..count-1) on a small pool and returns the results in order.
template <class F>
auto parallel_map(std::size_t count, F f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < count; k += workers) out[k] = f(k);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace detail

// Chain check, round-1 proofs, round-2 bundles, then the tally. Stops at the
// first failure and names the culprit.
template <Group G>
AuditReport audit_ledger(const Ledger& ledger, bool parallel = true) {
  AuditReport report;
  report.chain = ledger.check();
  if (!report.chain.ok()) return report;
  const LedgerHeader& h = ledger.header();
  if (h.group != G::kId || h.group_name != G::kName) {
    report.chain = {LedgerFault::Where::kHeader, 0, "ledger group differs"};
    return report;
  }
  const ProtocolConfig cfg = h.config();
  try {
    validate_config<G>(cfg);
  } catch (const Error& e) {
    report.chain = {LedgerFault::Where::kHeader, 0, e.what()};
    return report;
  }

  auto fail = [&](std::size_t party, unsigned round, VerifyResult r) {
    report.bad_party = party;
    report.bad_round = round;
    report.verdict = std::move(r);
    return report;
  };

  auto r1_entries = ledger.read_round(1);
  std::vector<Round1Post<G>> r1;
  for (const auto& e : r1_entries) {
    try {
      r1.push_back(Round1Post<G>::decode(e.payload));
    } catch (const Error& err) {
      return fail(e.party, 1, VerifyResult::fail(Reason::kMalformed, 0, err.what()));
    }
    if (r1.back().party != e.party) {
      return fail(e.party, 1, VerifyResult::fail(Reason::kShape, 0, "party field"));
    }
  }
  auto verdicts1 = [&] {
    auto check = [&](std::size_t k) { return verify_round1<G>(cfg, r1[k]); };
    if (parallel) return detail::parallel_map(r1.size(), check);
    std::vector<VerifyResult> v;
    for (std::size_t k = 0; k < r1.size(); ++k) v.push_back(check(k));
    return v;
  }();
  for (std::size_t k = 0; k < r1.size(); ++k) {
    if (!verdicts1[k]) return fail(r1[k].party, 1, verdicts1[k]);
  }
  std::vector<bool> posted1(cfg.n + 1, false);
  for (const auto& p : r1) posted1[p.party] = true;
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    if (!posted1[k]) {
      return fail(k, 1, VerifyResult::fail(Reason::kMissingPost, k));
    }
  }

  auto r2_entries = ledger.read_round(2);
  std::vector<Round2Post<G>> r2;
  for (const auto& e : r2_entries) {
    try {
      r2.push_back(Round2Post<G>::decode(e.payload));
    } catch (const Error& err) {
      return fail(e.party, 2, VerifyResult::fail(Reason::kMalformed, 0, err.what()));
    }
    if (r2.back().party != e.party) {
      return fail(e.party, 2, VerifyResult::fail(Reason::kShape, 0, "party field"));
    }
  }
  std::span<const Round1Post<G>> r1_view(r1);
  auto check2 = [&](std::size_t k) { return verify_contribution<G>(cfg, r1_view, r2[k]); };
  auto verdicts2 = [&] {
    if (parallel) return detail::parallel_map(r2.size(), check2);
    std::vector<VerifyResult> v;
    for (std::size_t k = 0; k < r2.size(); ++k) v.push_back(check2(k));
    return v;
  }();
  for (std::size_t k = 0; k < r2.size(); ++k) {
    if (!verdicts2[k]) return fail(r2[k].party, 2, verdicts2[k]);
  }
  std::vector<bool> posted2(cfg.n + 1, false);
  for (const auto& p : r2) posted2[p.party] = true;
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    if (!posted2[k]) {
      report.dropout = k;
      return report;
    }
  }
  try {
    report.tally = tally<G>(cfg, std::span<const Round2Post<G>>(r2));
  } catch (const Error& e) {
    report.verdict = VerifyResult::fail(Reason::kConsistency, e.index().value_or(0), e.what());
  }
  return report;
}

struct SessionOptions {
  // Party that posts round 1 and then goes silent.
  std::optional<std::size_t> dropout;
  bool parallel_verify = true;
};

// Runs all n parties over `ledger`. Throws SessionAborted naming a party that
// skipped round 2; any verification failure surfaces as the matching error.
template <Group G>
TallyResult run_session(const ProtocolConfig& cfg,
                        std::span<const std::vector<std::int64_t>> inputs,
                        Ledger& ledger, Rng& rng, const SessionOptions& opts = {}) {
  validate_config<G>(cfg);
  if (inputs.size() != cfg.n) {
    throw Error(Errc::kShapeMismatch, "need one input vector per party");
  }
  std::vector<Party<G>> parties;
  std::vector<SeededRng> rngs;
  for (std::size_t i = 1; i <= cfg.n; ++i) {
    Digest key;
    rng.fill(key);
    rngs.emplace_back(key);
    parties.emplace_back(cfg, i, Keypair<G>::generate(rngs.back()));
  }

  for (auto& p : parties) {
    auto post = p.round1(rngs[p.index() - 1]);
    ledger.append(1, static_cast<std::uint32_t>(p.index()), post.encode());
  }

  auto read1 = [&] {
    std::vector<Round1Post<G>> posts;
    for (const auto& e : ledger.read_round(1)) posts.push_back(Round1Post<G>::decode(e.payload));
    return posts;
  };
  for (auto& p : parties) {
    auto posts = read1();
    p.derive(posts);
  }

  for (auto& p : parties) {
    if (opts.dropout && *opts.dropout == p.index()) continue;
    auto post = p.round2(inputs[p.index() - 1], rngs[p.index() - 1]);
    ledger.append(2, static_cast<std::uint32_t>(p.index()), post.encode());
  }

  AuditReport report = audit_ledger<G>(ledger, opts.parallel_verify);
  if (!report.chain.ok()) {
    throw Error(Errc::kChainBroken, report.chain.describe());
  }
  if (report.bad_party) {
    throw Error(Errc::kInvalidStatement, report.describe(), report.bad_party);
  }
  if (report.dropout) {
    throw Error(Errc::kSessionAborted, report.describe(), report.dropout);
  }
  if (!report.tally) throw Error(Errc::kNotInWindow, report.verdict.describe());

  std::vector<Round2Post<G>> r2;
  for (const auto& e : ledger.read_round(2)) r2.push_back(Round2Post<G>::decode(e.payload));
  TallyResult result;
  for (auto& p : parties) {
    auto t = p.finish(r2);
    if (p.index() == 1) result = t;
  }
  return result;
}

}  // namespace zorro

#endif  // ZORRO_SESSION_HPP_
