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


// Honest in-memory protocol run shared by the unit and acceptance suites.

#ifndef ZORRO_TESTS_HONEST_RUN_HPP_
#define ZORRO_TESTS_HONEST_RUN_HPP_

#include <cstdint>
#include <vector>

#include "zorro/protocol.hpp"

namespace zorro::testing {

template <Group G>
struct HonestRun {
  std::vector<Keypair<G>> longterm;         // index k-1
  std::vector<std::vector<typename G::Scalar>> x;  // round-1 exponents, index k-1
  std::vector<Round1Post<G>> round1;
  std::vector<PadKeys<G>> pads;
  std::vector<Round2Post<G>> round2;
};

template <Group G>
HonestRun<G> honest_run(const ProtocolConfig& cfg,
                        const std::vector<std::vector<std::int64_t>>& inputs,
                        Rng& rng) {
  HonestRun<G> run;
  std::vector<Round1Secret<G>> secrets;
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    auto [secret, post] = round1_generate<G>(cfg, k, rng);
    run.x.emplace_back(secret.exponents().begin(), secret.exponents().end());
    secrets.push_back(std::move(secret));
    run.round1.push_back(std::move(post));
    run.longterm.push_back(Keypair<G>::generate(rng));
  }
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    run.pads.push_back(derive_pads<G>(cfg, run.round1, k));
  }
  for (std::size_t k = 1; k <= cfg.n; ++k) {
    run.round2.push_back(round2_generate<G>(cfg, k, inputs[k - 1],
                                            std::move(secrets[k - 1]),
                                            run.pads[k - 1],
                                            run.longterm[k - 1], rng));
  }
  return run;
}

inline std::vector<std::int64_t> plain_sum(
    const std::vector<std::vector<std::int64_t>>& inputs) {
  std::vector<std::int64_t> out(inputs.front().size(), 0);
  for (const auto& v : inputs) {
    for (std::size_t j = 0; j < v.size(); ++j) out[j] += v[j];
  }
  return out;
}

inline ProtocolConfig make_config(std::size_t n, std::size_t m,
                                  BoundPolicy policy, Rng& rng) {
  ProtocolConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.policy = policy;
  cfg.session = random_session_id(rng);
  return cfg;
}

}  // namespace zorro::testing

#endif  // ZORRO_TESTS_HONEST_RUN_HPP_
