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


// zorro: simulate self-tallying aggregation sessions over a file ledger.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zorro/zorro.hpp"

namespace {

using namespace zorro;

enum Exit : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitProof = 2,
  kExitLedger = 3,
  kExitDropout = 4,
};

struct RunSpec {
  std::size_t parties = 3;
  std::size_t dim = 2;
  std::uint64_t bound = 4;
  std::string check = "l1";
  std::string group = "test";
  std::uint64_t seed = 1;
  std::string ledger;
  std::string out;
  std::optional<std::size_t> dropout;
};

int exit_code(const Error& e) {
  switch (e.code()) {
    case Errc::kSessionAborted: return kExitDropout;
    case Errc::kChainBroken: return kExitLedger;
    case Errc::kInvalidStatement:
    case Errc::kInvalidRound1Proof:
    case Errc::kNotInWindow: return kExitProof;
    default: return kExitUsage;
  }
}

template <class F>
int with_group(const std::string& name, F&& f) {
  if (name == "toy") return f.template operator()<Toy23>();
  if (name == "test") return f.template operator()<Schnorr64>();
  if (name == "prod") return f.template operator()<Ristretto255>();
  std::cerr << "unknown group '" << name << "' (toy, test, prod)\n";
  return kExitUsage;
}

int with_group_id(GroupId id, const auto& f) {
  switch (id) {
    case GroupId::kToy23: return with_group("toy", f);
    case GroupId::kSchnorr64: return with_group("test", f);
    case GroupId::kRistretto255: return with_group("prod", f);
  }
  std::cerr << "ledger names an unknown group\n";
  return kExitLedger;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::int64_t to_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = std::stoll(s, &used);
  if (used != s.size()) throw Error(Errc::kInvalidArgument, "not an integer: '" + s + "'");
  return v;
}

// Rows of comma-separated values; blank lines and '#' comments are skipped.
std::vector<std::vector<std::string>> read_rows(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::kInvalidArgument, "cannot read " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line, ',');
    for (auto& c : cells) {
      c.erase(0, c.find_first_not_of(" \t"));
      c.erase(c.find_last_not_of(" \t") + 1);
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string join(std::span<const std::int64_t> v) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + std::to_string(v[j]);
  return out;
}

void write_out(const RunSpec& spec, const std::string& text) {
  if (spec.out.empty()) return;
  std::ofstream f(spec.out);
  if (!f) throw Error(Errc::kInvalidArgument, "cannot write " + spec.out);
  f << text;
}

// Runs one session and prints the tally; all parties post through the ledger.
template <Group G>
TallyResult run(const RunSpec& spec, const ProtocolConfig& cfg,
                const std::vector<std::vector<std::int64_t>>& inputs) {
  SeededRng rng(spec.seed);
  Ledger ledger(make_header<G>(cfg));
  if (!spec.ledger.empty()) ledger.attach(spec.ledger);
  SessionOptions opts;
  opts.dropout = spec.dropout;
  return run_session<G>(cfg, inputs, ledger, rng, opts);
}

SessionId session_for(std::uint64_t seed) {
  SeededRng rng(seed ^ 0x5e55'1011'd000'0001ULL);
  return random_session_id(rng);
}

ProtocolConfig make_config(const RunSpec& spec, std::size_t m, const BoundPolicy& policy) {
  return ProtocolConfig{spec.parties, m, policy, session_for(spec.seed), std::nullopt};
}

// ---------------------------------------------------------------------------

int cmd_vote(RunSpec spec, const std::string& ballots_path) {
  std::vector<std::vector<std::int64_t>> ballots;
  for (const auto& row : read_rows(ballots_path)) {
    std::vector<std::int64_t> b;
    for (const auto& c : row) b.push_back(to_int(c));
    ballots.push_back(std::move(b));
  }
  if (ballots.size() < 2) throw Error(Errc::kInvalidArgument, "need at least two ballots");
  const std::size_t m = ballots[0].size();
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    if (ballots[i].size() != m) {
      throw Error(Errc::kShapeMismatch, "ballot " + std::to_string(i + 1) + " has wrong length");
    }
    try {
      encode_ballot(ballots[i], spec.bound);
    } catch (const Error& e) {
      const std::string why = std::string(e.what()).substr(errc_name(e.code()).size() + 2);
      throw Error(e.code(), "voter " + std::to_string(i + 1) + ": " + why, i + 1);
    }
  }
  spec.parties = ballots.size();
  const auto cfg = make_config(spec, m, BoundPolicy::l1(spec.bound - 1));
  return with_group(spec.group, [&]<class G>() {
    validate_config<G>(cfg);
    auto t = run<G>(spec, cfg, ballots);
    std::string report;
    for (std::size_t j = 0; j < m; ++j) {
      report += "candidate " + std::to_string(j + 1) + ": " + std::to_string(t.sums[j]) + "\n";
    }
    std::cout << report;
    write_out(spec, report);
    return kExitOk;
  });
}

std::vector<std::int64_t> random_input(Rng& rng, const BoundPolicy& policy, std::size_t m,
                                       std::uint64_t bound) {
  std::vector<std::int64_t> v(m, 0);
  switch (policy.kind) {
    case NormKind::kL1: {
      auto total = rng.uniform(0, static_cast<std::int64_t>(bound));
      for (std::int64_t u = 0; u < total; ++u) ++v[rng.uniform(0, static_cast<std::int64_t>(m) - 1)];
      break;
    }
    case NormKind::kL2: {
      auto w = static_cast<std::int64_t>(std::floor(static_cast<double>(bound) /
                                                    std::sqrt(static_cast<double>(m))));
      for (auto& x : v) x = rng.uniform(-w, w);
      break;
    }
    case NormKind::kNone:
      for (auto& x : v) x = rng.uniform(0, static_cast<std::int64_t>(bound));
      break;
  }
  return v;
}

int cmd_aggregate(const RunSpec& spec, const std::string& input_path) {
  const BoundPolicy policy = BoundPolicy::make(parse_norm_kind(spec.check), spec.bound);
  std::vector<std::vector<std::int64_t>> inputs;
  RunSpec s = spec;
  if (!input_path.empty()) {
    for (const auto& row : read_rows(input_path)) {
      std::vector<std::int64_t> v;
      for (const auto& c : row) v.push_back(to_int(c));
      inputs.push_back(std::move(v));
    }
    if (inputs.empty()) throw Error(Errc::kInvalidArgument, "empty input file");
    s.parties = inputs.size();
    s.dim = inputs[0].size();
  } else {
    SeededRng rng(spec.seed + 1);
    for (std::size_t i = 0; i < s.parties; ++i) {
      inputs.push_back(random_input(rng, policy, s.dim, spec.bound));
    }
  }
  auto cfg = make_config(s, s.dim, policy);
  if (policy.kind == NormKind::kNone) {
    std::int64_t lo = 0, hi = 0;
    for (const auto& v : inputs) {
      for (auto x : v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    }
    const auto n = static_cast<std::int64_t>(s.parties);
    cfg.window = DlogWindow{n * lo, n * std::max<std::int64_t>(hi, spec.bound)};
  }
  std::vector<std::int64_t> oracle(s.dim, 0);
  for (const auto& v : inputs) {
    if (v.size() != s.dim) throw Error(Errc::kShapeMismatch, "input rows differ in length");
    for (std::size_t j = 0; j < s.dim; ++j) oracle[j] += v[j];
  }
  return with_group(s.group, [&]<class G>() {
    validate_config<G>(cfg);
    auto t = run<G>(s, cfg, inputs);
    std::string report = "policy " + policy.describe() + "\n" + "tally  " + join(t.sums) +
                         "\n" + "oracle " + join(oracle) + "\n";
    std::cout << report;
    write_out(s, report);
    return t.sums == oracle ? kExitOk : kExitProof;
  });
}

int cmd_verify(const std::string& path) {
  const std::string text = Ledger::read_file(path);
  LedgerFault fault;
  Ledger ledger = Ledger::parse(text, &fault);
  if (!fault.ok()) {
    std::cout << "FAIL " << fault.describe() << "\n";
    return kExitLedger;
  }
  return with_group_id(ledger.header().group, [&]<class G>() {
    AuditReport r = audit_ledger<G>(ledger);
    if (!r.chain.ok()) {
      std::cout << "FAIL " << r.chain.describe() << "\n";
      return static_cast<int>(kExitLedger);
    }
    if (r.bad_party) {
      std::cout << "FAIL " << r.describe() << "\n";
      return static_cast<int>(kExitProof);
    }
    if (r.dropout) {
      std::cout << "FAIL " << r.describe() << "\n";
      return static_cast<int>(kExitDropout);
    }
    if (!r.tally) {
      std::cout << "FAIL " << r.verdict.describe() << "\n";
      return static_cast<int>(kExitProof);
    }
    std::cout << "OK " << ledger.size() << " entries, tally " << join(r.tally->sums) << "\n";
    return static_cast<int>(kExitOk);
  });
}

// ---------------------------------------------------------------------------
// Benchmarks

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct BenchRow {
  std::size_t n, m;
  std::uint64_t bound;
  double gen_ms, verify_ms, tally_ms;
};

// Times one party's round-2 proof generation, one verification of that post,
// and the tally, each as the median over `reps` runs.
template <Group G>
BenchRow bench_point(std::size_t n, std::size_t m, std::uint64_t bound, NormKind kind,
                     unsigned reps, std::uint64_t seed) {
  SeededRng rng(seed);
  ProtocolConfig cfg{n, m, BoundPolicy::make(kind, bound), random_session_id(rng), std::nullopt};
  if (kind == NormKind::kNone) cfg.window = DlogWindow{0, static_cast<std::int64_t>(n * bound)};
  std::vector<Round1Secret<G>> secrets;
  std::vector<Round1Post<G>> r1;
  for (std::size_t i = 1; i <= n; ++i) {
    auto [s, p] = round1_generate<G>(cfg, i, rng);
    secrets.push_back(std::move(s));
    r1.push_back(std::move(p));
  }
  std::vector<PadKeys<G>> pads;
  for (std::size_t i = 1; i <= n; ++i) pads.push_back(derive_pads<G>(cfg, r1, i));
  std::vector<std::vector<std::int64_t>> inputs;
  for (std::size_t i = 0; i < n; ++i) inputs.push_back(random_input(rng, cfg.policy, m, bound));
  auto keys = Keypair<G>::generate(rng);

  std::vector<double> gen, ver, tal;
  std::vector<Round2Post<G>> r2(n);
  for (unsigned rep = 0; rep < reps; ++rep) {
    for (std::size_t i = 1; i <= n; ++i) {
      // Fresh secrets per repetition: round-2 consumes them.
      Round1Secret<G> x(i, std::vector<typename G::Scalar>(secrets[i - 1].exponents().begin(),
                                                            secrets[i - 1].exponents().end()));
      double ms = time_ms([&] {
        r2[i - 1] = round2_generate<G>(cfg, i, inputs[i - 1], std::move(x), pads[i - 1], keys, rng);
      });
      if (i == 1) gen.push_back(ms);
    }
    ver.push_back(time_ms([&] {
      if (!verify_contribution<G>(cfg, std::span<const Round1Post<G>>(r1), r2[0])) {
        throw Error(Errc::kInvalidStatement, "benchmark post failed to verify");
      }
    }));
    tal.push_back(time_ms([&] { tally<G>(cfg, std::span<const Round2Post<G>>(r2)); }));
  }
  return {n, m, bound, median(gen), median(ver), median(tal)};
}

// Per-user cost of checking every contribution of an n-party session.
template <Group G>
double bench_verify_all(std::size_t n, std::size_t m, std::uint64_t bound, unsigned reps,
                        std::uint64_t seed) {
  SeededRng rng(seed);
  ProtocolConfig cfg{n, m, BoundPolicy::l1(bound), random_session_id(rng), std::nullopt};
  std::vector<Round1Secret<G>> secrets;
  std::vector<Round1Post<G>> r1;
  for (std::size_t i = 1; i <= n; ++i) {
    auto [s, p] = round1_generate<G>(cfg, i, rng);
    secrets.push_back(std::move(s));
    r1.push_back(std::move(p));
  }
  std::vector<Round2Post<G>> r2;
  for (std::size_t i = 1; i <= n; ++i) {
    auto pads = derive_pads<G>(cfg, r1, i);
    auto in = random_input(rng, cfg.policy, m, bound);
    r2.push_back(round2_generate<G>(cfg, i, in, std::move(secrets[i - 1]), pads,
                                    Keypair<G>::generate(rng), rng));
  }
  std::vector<double> t;
  for (unsigned rep = 0; rep < reps; ++rep) {
    t.push_back(time_ms([&] {
      for (const auto& p : r2) {
        if (!verify_contribution<G>(cfg, std::span<const Round1Post<G>>(r1), p)) {
          throw Error(Errc::kInvalidStatement, "benchmark post failed to verify");
        }
      }
    }));
  }
  return median(t);
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const auto& x : split(s, ',')) out.push_back(static_cast<std::uint64_t>(to_int(x)));
  return out;
}

int cmd_bench(const RunSpec& spec, const std::string& mode, const std::string& m_list,
              const std::string& b_list, const std::string& n_list, unsigned reps) {
  const NormKind kind = parse_norm_kind(spec.check);
  return with_group(spec.group, [&]<class G>() {
    std::ostringstream csv;
    auto emit = [&](const std::string& line) {
      csv << line << '\n';
      std::cout << line << std::endl;
    };
    if (mode == "grid") {
      emit("m,B,gen_ms,verify_ms,tally_ms");
      for (auto b : parse_list(b_list)) {
        for (auto m : parse_list(m_list)) {
          auto row = bench_point<G>(2, m, b, kind, reps, spec.seed);
          std::ostringstream line;
          line << row.m << ',' << row.bound << ',' << row.gen_ms << ',' << row.verify_ms << ','
               << row.tally_ms;
          emit(line.str());
        }
      }
    } else if (mode == "parties") {
      emit("n,m,B,verify_all_ms,per_party_ms");
      for (auto n : parse_list(n_list)) {
        double ms = bench_verify_all<G>(n, spec.dim, spec.bound, reps, spec.seed);
        std::ostringstream line;
        line << n << ',' << spec.dim << ',' << spec.bound << ',' << ms << ','
             << ms / static_cast<double>(n);
        emit(line.str());
      }
    } else {
      std::cerr << "unknown bench mode '" << mode << "' (grid, parties)\n";
      return static_cast<int>(kExitUsage);
    }
    write_out(spec, csv.str());
    return static_cast<int>(kExitOk);
  });
}

// ---------------------------------------------------------------------------
// Reduction demos. Each builds per-party inputs (from --data or synthetic),
// runs a session, and compares against the centralized statistic.

int cmd_demo_lda(RunSpec spec, const std::string& data, std::size_t words, std::size_t topics) {
  std::vector<CountMatrix> local(spec.parties, CountMatrix(words, topics));
  if (!data.empty()) {
    // party,word,topic,count
    std::size_t parties = 0;
    for (const auto& r : read_rows(data)) parties = std::max<std::size_t>(parties, to_int(r.at(0)));
    local.assign(parties, CountMatrix(words, topics));
    for (const auto& r : read_rows(data)) {
      local.at(to_int(r.at(0)) - 1).at(to_int(r.at(1)), to_int(r.at(2))) += to_int(r.at(3));
    }
    spec.parties = parties;
  } else {
    SeededRng rng(spec.seed + 2);
    for (auto& mat : local) {
      auto tokens = rng.uniform(0, static_cast<std::int64_t>(spec.bound));
      for (std::int64_t t = 0; t < tokens; ++t) {
        mat.at(rng.uniform(0, words - 1), rng.uniform(0, topics - 1)) += 1;
      }
    }
  }
  std::vector<std::vector<std::int64_t>> inputs;
  CountMatrix pooled(words, topics);
  for (const auto& mat : local) {
    inputs.push_back(encode_counts(mat, spec.bound).values);
    pooled += mat;
  }
  const auto cfg = make_config(spec, words * topics, BoundPolicy::l1(spec.bound));
  return with_group(spec.group, [&]<class G>() {
    validate_config<G>(cfg);
    auto t = run<G>(spec, cfg, inputs);
    CountMatrix got = decode_counts(t.sums, words, topics);
    std::ostringstream os;
    os << "N_wk (words x topics)\n";
    for (std::size_t w = 0; w < words; ++w) {
      for (std::size_t k = 0; k < topics; ++k) os << (k ? " " : "") << got.at(w, k);
      os << "\n";
    }
    os << (got == pooled ? "matches centralized counts\n" : "MISMATCH with centralized counts\n");
    std::cout << os.str();
    write_out(spec, os.str());
    return got == pooled ? static_cast<int>(kExitOk) : static_cast<int>(kExitProof);
  });
}

struct Labeled {
  std::vector<std::vector<LabeledSample>> per_party;
  NbShape shape;
};

// party,label,f1,f2,... or synthetic with two features.
Labeled labeled_data(RunSpec& spec, const std::string& data) {
  Labeled d;
  if (!data.empty()) {
    auto rows = read_rows(data);
    std::size_t parties = 0, labels = 0;
    std::vector<std::size_t> values;
    for (const auto& r : rows) {
      parties = std::max<std::size_t>(parties, to_int(r.at(0)));
      labels = std::max<std::size_t>(labels, to_int(r.at(1)) + 1);
      values.resize(r.size() - 2, 0);
      for (std::size_t i = 2; i < r.size(); ++i) {
        values[i - 2] = std::max<std::size_t>(values[i - 2], to_int(r[i]) + 1);
      }
    }
    d.shape = {labels, values};
    d.per_party.resize(parties);
    for (const auto& r : rows) {
      LabeledSample s;
      s.label = to_int(r[1]);
      for (std::size_t i = 2; i < r.size(); ++i) s.features.push_back(to_int(r[i]));
      d.per_party[to_int(r[0]) - 1].push_back(std::move(s));
    }
    spec.parties = parties;
  } else {
    SeededRng rng(spec.seed + 3);
    d.shape = {2, {3, 2}};
    d.per_party.resize(spec.parties);
    for (auto& samples : d.per_party) {
      auto count = rng.uniform(1, 6);
      for (std::int64_t k = 0; k < count; ++k) {
        LabeledSample s;
        s.label = rng.uniform(0, 1);
        s.features = {static_cast<std::size_t>((s.label + rng.uniform(0, 2)) % 3),
                      static_cast<std::size_t>(rng.uniform(0, 3) == 0 ? 1 - s.label : s.label)};
        samples.push_back(std::move(s));
      }
    }
  }
  return d;
}

int cmd_demo_id3(RunSpec spec, const std::string& data) {
  Labeled d = labeled_data(spec, data);
  return with_group(spec.group, [&]<class G>() {
    int rc = kExitOk;
    std::ostringstream os;
    for (std::size_t f = 0; f < d.shape.values.size(); ++f) {
      const std::size_t values = d.shape.values[f];
      std::vector<std::vector<std::int64_t>> inputs;
      CountMatrix pooled(values, d.shape.labels);
      for (const auto& samples : d.per_party) {
        std::vector<std::size_t> feat, lab;
        for (const auto& s : samples) {
          feat.push_back(s.features[f]);
          lab.push_back(s.label);
        }
        auto local = split_counts(feat, lab, values, d.shape.labels);
        pooled += local;
        inputs.push_back(encode_split(local, spec.bound).values);
      }
      auto cfg = make_config(spec, values * d.shape.labels, BoundPolicy::l1(spec.bound));
      cfg.session[0] ^= static_cast<std::uint8_t>(f + 1);
      validate_config<G>(cfg);
      RunSpec s = spec;
      if (!s.ledger.empty()) s.ledger += ".f" + std::to_string(f);
      auto t = run<G>(s, cfg, inputs);
      const double got = decode_split(t.sums, values, d.shape.labels).gain();
      const double want = decode_split(pooled.data, values, d.shape.labels).gain();
      os << "feature " << f << ": gain " << got << " bits (centralized " << want << ")\n";
      if (std::fabs(got - want) > 1e-12) rc = kExitProof;
    }
    std::cout << os.str();
    write_out(spec, os.str());
    return rc;
  });
}

int cmd_demo_nb(RunSpec spec, const std::string& data, bool laplace) {
  Labeled d = labeled_data(spec, data);
  std::vector<std::vector<std::int64_t>> inputs;
  std::vector<LabeledSample> pooled;
  for (const auto& samples : d.per_party) {
    inputs.push_back(encode_nb(samples, d.shape, spec.bound).values);
    pooled.insert(pooled.end(), samples.begin(), samples.end());
  }
  const auto cfg = make_config(spec, d.shape.size(), BoundPolicy::l1(spec.bound));
  return with_group(spec.group, [&]<class G>() {
    validate_config<G>(cfg);
    auto t = run<G>(spec, cfg, inputs);
    auto model = nb_parameters(t.sums, d.shape, laplace);
    auto central = nb_parameters(nb_counts(pooled, d.shape), d.shape, laplace);
    std::ostringstream os;
    for (std::size_t l = 0; l < model.prior.size(); ++l) {
      os << "Pr(y=" << l << ") = " << model.prior[l] << "\n";
    }
    for (std::size_t i = 0; i < model.cond.size(); ++i) {
      for (std::size_t l = 0; l < model.cond[i].size(); ++l) {
        for (std::size_t v = 0; v < model.cond[i][l].size(); ++v) {
          os << "Pr(x" << i << "=" << v << " | y=" << l << ") = " << model.cond[i][l][v] << "\n";
        }
      }
    }
    const bool same = model.prior == central.prior && model.cond == central.cond;
    os << (same ? "matches centralized fit\n" : "MISMATCH with centralized fit\n");
    std::cout << os.str();
    write_out(spec, os.str());
    return same ? static_cast<int>(kExitOk) : static_cast<int>(kExitProof);
  });
}

// Synthetic analog of a one-feature power-output dataset.
void synthetic_regression(Rng& rng, std::size_t rows, Eigen::MatrixXd& x, Eigen::VectorXd& y) {
  x.resize(static_cast<Eigen::Index>(rows), 1);
  y.resize(static_cast<Eigen::Index>(rows));
  auto unit = [&] { return static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53; };
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const double t = 1.8 + (37.1 - 1.8) * unit();
    const double u1 = std::max(unit(), 1e-300), u2 = unit();
    const double noise = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    x(r, 0) = t;
    y(r) = 497.0 - 2.17 * t + 5.4 * noise;
  }
}

int cmd_demo_regression(RunSpec spec, const std::string& data, const std::string& rounding,
                        double scale, std::size_t rows_per_party) {
  std::vector<Eigen::MatrixXd> xs;
  std::vector<Eigen::VectorXd> ys;
  if (!data.empty()) {
    // party,x1,...,y
    std::map<std::size_t, std::vector<std::vector<double>>> by_party;
    for (const auto& r : read_rows(data)) {
      std::vector<double> v;
      for (std::size_t i = 1; i < r.size(); ++i) v.push_back(std::stod(r[i]));
      by_party[to_int(r.at(0))].push_back(std::move(v));
    }
    for (const auto& [party, rows] : by_party) {
      const auto n = static_cast<Eigen::Index>(rows.size());
      const auto d = static_cast<Eigen::Index>(rows[0].size() - 1);
      Eigen::MatrixXd x(n, d);
      Eigen::VectorXd y(n);
      for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) x(r, c) = rows[r][c];
        y(r) = rows[r][d];
      }
      xs.push_back(with_intercept(x));
      ys.push_back(y);
    }
    spec.parties = xs.size();
  } else {
    SeededRng rng(spec.seed + 4);
    for (std::size_t i = 0; i < spec.parties; ++i) {
      Eigen::MatrixXd x;
      Eigen::VectorXd y;
      synthetic_regression(rng, rows_per_party, x, y);
      xs.push_back(with_intercept(x));
      ys.push_back(y);
    }
  }
  const FixedPoint fp{scale, parse_rounding(rounding)};
  std::vector<std::vector<std::int64_t>> inputs;
  std::uint64_t bound = spec.bound;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    inputs.push_back(local_tensors(xs[i], ys[i], fp).flatten());
  }
  if (spec.bound == 0) {
    // No bound given: the smallest power of two covering every party.
    std::uint64_t need = 0;
    for (const auto& v : inputs) {
      long double s = 0;
      for (auto x : v) s += static_cast<long double>(x) * x;
      need = std::max<std::uint64_t>(need, static_cast<std::uint64_t>(std::ceil(std::sqrt(s))));
    }
    bound = std::bit_ceil(std::max<std::uint64_t>(need, 1));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) check_l2(inputs[i], bound);
  const std::size_t d = static_cast<std::size_t>(xs[0].cols());
  const auto cfg = make_config(spec, d * d + d, BoundPolicy::l2(bound));
  return with_group(spec.group, [&]<class G>() {
    validate_config<G>(cfg);
    auto t = run<G>(spec, cfg, inputs);
    Eigen::VectorXd beta = solve_beta(decode_regression(t.sums, d));
    Eigen::MatrixXd x_all(0, static_cast<Eigen::Index>(d));
    Eigen::VectorXd y_all(0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Eigen::MatrixXd xa(x_all.rows() + xs[i].rows(), x_all.cols());
      xa << x_all, xs[i];
      Eigen::VectorXd ya(y_all.size() + ys[i].size());
      ya << y_all, ys[i];
      x_all = xa;
      y_all = ya;
    }
    Eigen::VectorXd exact = least_squares(x_all, y_all);
    const double mse_fp = mean_squared_error(x_all, y_all, exact);
    const double mse_fx = mean_squared_error(x_all, y_all, beta);
    std::ostringstream os;
    os << "policy " << cfg.policy.describe() << "\n";
    os << "beta (" << rounding << ", f=" << scale << "):";
    for (Eigen::Index k = 0; k < beta.size(); ++k) os << " " << beta(k);
    os << "\nbeta (floating point):";
    for (Eigen::Index k = 0; k < exact.size(); ++k) os << " " << exact(k);
    os << "\nMSE fixed-point " << mse_fx << ", floating point " << mse_fp << " (+"
       << 100.0 * (mse_fx / mse_fp - 1.0) << "%)\n";
    std::cout << os.str();
    write_out(spec, os.str());
    return static_cast<int>(kExitOk);
  });
}

int cmd_demo_cf(RunSpec spec, const std::string& data, std::size_t k, std::size_t items,
                double scale, double step) {
  std::vector<Eigen::RowVectorXd> ratings;
  if (!data.empty()) {
    // party,item,rating
    std::map<std::size_t, std::map<std::size_t, double>> by_party;
    for (const auto& r : read_rows(data)) {
      by_party[to_int(r.at(0))][to_int(r.at(1))] = std::stod(r.at(2));
      items = std::max<std::size_t>(items, to_int(r.at(1)) + 1);
    }
    for (const auto& [party, row] : by_party) {
      Eigen::RowVectorXd p = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(items));
      for (const auto& [item, v] : row) p(static_cast<Eigen::Index>(item)) = v;
      ratings.push_back(p);
    }
    spec.parties = ratings.size();
  } else {
    SeededRng rng(spec.seed + 5);
    for (std::size_t i = 0; i < spec.parties; ++i) {
      Eigen::RowVectorXd p(static_cast<Eigen::Index>(items));
      for (Eigen::Index c = 0; c < p.size(); ++c) p(c) = static_cast<double>(rng.uniform(0, 5));
      ratings.push_back(p);
    }
  }
  SeededRng arng(spec.seed + 6);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(items));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      a(r, c) = static_cast<double>(arng.uniform(-100, 100)) / 1000.0;
    }
  }
  const FixedPoint fp{scale, Rounding::kFloor};
  std::vector<std::vector<std::int64_t>> inputs;
  Eigen::MatrixXd central = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (const auto& p : ratings) {
    inputs.push_back(encode_cf_gradient(a, p, fp, spec.bound).values);
    central += cf_gradient(a, p);
  }
  const auto cfg = make_config(spec, k * items, BoundPolicy::l2(spec.bound));
  return with_group(spec.group, [&]<class G>() {
    validate_config<G>(cfg);
    auto t = run<G>(spec, cfg, inputs);
    Eigen::MatrixXd g = decode_cf_gradient(t.sums, k, items, fp);
    const double err = (g - central).cwiseAbs().maxCoeff();
    const double tol = 2.0 * static_cast<double>(spec.parties) / scale;
    Eigen::MatrixXd next = cf_gradient_step(g, a, step);
    std::ostringstream os;
    os << "max |G - G_central| = " << err << " (tolerance " << tol << ")\n";
    os << "||A_t+1 - A_t||_F = " << (next - a).norm() << "\n";
    std::cout << os.str();
    write_out(spec, os.str());
    return err <= tol ? static_cast<int>(kExitOk) : static_cast<int>(kExitProof);
  });
}

void add_common(CLI::App* app, RunSpec& spec, bool shape = true) {
  app->add_option("--group", spec.group, "Group: toy, test (64-bit Schnorr) or prod (ristretto255)")
      ->check(CLI::IsMember({"toy", "test", "prod"}));
  app->add_option("--seed", spec.seed, "Seed for all randomness");
  app->add_option("--ledger", spec.ledger, "Write the session ledger to this file");
  app->add_option("--out", spec.out, "Write the report to this file");
  if (shape) {
    app->add_option("--parties", spec.parties, "Number of parties")->check(CLI::Range(2, 100000));
    app->add_option("--bound", spec.bound, "Norm bound B");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zorro: verifiable self-tallying vector aggregation"};
  app.require_subcommand(1);
  RunSpec spec;

  auto* vote = app.add_subcommand("vote", "Cumulative voting over a ballots file");
  std::string ballots;
  vote->add_option("ballots", ballots, "One ballot per line, comma-separated votes")->required();
  add_common(vote, spec);

  auto* aggregate = app.add_subcommand("aggregate", "Sum vectors with validity proofs");
  std::string input;
  add_common(aggregate, spec);
  aggregate->add_option("--dim", spec.dim, "Vector dimension m")->check(CLI::PositiveNumber);
  aggregate->add_option("--check", spec.check, "Validity policy")
      ->check(CLI::IsMember({"l1", "l2", "none"}));
  aggregate->add_option("--input", input, "One party vector per line (default: random)");
  aggregate->add_option("--dropout", spec.dropout, "Party that skips round 2");

  auto* verify = app.add_subcommand("verify", "Check a ledger file and recompute the tally");
  std::string ledger_path;
  verify->add_option("ledger", ledger_path, "Ledger file")->required()->check(CLI::ExistingFile);

  auto* ledger_cmd = app.add_subcommand("ledger", "Ledger utilities");
  ledger_cmd->require_subcommand(1);
  auto* ledger_verify = ledger_cmd->add_subcommand("verify", "Same as `zorro verify`");
  ledger_verify->add_option("ledger", ledger_path, "Ledger file")->required()->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("bench", "Timing CSV for proof generation and verification");
  std::string mode = "grid", m_list = "1,2,4,8,16,32", b_list = "2,4,8,16,32", n_list = "2,4,6,8,10";
  unsigned reps = 3;
  spec.group = "test";
  add_common(bench, spec, false);
  bench->add_option("--mode", mode, "grid (m x B) or parties (verification vs n)")
      ->check(CLI::IsMember({"grid", "parties"}));
  bench->add_option("--m", m_list, "Comma-separated vector lengths");
  bench->add_option("--b", b_list, "Comma-separated bounds");
  bench->add_option("--n", n_list, "Comma-separated party counts (parties mode)");
  bench->add_option("--dim", spec.dim, "Vector length (parties mode)");
  bench->add_option("--bound", spec.bound, "Bound (parties mode)");
  bench->add_option("--check", spec.check, "Validity policy")->check(CLI::IsMember({"l1", "l2", "none"}));
  bench->add_option("--reps", reps, "Repetitions per point (median)")->check(CLI::Range(1u, 1000u));

  std::string data;
  auto* lda = app.add_subcommand("demo-lda", "Aggregate LDA word/topic counts");
  std::size_t words = 4, topics = 2;
  add_common(lda, spec);
  lda->add_option("--words", words, "Vocabulary size")->check(CLI::PositiveNumber);
  lda->add_option("--topics", topics, "Topic count")->check(CLI::PositiveNumber);
  lda->add_option("--data", data, "CSV rows party,word,topic,count");

  auto* id3 = app.add_subcommand("demo-id3", "Information gain of each feature");
  add_common(id3, spec);
  id3->add_option("--data", data, "CSV rows party,label,feature...");

  auto* nb = app.add_subcommand("demo-nb", "Naive Bayes parameters");
  bool laplace = false;
  add_common(nb, spec);
  nb->add_option("--data", data, "CSV rows party,label,feature...");
  nb->add_flag("--laplace", laplace, "Add-one smoothing");

  auto* reg = app.add_subcommand("demo-regression", "Linear regression on fixed-point inputs");
  std::string rounding = "floor";
  double scale = 1.0;
  std::size_t rows = 40;
  add_common(reg, spec);
  reg->add_option("--data", data, "CSV rows party,x1,...,y");
  reg->add_option("--rounding", rounding, "Fixed-point rounding")->check(CLI::IsMember({"floor", "ceil"}));
  reg->add_option("--scale", scale, "Fixed-point scale f")->check(CLI::PositiveNumber);
  reg->add_option("--rows", rows, "Synthetic rows per party")->check(CLI::PositiveNumber);

  auto* cf = app.add_subcommand("demo-cf", "One collaborative-filtering gradient step");
  std::size_t k = 2, items = 4;
  double step = 0.01;
  add_common(cf, spec);
  cf->add_option("--k", k, "Latent factors")->check(CLI::PositiveNumber);
  cf->add_option("--items", items, "Item count")->check(CLI::PositiveNumber);
  cf->add_option("--scale", scale, "Fixed-point scale f")->check(CLI::PositiveNumber);
  cf->add_option("--step", step, "Gradient step size");
  cf->add_option("--data", data, "CSV rows party,item,rating");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*vote) return cmd_vote(spec, ballots);
    if (*aggregate) return cmd_aggregate(spec, input);
    if (*verify || *ledger_verify) return cmd_verify(ledger_path);
    if (*bench) return cmd_bench(spec, mode, m_list, b_list, n_list, reps);
    if (*lda) {
      if (!lda->count("--bound")) spec.bound = 16;
      return cmd_demo_lda(spec, data, words, topics);
    }
    if (*id3) {
      if (!id3->count("--bound")) spec.bound = 16;
      return cmd_demo_id3(spec, data);
    }
    if (*nb) {
      if (!nb->count("--bound")) spec.bound = 64;
      return cmd_demo_nb(spec, data, laplace);
    }
    if (*reg) {
      if (!reg->count("--bound")) spec.bound = 0;
      return cmd_demo_regression(spec, data, rounding, scale, rows);
    }
    if (*cf) {
      if (!cf->count("--bound")) spec.bound = 1u << 20;
      if (!cf->count("--scale")) scale = 1024.0;
      return cmd_demo_cf(spec, data, k, items, scale, step);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
