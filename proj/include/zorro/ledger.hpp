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

#ifndef ZORRO_LEDGER_HPP_
#define ZORRO_LEDGER_HPP_

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "zorro/bytes.hpp"
#include "zorro/dlog.hpp"
#include "zorro/error.hpp"
#include "zorro/group.hpp"
#include "zorro/hash.hpp"
#include "zorro/policy.hpp"
#include "zorro/protocol.hpp"

// Append-only bulletin board with a hash chain.
//
// File layout: one compact JSON header line, then one line per entry
//   seq round party session prev_hash entry_hash payload
// with integers in decimal and everything else in lowercase hex. The first
// entry's prev_hash is SHA-256 of the header line, and
//   entry_hash = SHA-256(prev_hash || seq || session || round || party ||
//                        len(payload) || payload).
namespace zorro {

inline constexpr std::string_view kLedgerFormat = "zorro-ledger/1";

struct LedgerHeader {
  GroupId group = GroupId::kSchnorr64;
  std::string group_name;
  SessionId session{};
  std::size_t n = 0;
  std::size_t m = 0;
  BoundPolicy policy;
  std::optional<DlogWindow> window;

  friend bool operator==(const LedgerHeader&, const LedgerHeader&) = default;

  ProtocolConfig config() const { return ProtocolConfig{n, m, policy, session, window}; }

  std::string to_line() const {
    nlohmann::json j;
    j["format"] = kLedgerFormat;
    j["group"] = group_name;
    j["group_id"] = static_cast<int>(group);
    j["session"] = to_hex(session);
    j["n"] = n;
    j["m"] = m;
    j["policy"] = {{"kind", norm_kind_name(policy.kind)}, {"bound", policy.bound}};
    if (window) j["window"] = {window->lo, window->hi};
    return j.dump();
  }

  // Strict: the line must be exactly what to_line() would write.
  static LedgerHeader from_line(std::string_view line) {
    LedgerHeader h;
    try {
      auto j = nlohmann::json::parse(line);
      if (j.at("format").get<std::string>() != kLedgerFormat) {
        throw Error(Errc::kMalformedEncoding, "unknown ledger format");
      }
      h.group_name = j.at("group").get<std::string>();
      h.group = static_cast<GroupId>(j.at("group_id").get<int>());
      Bytes sid = from_hex(j.at("session").get<std::string>());
      if (sid.size() != h.session.size()) {
        throw Error(Errc::kMalformedEncoding, "session id must be 16 bytes");
      }
      std::copy(sid.begin(), sid.end(), h.session.begin());
      h.n = j.at("n").get<std::size_t>();
      h.m = j.at("m").get<std::size_t>();
      const auto& p = j.at("policy");
      h.policy = BoundPolicy::make(parse_norm_kind(p.at("kind").get<std::string>()),
                                   p.at("bound").get<std::uint64_t>());
      if (j.contains("window")) {
        const auto& w = j.at("window");
        h.window = DlogWindow{w.at(0).get<std::int64_t>(), w.at(1).get<std::int64_t>()};
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::kMalformedEncoding, std::string("ledger header: ") + e.what());
    } catch (const Error& e) {
      throw Error(Errc::kMalformedEncoding, std::string("ledger header: ") + e.what());
    }
    if (h.to_line() != line) {
      throw Error(Errc::kMalformedEncoding, "ledger header is not canonical");
    }
    return h;
  }

  Digest digest() const {
    const std::string line = to_line();
    return Sha256().update(line).finish();
  }
};

template <Group G>
LedgerHeader make_header(const ProtocolConfig& cfg) {
  return LedgerHeader{G::kId, std::string(G::kName), cfg.session, cfg.n, cfg.m,
                      cfg.policy, cfg.window};
}

struct LedgerEntry {
  std::uint64_t seq = 0;
  std::uint8_t round = 0;
  std::uint32_t party = 0;
  SessionId session{};
  Digest prev_hash{};
  Digest entry_hash{};
  Bytes payload;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;

  Digest compute_hash() const {
    ByteWriter w;
    w.raw(prev_hash).u64(seq).raw(session).u8(round).u32(party);
    w.u64(payload.size());
    Sha256 h;
    h.update(ByteView(w.bytes())).update(ByteView(payload));
    return h.finish();
  }

  std::string to_line() const {
    std::string out = std::to_string(seq) + ' ' + std::to_string(round) + ' ' +
                      std::to_string(party) + ' ' + to_hex(session) + ' ' +
                      to_hex(prev_hash) + ' ' + to_hex(entry_hash) + ' ' +
                      to_hex(payload);
    return out;
  }

  static LedgerEntry from_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t sp = line.find(' ', start);
      fields.push_back(line.substr(start, sp == std::string_view::npos ? sp : sp - start));
      if (sp == std::string_view::npos) break;
      start = sp + 1;
    }
    if (fields.size() != 7) {
      throw Error(Errc::kMalformedEncoding, "ledger line needs 7 fields");
    }
    LedgerEntry e;
    e.seq = parse_uint(fields[0], UINT64_MAX);
    e.round = static_cast<std::uint8_t>(parse_uint(fields[1], 2));
    e.party = static_cast<std::uint32_t>(parse_uint(fields[2], UINT32_MAX));
    copy_digest(fields[3], e.session);
    copy_digest(fields[4], e.prev_hash);
    copy_digest(fields[5], e.entry_hash);
    e.payload = from_hex(fields[6]);
    if (e.to_line() != line) {
      throw Error(Errc::kMalformedEncoding, "ledger line is not canonical");
    }
    return e;
  }

 private:
  static std::uint64_t parse_uint(std::string_view s, std::uint64_t max) {
    if (s.empty() || s.size() > 20) throw Error(Errc::kMalformedEncoding, "bad integer");
    unsigned __int128 v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw Error(Errc::kMalformedEncoding, "bad integer");
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    if (v > max) throw Error(Errc::kMalformedEncoding, "integer out of range");
    return static_cast<std::uint64_t>(v);
  }
  template <std::size_t N>
  static void copy_digest(std::string_view hex, std::array<std::uint8_t, N>& out) {
    Bytes b = from_hex(hex);
    if (b.size() != N) throw Error(Errc::kMalformedEncoding, "bad digest length");
    std::copy(b.begin(), b.end(), out.begin());
  }
};

// Where a ledger check failed. Entry faults carry the first bad seq.
struct LedgerFault {
  enum class Where { kNone, kHeader, kEntry };
  Where where = Where::kNone;
  std::uint64_t seq = 0;
  std::string detail;

  bool ok() const { return where == Where::kNone; }
  std::string describe() const {
    switch (where) {
      case Where::kNone: return "ok";
      case Where::kHeader: return "header corrupt: " + detail;
      case Where::kEntry: return "chain broken at seq " + std::to_string(seq) + ": " + detail;
    }
    return detail;
  }
};

// In-memory ledger, optionally mirrored line by line to a file. Appends are
// serialized by the single writer; readers see committed entries only.
class Ledger {
 public:
  explicit Ledger(LedgerHeader header) : header_(std::move(header)) {
    header_line_ = header_.to_line();
    genesis_ = Sha256().update(header_line_).finish();
  }

  // Starts mirroring to `path`, truncating it and writing everything so far.
  void attach(const std::string& path) {
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw Error(Errc::kInvalidArgument, "cannot open ledger file " + path);
    file_ << header_line_ << '\n';
    for (const auto& e : entries_) file_ << e.to_line() << '\n';
    file_.flush();
  }

  std::uint64_t append(std::uint8_t round, std::uint32_t party, Bytes payload) {
    return append(header_.session, round, party, std::move(payload));
  }

  std::uint64_t append(const SessionId& session, std::uint8_t round,
                       std::uint32_t party, Bytes payload) {
    if (!keys_.emplace(session, round, party).second) {
      throw Error(Errc::kDuplicatePost,
                  "party " + std::to_string(party) + " already posted in round " +
                      std::to_string(round),
                  party);
    }
    LedgerEntry e;
    e.seq = entries_.size();
    e.round = round;
    e.party = party;
    e.session = session;
    e.prev_hash = entries_.empty() ? genesis_ : entries_.back().entry_hash;
    e.payload = std::move(payload);
    e.entry_hash = e.compute_hash();
    if (file_.is_open()) {
      file_ << e.to_line() << '\n';
      file_.flush();
    }
    entries_.push_back(std::move(e));
    return entries_.back().seq;
  }

  std::vector<LedgerEntry> read_round(const SessionId& session, std::uint8_t round) const {
    std::vector<LedgerEntry> out;
    for (const auto& e : entries_) {
      if (e.session == session && e.round == round) out.push_back(e);
    }
    return out;
  }
  std::vector<LedgerEntry> read_round(std::uint8_t round) const {
    return read_round(header_.session, round);
  }

  LedgerFault check() const {
    if (header_.to_line() != header_line_) {
      return {LedgerFault::Where::kHeader, 0, "header changed"};
    }
    std::set<std::tuple<SessionId, std::uint8_t, std::uint32_t>> seen;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      const auto& e = entries_[k];
      auto fault = [&](std::string why) {
        return LedgerFault{LedgerFault::Where::kEntry, k, std::move(why)};
      };
      if (e.seq != k) return fault("sequence number");
      if (e.round < 1 || e.round > 2) return fault("round");
      if (!(e.entry_hash == e.compute_hash())) return fault("entry hash");
      if (!seen.emplace(e.session, e.round, e.party).second) return fault("duplicate post");
      const Digest& expected = k == 0 ? genesis_ : entries_[k - 1].entry_hash;
      if (!(e.prev_hash == expected)) {
        // A self-consistent first entry that does not link to the header
        // means the header is what changed.
        if (k == 0) return {LedgerFault::Where::kHeader, 0, "genesis link"};
        return fault("previous hash");
      }
    }
    return {};
  }

  bool verify_chain() const { return check().ok(); }

  void require_chain() const {
    auto f = check();
    if (f.ok()) return;
    throw Error(Errc::kChainBroken, f.describe(), std::nullopt,
                f.where == LedgerFault::Where::kEntry ? std::optional<std::size_t>(f.seq)
                                                      : std::nullopt);
  }

  std::string serialize() const {
    std::string out = header_line_ + '\n';
    for (const auto& e : entries_) out += e.to_line() + '\n';
    return out;
  }

  void save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::kInvalidArgument, "cannot write ledger file " + path);
    f << serialize();
  }

  // Parses without verifying hashes. Lines that do not parse are reported
  // through `fault` at their seq instead of being dropped silently.
  static Ledger parse(std::string_view text, LedgerFault* fault = nullptr) {
    auto report = [&](LedgerFault f) {
      if (fault != nullptr) {
        *fault = std::move(f);
        return;
      }
      throw Error(Errc::kChainBroken, f.describe(), std::nullopt,
                  f.where == LedgerFault::Where::kEntry ? std::optional<std::size_t>(f.seq)
                                                        : std::nullopt);
    };
    if (fault != nullptr) *fault = {};
    std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) {
      report({LedgerFault::Where::kHeader, 0, "missing header line"});
      return Ledger(LedgerHeader{});
    }
    std::string_view header_line = text.substr(0, nl);
    LedgerHeader header;
    try {
      header = LedgerHeader::from_line(header_line);
    } catch (const Error& e) {
      report({LedgerFault::Where::kHeader, 0, e.what()});
      return Ledger(LedgerHeader{});
    }
    Ledger ledger(header);
    ledger.header_line_ = std::string(header_line);
    ledger.genesis_ = Sha256().update(header_line).finish();

    std::size_t pos = nl + 1;
    std::uint64_t k = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        auto earlier = ledger.check();
        report(earlier.ok() ? LedgerFault{LedgerFault::Where::kEntry, k, "unterminated line"}
                            : earlier);
        return ledger;
      }
      try {
        ledger.entries_.push_back(LedgerEntry::from_line(text.substr(pos, end - pos)));
      } catch (const Error& e) {
        // A split or merged line can still parse up to here; a hash fault
        // earlier in the chain is the better location.
        auto earlier = ledger.check();
        report(earlier.ok() ? LedgerFault{LedgerFault::Where::kEntry, k, e.what()} : earlier);
        return ledger;
      }
      const auto& e = ledger.entries_.back();
      ledger.keys_.emplace(e.session, e.round, e.party);
      pos = end + 1;
      ++k;
    }
    return ledger;
  }

  static Ledger load(const std::string& path, LedgerFault* fault = nullptr) {
    return parse(read_file(path), fault);
  }

  static std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::kInvalidArgument, "cannot read ledger file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  const LedgerHeader& header() const { return header_; }
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Digest& genesis() const { return genesis_; }

 private:
  LedgerHeader header_;
  std::string header_line_;
  Digest genesis_{};
  std::vector<LedgerEntry> entries_;
  std::set<std::tuple<SessionId, std::uint8_t, std::uint32_t>> keys_;
  std::ofstream file_;
};

// Parse plus chain check over the raw bytes of a ledger file.
inline LedgerFault verify_ledger_text(std::string_view text) {
  LedgerFault fault;
  Ledger ledger = Ledger::parse(text, &fault);
  if (!fault.ok()) return fault;
  return ledger.check();
}

inline LedgerFault verify_ledger_file(const std::string& path) {
  return verify_ledger_text(Ledger::read_file(path));
}

}  // namespace zorro

#endif  // ZORRO_LEDGER_HPP_
