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

#ifndef ZORRO_DLOG_HPP_
#define ZORRO_DLOG_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "zorro/error.hpp"
#include "zorro/group.hpp"

namespace zorro {

// Inclusive search interval [lo, hi] for a small exponent.
struct DlogWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::uint64_t size() const {
    return static_cast<std::uint64_t>(hi - lo) + 1;
  }
  friend bool operator==(const DlogWindow&, const DlogWindow&) = default;
};

// Baby-step/giant-step over a window. Baby-step tables are keyed by the
// canonical element encoding and memoized per table size; a table is shared
// read-only after it is built.
template <Group G>
class BsgsSolver {
 public:
  using Element = typename G::Element;

  std::int64_t solve(const Element& target, const DlogWindow& window) const {
    if (window.hi < window.lo) {
      throw Error(Errc::kInvalidArgument, "empty discrete-log window");
    }
    const std::uint64_t n = window.size();
    if (n == 0 || n > G::kOrderFloor) {
      throw Error(Errc::kParameterTooLarge,
                  "discrete-log window not smaller than the group order");
    }
    const std::uint64_t m = table_size(n);
    const Table& table = get_table(m);

    // Search g^(x - lo) in [0, n).
    Element cur = target * G::exp_g(G::scalar(window.lo)).inverse();
    const std::uint64_t giants = (n + m - 1) / m;
    for (std::uint64_t i = 0; i < giants; ++i) {
      auto it = table.steps.find(key(cur));
      if (it != table.steps.end()) {
        std::uint64_t offset = i * m + it->second;
        if (offset < n) return window.lo + static_cast<std::int64_t>(offset);
      }
      cur = cur * table.giant;
    }
    throw Error(Errc::kNotInWindow, "no exponent in [" +
                                        std::to_string(window.lo) + ", " +
                                        std::to_string(window.hi) + "]");
  }

  static std::uint64_t table_size(std::uint64_t n) {
    auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (m * m < n) ++m;
    return m == 0 ? 1 : m;
  }

  std::size_t cached_tables() const {
    std::shared_lock lock(mu_);
    return tables_.size();
  }

 private:
  struct Table {
    std::unordered_map<std::string, std::uint64_t> steps;
    Element giant;  // g^-m
  };

  static std::string key(const Element& e) {
    Bytes b = e.encode();
    return std::string(b.begin(), b.end());
  }

  const Table& get_table(std::uint64_t m) const {
    {
      std::shared_lock lock(mu_);
      auto it = tables_.find(m);
      if (it != tables_.end()) return *it->second;
    }
    std::unique_lock lock(mu_);
    auto it = tables_.find(m);
    if (it != tables_.end()) return *it->second;
    auto table = std::make_unique<Table>();
    table->steps.reserve(m);
    Element cur = G::identity();
    const Element g = G::generator();
    for (std::uint64_t j = 0; j < m; ++j) {
      table->steps.emplace(key(cur), j);
      cur = cur * g;
    }
    table->giant = cur.inverse();
    const Table& ref = *table;
    tables_.emplace(m, std::move(table));
    return ref;
  }

  mutable std::shared_mutex mu_;
  mutable std::map<std::uint64_t, std::unique_ptr<Table>> tables_;
};

// Process-wide memoized solver.
template <Group G>
std::int64_t bsgs(const typename G::Element& target, const DlogWindow& window) {
  static BsgsSolver<G> solver;
  return solver.solve(target, window);
}

}  // namespace zorro

#endif  // ZORRO_DLOG_HPP_
