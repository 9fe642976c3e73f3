// Copyright 2026 The digroot Authors
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

#include "digroot/rootsearch.hpp"

#include <bit>
#include <span>
#include <string>

#include "digroot/errors.hpp"
#include "digroot/power.hpp"

namespace digroot {

std::vector<Digraph> exhaustive_roots(const Digraph& d, std::uint64_t k) {
  const std::size_t n = d.vertex_count();
  if (n > kExhaustiveMaxVertices) {
    throw InvalidArgument("exhaustive root enumeration refused for " +
                          std::to_string(n) + " vertices (limit " +
                          std::to_string(kExhaustiveMaxVertices) +
                          "); use backtracking_root_search");
  }
  if (k == 0) throw InvalidArgument("root degree must be at least 1");
  const std::size_t cells = n * n;
  const std::uint64_t candidates = std::uint64_t{1} << cells;
  std::vector<Digraph> roots;
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    BitMatrix candidate(n);
    for (std::size_t bit = 0; bit < cells; ++bit) {
      if ((mask >> bit) & 1U) candidate.set(bit / n, bit % n);
    }
    if (boolean_power(candidate, k) == d.adjacency()) {
      roots.emplace_back(std::move(candidate));
    }
  }
  return roots;
}

const char* to_string(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::kRootFound:
      return "root-found";
    case SearchStatus::kNoRoot:
      return "no-root";
    case SearchStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

namespace {

using Word = BitMatrix::Word;

bool words_subset(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

bool test_bit(std::span<const Word> row, std::size_t c) {
  return (row[c / BitMatrix::kWordBits] >> (c % BitMatrix::kWordBits)) & 1U;
}

class RootSearch {
 public:
  RootSearch(const Digraph& d, std::uint64_t k, std::uint64_t budget)
      : target_(d.adjacency()), n_(d.vertex_count()), k_(k), budget_(budget) {}

  SearchOutcome run() {
    BitMatrix must(n_);
    BitMatrix may(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) may.set(u, v);
    }
    const Result r = search(std::move(must), std::move(may));
    SearchOutcome outcome;
    outcome.statistics = stats_;
    switch (r) {
      case Result::kFound:
        outcome.status = SearchStatus::kRootFound;
        outcome.witness = Digraph(std::move(witness_));
        break;
      case Result::kExhausted:
        outcome.status = SearchStatus::kNoRoot;
        break;
      case Result::kOutOfBudget:
        outcome.status = SearchStatus::kBudgetExhausted;
        break;
    }
    return outcome;
  }

 private:
  enum class Result { kFound, kExhausted, kOutOfBudget };
  using Walk = std::vector<std::size_t>;

  static constexpr std::size_t kNoLimit = static_cast<std::size_t>(-1);
  // Targets with fewer candidate walks than this contribute forced arcs.
  static constexpr std::size_t kForcingWalkLimit = 16;

  // powers[j] = m^j for j = 0..k.
  std::vector<BitMatrix> powers_of(const BitMatrix& m) {
    std::vector<BitMatrix> powers{BitMatrix::identity(n_), m};
    for (std::uint64_t j = 2; j <= k_; ++j) {
      powers.push_back(boolean_product(powers.back(), m));
      ++stats_.work_units;
    }
    return powers;
  }

  // Whether adding arc a->b to `must` keeps every k-walk inside the target.
  // Splits the new walks at the first use of a->b: a prefix of
  // length i in `must` ending at a, then a suffix of length k-1-i from b in
  // must + {a->b}.
  bool arc_fits(const BitMatrix& must, const std::vector<BitMatrix>& into,
                std::size_t a, std::size_t b) {
    const std::size_t words = must.words_per_row();
    std::vector<std::vector<Word>> suffix(k_, std::vector<Word>(words, 0));
    suffix[0][b / BitMatrix::kWordBits] |= Word{1} << (b % BitMatrix::kWordBits);
    for (std::uint64_t t = 0; t + 1 < k_; ++t) {
      auto& next = suffix[t + 1];
      const auto& cur = suffix[t];
      for (std::size_t w = 0; w < words; ++w) {
        Word bits = cur[w];
        while (bits != 0) {
          const std::size_t v =
              w * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          const auto row = must.row(v);
          for (std::size_t x = 0; x < words; ++x) next[x] |= row[x];
          if (v == a) next[b / BitMatrix::kWordBits] |= Word{1} << (b % BitMatrix::kWordBits);
        }
      }
    }
    ++stats_.work_units;
    for (std::uint64_t i = 0; i < k_; ++i) {
      const auto sources = into[i].row(a);  // vertices reaching a in i steps
      const auto& tail = suffix[k_ - 1 - i];
      for (std::size_t x = 0; x < n_; ++x) {
        if (test_bit(sources, x) && !words_subset(tail, target_.row(x))) return false;
      }
    }
    return true;
  }

  // Fixes forced arcs until nothing changes. Returns false on a
  // contradiction.
  bool propagate(BitMatrix& must, BitMatrix& may) {
    while (true) {
      bool changed = false;

      const auto must_powers = powers_of(must);
      if (!must_powers[k_].subset_of(target_)) return false;
      const auto into = powers_of(must.transposed());
      for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
          if (must.test(a, b) || !may.test(a, b)) continue;
          if (!arc_fits(must, into, a, b)) {
            may.reset(a, b);
            changed = true;
          }
        }
      }

      const auto may_powers = powers_of(may);
      if (!target_.subset_of(may_powers[k_])) return false;
      const BitMatrix& covered = must_powers[k_];
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) {
          if (!target_.test(x, y) || covered.test(x, y)) continue;
          std::vector<Walk> walks;
          collect_walks(may_powers, x, y, walks, kForcingWalkLimit);
          if (walks.empty()) return false;
          if (walks.size() >= kForcingWalkLimit) continue;
          // Arcs shared by every remaining walk are forced.
          BitMatrix common = walk_arcs(walks.front());
          for (std::size_t i = 1; i < walks.size(); ++i) {
            const BitMatrix other = walk_arcs(walks[i]);
            for (std::size_t r = 0; r < n_; ++r) {
              auto row = common.row(r);
              const auto o = other.row(r);
              for (std::size_t w = 0; w < row.size(); ++w) row[w] &= o[w];
            }
          }
          for (std::size_t u = 0; u < n_; ++u) {
            for (std::size_t v = 0; v < n_; ++v) {
              if (common.test(u, v) && !must.test(u, v)) {
                must.set(u, v);
                changed = true;
              }
            }
          }
        }
      }
      if (!changed) return true;
    }
  }

  BitMatrix walk_arcs(const Walk& walk) const {
    BitMatrix arcs(n_);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) arcs.set(walk[i], walk[i + 1]);
    return arcs;
  }

  Result search(BitMatrix must, BitMatrix may) {
    if (stats_.nodes >= budget_) return Result::kOutOfBudget;
    ++stats_.nodes;
    if (!propagate(must, may)) return Result::kExhausted;

    // Pick the target arc without a committed k-walk that has the fewest
    // candidate walks left; ties go to the smallest arc index.
    const BitMatrix covered = boolean_power(must, k_);
    const auto may_powers = powers_of(may);
    std::vector<Walk> best;
    bool have_target = false;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t w = 0; w < n_; ++w) {
        if (!target_.test(u, w) || covered.test(u, w)) continue;
        std::vector<Walk> walks;
        collect_walks(may_powers, u, w, walks, have_target ? best.size() : kNoLimit);
        if (!have_target || walks.size() < best.size()) {
          best = std::move(walks);
          have_target = true;
        }
      }
    }
    if (!have_target) {
      // must^k covers D and propagation keeps it inside D.
      witness_ = std::move(must);
      return Result::kFound;
    }
    for (const Walk& walk : best) {
      BitMatrix child = must;
      for (std::size_t i = 0; i + 1 < walk.size(); ++i) child.set(walk[i], walk[i + 1]);
      const Result r = search(std::move(child), may);
      if (r != Result::kExhausted) return r;
    }
    return Result::kExhausted;
  }

  // Walks u = v_0 -> ... -> v_k = w inside `may`, in lexicographic order.
  // Stops once `limit` walks are found.
  void collect_walks(const std::vector<BitMatrix>& may_powers, std::size_t u,
                     std::size_t w, std::vector<Walk>& walks, std::size_t limit) {
    Walk prefix{u};
    extend_walk(may_powers, w, prefix, walks, limit);
  }

  void extend_walk(const std::vector<BitMatrix>& may_powers, std::size_t w,
                   Walk& prefix, std::vector<Walk>& walks, std::size_t limit) {
    if (walks.size() >= limit) return;
    const BitMatrix& may = may_powers[1];
    const std::size_t here = prefix.back();
    const std::size_t remaining = k_ - (prefix.size() - 1);
    if (remaining == 1) {
      if (may.test(here, w)) {
        prefix.push_back(w);
        walks.push_back(prefix);
        prefix.pop_back();
      }
      return;
    }
    // Only step to vertices that still reach w in remaining - 1 steps.
    const BitMatrix& reach = may_powers[remaining - 1];
    for (std::size_t next = 0; next < n_; ++next) {
      if (!may.test(here, next) || !reach.test(next, w)) continue;
      prefix.push_back(next);
      extend_walk(may_powers, w, prefix, walks, limit);
      prefix.pop_back();
      if (walks.size() >= limit) return;
    }
  }

  const BitMatrix& target_;
  std::size_t n_;
  std::uint64_t k_;
  std::uint64_t budget_;
  SearchStatistics stats_;
  BitMatrix witness_;
};

}  // namespace

SearchOutcome backtracking_root_search(const Digraph& d, std::uint64_t k,
                                       std::uint64_t node_budget) {
  if (k < 2) throw InvalidArgument("root search requires k >= 2");
  return RootSearch(d, k, node_budget).run();
}

}  // namespace digroot
