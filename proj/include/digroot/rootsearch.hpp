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

#ifndef DIGROOT_ROOTSEARCH_HPP
#define DIGROOT_ROOTSEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "digroot/digraph.hpp"

namespace digroot {

/// Largest vertex count exhaustive_roots accepts (2^(n*n) candidates).
inline constexpr std::size_t kExhaustiveMaxVertices = 5;

/// Every R on V(D) with R^k = D, ordered by the candidate bitmask in which
/// arc (u, v) is bit u*n + v. Throws InvalidArgument above
/// kExhaustiveMaxVertices or for k = 0.
std::vector<Digraph> exhaustive_roots(const Digraph& d, std::uint64_t k);

enum class SearchStatus { kRootFound, kNoRoot, kBudgetExhausted };

const char* to_string(SearchStatus status) noexcept;

struct SearchStatistics {
  /// Search-tree nodes visited; this is what the budget limits.
  std::uint64_t nodes = 0;
  /// Boolean matrix products plus incremental arc-fit checks.
  std::uint64_t work_units = 0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kBudgetExhausted;
  std::optional<Digraph> witness;
  SearchStatistics statistics;
};

/// Complete depth-first search for a k-th root of `d`, k >= 2.
///
/// Every arc of the candidate is a three-valued variable, bounded below by
/// `must` (fixed present) and above by `may` (not fixed absent). Propagation
/// fixes an arc absent when adding it to `must` would create a k-walk
/// outside D; this is checked incrementally from the walks that use the arc
/// for the first time. For each arc of D not yet produced by must^k, the
/// k-walks inside `may` are enumerated (up to 16): none is a conflict, and
/// arcs shared by all of them are fixed present. Branching picks the
/// uncovered arc of D with the fewest candidate walks (smallest index on
/// ties) and tries each walk in turn.
///
/// kNoRoot is only reported after the whole tree is exhausted within
/// `node_budget` nodes.
SearchOutcome backtracking_root_search(const Digraph& d, std::uint64_t k,
                                       std::uint64_t node_budget);

}  // namespace digroot

#endif  // DIGROOT_ROOTSEARCH_HPP
