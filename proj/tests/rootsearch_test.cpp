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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "digroot/errors.hpp"
#include "digroot/power.hpp"
#include "digroot/reduction.hpp"
#include "support/test_support.hpp"

namespace digroot {
namespace {

// Expected values below come from a separate brute-force enumeration over
// all 2^(n*n) candidate relations.

TEST(ExhaustiveRootsTest, SingleLoop) {
  const auto roots = exhaustive_roots(Digraph(1, {{0, 0}}), 2);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0], Digraph(1, {{0, 0}}));
}

TEST(ExhaustiveRootsTest, SingleArcHasNoSquareRoot) {
  EXPECT_TRUE(exhaustive_roots(Digraph(2, {{0, 1}}), 2).empty());
}

TEST(ExhaustiveRootsTest, TwoLoopsHaveExactlyTwoSquareRoots) {
  const auto roots = exhaustive_roots(Digraph(2, {{0, 0}, {1, 1}}), 2);
  // Bitmask order: the 2-cycle (bits 1, 2) precedes the loops (bits 0, 3).
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(roots[1], Digraph(2, {{0, 0}, {1, 1}}));
}

TEST(ExhaustiveRootsTest, RefusesLargeInputs) {
  EXPECT_THROW(exhaustive_roots(Digraph(kExhaustiveMaxVertices + 1), 2), InvalidArgument);
}

TEST(ExhaustiveRootsTest, ThreeVertexCensusCounts) {
  std::size_t square = 0;
  std::size_t cube = 0;
  for (std::uint64_t mask = 0; mask < 512; ++mask) {
    const Digraph d = testing::digraph_from_mask(3, mask);
    square += !exhaustive_roots(d, 2).empty();
    cube += !exhaustive_roots(d, 3).empty();
  }
  EXPECT_EQ(square, 185u);
  EXPECT_EQ(cube, 171u);
}

TEST(BacktrackingRootSearchTest, RejectsSmallK) {
  EXPECT_THROW(backtracking_root_search(Digraph(1), 1, 10), InvalidArgument);
}

TEST(BacktrackingRootSearchTest, TwoLoopsWitnessIsAnExhaustiveRoot) {
  const Digraph d(2, {{0, 0}, {1, 1}});
  const SearchOutcome outcome = backtracking_root_search(d, 2, 1000);
  ASSERT_EQ(outcome.status, SearchStatus::kRootFound);
  ASSERT_TRUE(outcome.witness);
  const auto roots = exhaustive_roots(d, 2);
  EXPECT_NE(std::find(roots.begin(), roots.end(), *outcome.witness), roots.end());
}

TEST(BacktrackingRootSearchTest, BudgetExhaustionIsReported) {
  const Digraph d(2, {{0, 0}, {1, 1}});
  const SearchOutcome outcome = backtracking_root_search(d, 2, 0);
  EXPECT_EQ(outcome.status, SearchStatus::kBudgetExhausted);
  EXPECT_FALSE(outcome.witness);
}

TEST(BacktrackingRootSearchTest, AgreesWithExhaustiveOnThreeVertices) {
  for (std::uint64_t k : {2, 3}) {
    for (std::uint64_t mask = 0; mask < 512; ++mask) {
      const Digraph d = testing::digraph_from_mask(3, mask);
      const bool exists = !exhaustive_roots(d, k).empty();
      const SearchOutcome outcome = backtracking_root_search(d, k, 100000);
      ASSERT_NE(outcome.status, SearchStatus::kBudgetExhausted);
      EXPECT_EQ(outcome.status == SearchStatus::kRootFound, exists) << "mask " << mask;
      if (outcome.witness) {
        EXPECT_TRUE(verify_root(*outcome.witness, k, d));
      }
    }
  }
}

TEST(BacktrackingRootSearchTest, UnionsOfCopiesHaveRoots) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const Digraph base = testing::random_digraph(rng, 3);
    std::vector<Digraph> parts;
    for (std::size_t i = 0; i < k; ++i) {
      parts.push_back(relabel(base, testing::random_permutation(rng, base.vertex_count())));
    }
    const Digraph d = disjoint_union(parts).graph;
    const SearchOutcome outcome = backtracking_root_search(d, k, 1'000'000);
    ASSERT_EQ(outcome.status, SearchStatus::kRootFound);
    EXPECT_TRUE(verify_root(*outcome.witness, k, d));
  }
}

TEST(BacktrackingRootSearchTest, ReductionOfNonIsomorphicSingletonsHasNoRoot) {
  const ReductionInstance instance = reduce(Digraph(1, {{0, 0}}), Digraph(1), 2);
  ASSERT_EQ(instance.graph.vertex_count(), 13u);
  const SearchOutcome outcome = backtracking_root_search(instance.graph, 2, 100'000'000);
  EXPECT_EQ(outcome.status, SearchStatus::kNoRoot);
  EXPECT_FALSE(outcome.witness);
}

TEST(BacktrackingRootSearchTest, DeterministicStatistics) {
  const ReductionInstance instance = reduce(Digraph(1), Digraph(1), 3);
  const SearchOutcome a = backtracking_root_search(instance.graph, 3, 1'000'000);
  const SearchOutcome b = backtracking_root_search(instance.graph, 3, 1'000'000);
  ASSERT_EQ(a.status, SearchStatus::kRootFound);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.statistics.nodes, b.statistics.nodes);
  EXPECT_EQ(a.statistics.work_units, b.statistics.work_units);
}

}  // namespace
}  // namespace digroot
