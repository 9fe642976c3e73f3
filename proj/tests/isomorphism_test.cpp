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

#include "digroot/isomorphism.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/test_support.hpp"

namespace digroot {
namespace {

TEST(RefineColorsTest, CycleIsSingleClass) {
  const Coloring c = refine_colors(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_TRUE(c.stable);
  EXPECT_EQ(c.class_count(), 1u);
}

TEST(RefineColorsTest, PathSplitsCompletely) {
  const Coloring c = refine_colors(Digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(c.class_count(), 3u);
}

TEST(RefineColorsTest, ArclessIsSingleClass) {
  const Coloring c = refine_colors(Digraph(5));
  EXPECT_EQ(c.class_count(), 1u);
  EXPECT_EQ(c.class_sizes(), std::vector<std::size_t>{5});
}

TEST(RefineColorsTest, InitialColouringIsRespected) {
  Coloring initial;
  initial.colors = {0, 1, 0};
  const Coloring c = refine_colors(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), initial);
  EXPECT_EQ(c.class_count(), 3u);
}

TEST(RefineColorsTest, ClassSizesInvariantUnderRelabelling) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph d = testing::random_digraph(rng, 9);
    const Digraph e = relabel(d, testing::random_permutation(rng, d.vertex_count()));
    auto a = refine_colors(d).class_sizes();
    auto b = refine_colors(e).class_sizes();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(FindIsomorphismTest, SelfMapOnCycle) {
  const Digraph c(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto phi = find_isomorphism(c, c);
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_isomorphism(c, c, *phi));
}

TEST(FindIsomorphismTest, DifferentSizesAreNotIsomorphic) {
  EXPECT_FALSE(find_isomorphism(Digraph(2), Digraph(3)));
  EXPECT_FALSE(is_isomorphic(Digraph(2, {{0, 1}}), Digraph(2)));
  EXPECT_FALSE(is_isomorphic(Digraph(1, {{0, 0}}), Digraph(1)));
}

TEST(FindIsomorphismTest, CycleAndItsReversal) {
  const Digraph c(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto phi = find_isomorphism(c, c.reversed());
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_isomorphism(c, c.reversed(), *phi));
}

TEST(FindIsomorphismTest, EmptyGraphs) {
  EXPECT_TRUE(is_isomorphic(Digraph(0), Digraph(0)));
}

TEST(FindIsomorphismTest, RegularButNotIsomorphic) {
  // One 6-cycle against two 3-cycles: refinement alone cannot tell them apart.
  const Digraph six(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Digraph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(refine_colors(six).class_count(), refine_colors(two).class_count());
  EXPECT_FALSE(is_isomorphic(six, two));
}

TEST(FindIsomorphismTest, AgreesWithBruteForceOnAllPairsUpToThreeVertices) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * n);
    for (std::uint64_t a = 0; a < masks; ++a) {
      for (std::uint64_t b = 0; b < masks; ++b) {
        const Digraph x = testing::digraph_from_mask(n, a);
        const Digraph y = testing::digraph_from_mask(n, b);
        const auto phi = find_isomorphism(x, y);
        ASSERT_EQ(phi.has_value(), testing::brute_force_isomorphic(x, y));
        if (phi) {
          EXPECT_TRUE(is_isomorphism(x, y, *phi));
        }
      }
    }
  }
}

TEST(FindIsomorphismTest, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    const Digraph x = testing::random_digraph(rng, 6);
    Digraph y = relabel(x, testing::random_permutation(rng, x.vertex_count()));
    if (trial % 2 == 1) y = testing::rewire(rng, y, 2);
    const auto phi = find_isomorphism(x, y);
    ASSERT_EQ(phi.has_value(), testing::brute_force_isomorphic(x, y));
    if (phi) {
      EXPECT_TRUE(is_isomorphism(x, y, *phi));
    }
  }
}

TEST(FindIsomorphismTest, FindsPlantedMapsOnLargerGraphs) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph x = testing::random_digraph(rng, 40, 0.1);
    const Digraph y = relabel(x, testing::random_permutation(rng, 40));
    const auto phi = find_isomorphism(x, y);
    ASSERT_TRUE(phi);
    EXPECT_TRUE(is_isomorphism(x, y, *phi));
  }
}

}  // namespace
}  // namespace digroot
