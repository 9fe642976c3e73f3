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

#ifndef DIGROOT_EXPERIMENT_HPP
#define DIGROOT_EXPERIMENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "digroot/digraph.hpp"
#include "digroot/rootsearch.hpp"

namespace digroot {

/// Largest parent digraph the experiment samples.
inline constexpr std::size_t kExperimentMaxVertices = 8;
/// Largest parent digraph for which the backtracking cross-check may run.
inline constexpr std::size_t kCrossCheckMaxVertices = 3;

struct ExperimentConfig {
  std::size_t trials = 0;
  std::size_t max_n = 4;
  std::vector<std::size_t> k_values{2, 3};
  std::uint64_t seed = 1;
  /// Also run backtracking_root_search on every reduction instance.
  bool cross_check = false;
  std::uint64_t cross_check_budget = 1'000'000;
};

struct ExperimentTrial {
  std::size_t k = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  /// The second digraph was produced by relabelling the first.
  bool planted = false;
  bool isomorphic = false;
  bool root_found = false;
  std::optional<SearchStatus> cross_check;
};

struct ExperimentSummary {
  std::vector<ExperimentTrial> trials;
  /// agreement[iso][root]: counts by isomorphism verdict and root verdict.
  std::array<std::array<std::size_t, 2>, 2> agreement{};
  /// Cross-checked trials whose search verdict contradicts the decision
  /// (budget exhaustion is not counted as a contradiction).
  std::size_t cross_check_conflicts = 0;
  std::size_t cross_check_exhausted = 0;

  bool diagonal() const noexcept {
    return agreement[0][1] == 0 && agreement[1][0] == 0 && cross_check_conflicts == 0;
  }
};

/// Samples digraph pairs, reduces them, decides root existence inside the
/// class and compares with a direct isomorphism test. Half the trials plant
/// an isomorphic pair. Fully determined by the config. Throws
/// InvalidArgument for infeasible bounds.
ExperimentSummary run_experiment(const ExperimentConfig& config);

}  // namespace digroot

#endif  // DIGROOT_EXPERIMENT_HPP
