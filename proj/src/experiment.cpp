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

#include "digroot/experiment.hpp"

#include <random>
#include <string>

#include "digroot/errors.hpp"
#include "digroot/isomorphism.hpp"
#include "digroot/reduction.hpp"
#include "digroot/subdivision.hpp"

namespace digroot {
namespace {

// Raw engine output only: std::mt19937_64 is fully specified, the standard
// distributions are not, and the experiment must replay bit-exactly.
std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

Digraph sample_digraph(std::mt19937_64& rng, std::size_t n) {
  const std::size_t percent = 10 + 10 * below(rng, 9);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (below(rng, 100) < percent) arcs.push_back({u, v});
    }
  }
  return Digraph(n, arcs);
}

VertexBijection sample_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> forward(n);
  for (Vertex v = 0; v < n; ++v) forward[v] = v;
  for (std::size_t i = n; i > 1; --i) std::swap(forward[i - 1], forward[below(rng, i)]);
  return VertexBijection(std::move(forward));
}

// Moves one arc to a free slot, which keeps the arc count and often, but not
// always, breaks isomorphism.
Digraph perturb(std::mt19937_64& rng, const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<Arc> arcs = d.arcs();
  if (arcs.empty() || arcs.size() == n * n) return sample_digraph(rng, n);
  arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(below(rng, arcs.size())));
  std::vector<Arc> free;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (!d.has_arc(u, v)) free.push_back({u, v});
    }
  }
  arcs.push_back(free[below(rng, free.size())]);
  return Digraph(n, arcs);
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  if (config.trials > 0) {
    if (config.max_n == 0) throw InvalidArgument("max_n must be at least 1");
    if (config.max_n > kExperimentMaxVertices) {
      throw InvalidArgument("max_n " + std::to_string(config.max_n) +
                            " exceeds the experiment limit of " +
                            std::to_string(kExperimentMaxVertices));
    }
    if (config.cross_check && config.max_n > kCrossCheckMaxVertices) {
      throw InvalidArgument("cross-check search is limited to max_n <= " +
                            std::to_string(kCrossCheckMaxVertices));
    }
    if (config.k_values.empty()) throw InvalidArgument("no k values given");
  }
  for (std::size_t k : config.k_values) {
    if (k < 2) throw InvalidArgument("every k must be at least 2");
  }

  std::mt19937_64 rng(config.seed);
  ExperimentSummary summary;
  for (std::size_t t = 0; t < config.trials; ++t) {
    ExperimentTrial trial;
    trial.k = config.k_values[below(rng, config.k_values.size())];
    trial.planted = t % 2 == 0;
    const std::size_t n = 1 + below(rng, config.max_n);
    const Digraph d1 = sample_digraph(rng, n);
    const Digraph d2 = trial.planted ? relabel(d1, sample_permutation(rng, n))
                                     : perturb(rng, d1);
    trial.n1 = d1.vertex_count();
    trial.n2 = d2.vertex_count();

    trial.isomorphic = is_isomorphic(d1, d2);
    const ReductionInstance instance = reduce(d1, d2, trial.k);
    trial.root_found = decide_root_in_class(instance.graph, trial.k).has_root();
    ++summary.agreement[trial.isomorphic][trial.root_found];

    if (config.cross_check) {
      const SearchOutcome search =
          backtracking_root_search(instance.graph, trial.k, config.cross_check_budget);
      trial.cross_check = search.status;
      if (search.status == SearchStatus::kBudgetExhausted) {
        ++summary.cross_check_exhausted;
      } else if ((search.status == SearchStatus::kRootFound) != trial.root_found) {
        ++summary.cross_check_conflicts;
      }
    }
    summary.trials.push_back(trial);
  }
  return summary;
}

}  // namespace digroot
