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

// Acceptance suite: thirteen end-to-end criteria, one PASS/FAIL line each.
// Time limits are part of each criterion; a criterion that runs over its
// limit fails even when every check inside it held.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "digroot/cli.hpp"
#include "digroot/isomorphism.hpp"
#include "digroot/power.hpp"
#include "digroot/reduction.hpp"
#include "digroot/rootsearch.hpp"
#include "digroot/subdivision.hpp"
#include "support/test_support.hpp"

namespace {

using namespace digroot;
namespace t = digroot::testing;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> body;
};

// Power oracle equivalence.
Verdict power_matches_oracle() {
  Verdict v;
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 500 && v.ok; ++trial) {
    const Digraph d = t::random_digraph(rng, 12);
    const std::size_t k = t::uniform(rng, 1, 6);
    if (power(d, k) != walk_power_oracle(d, k)) v.fail("mismatch at trial " + std::to_string(trial));
  }
  v.detail = v.ok ? "500 digraphs" : v.detail;
  return v;
}

// Composition law.
Verdict power_composes() {
  Verdict v;
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    const Digraph d = t::random_digraph(rng, 10);
    const std::size_t a = t::uniform(rng, 2, 3);
    const std::size_t b = t::uniform(rng, 2, 3);
    if (power(d, a * b) != power(power(d, a), b)) v.fail("trial " + std::to_string(trial));
  }
  v.detail = v.ok ? "200 digraphs" : v.detail;
  return v;
}

// Roots assembled from isomorphic copies are roots.
Verdict assembled_roots_verify() {
  Verdict v;
  std::mt19937_64 rng(1003);
  const std::size_t ks[] = {2, 3, 5};
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    const std::size_t n = t::uniform(rng, 1, 8);
    const Digraph d0 = t::random_digraph(rng, n, 0.1 * static_cast<double>(t::uniform(rng, 1, 9)));
    const std::size_t k = ks[trial % 3];
    std::vector<Digraph> parts;
    std::vector<VertexBijection> isos;
    for (std::size_t i = 0; i < k; ++i) {
      isos.push_back(t::random_permutation(rng, n));
      parts.push_back(relabel(d0, isos.back()));
    }
    if (!verify_root(assemble_root(d0, parts, isos), k, disjoint_union(parts).graph)) {
      v.fail("trial " + std::to_string(trial));
    }
  }
  v.detail = v.ok ? "200 instances" : v.detail;
  return v;
}

// Exhaustive census on three vertices.
Verdict census_agrees() {
  Verdict v;
  std::size_t with_root = 0;
  for (std::size_t k : {2, 3}) {
    for (std::uint64_t mask = 0; mask < 512 && v.ok; ++mask) {
      const Digraph d = t::digraph_from_mask(3, mask);
      const auto roots = exhaustive_roots(d, k);
      for (const Digraph& r : roots) {
        if (!verify_root(r, k, d)) v.fail("exhaustive witness fails, mask " + std::to_string(mask));
      }
      const SearchOutcome outcome = backtracking_root_search(d, k, 10'000'000);
      if (outcome.status == SearchStatus::kBudgetExhausted) v.fail("budget exhausted");
      if ((outcome.status == SearchStatus::kRootFound) != !roots.empty()) {
        v.fail("existence differs, k " + std::to_string(k) + " mask " + std::to_string(mask));
      }
      if (outcome.witness && !verify_root(*outcome.witness, k, d)) v.fail("search witness fails");
      with_root += !roots.empty();
    }
  }
  if (v.ok) v.detail = "1024 instances, " + std::to_string(with_root) + " with roots";
  return v;
}

// Fixed values from a separate enumeration.
Verdict fixed_oracle_values() {
  Verdict v;
  if (!exhaustive_roots(Digraph(2, {{0, 1}}), 2).empty()) v.fail("single arc has a square root");
  const auto roots = exhaustive_roots(Digraph(2, {{0, 0}, {1, 1}}), 2);
  const std::vector<Digraph> expected{Digraph(2, {{0, 1}, {1, 0}}), Digraph(2, {{0, 0}, {1, 1}})};
  if (roots != expected) v.fail("two loops: wrong root list");
  if (v.ok) v.detail = "2 fixed instances";
  return v;
}

// Isomorphic inputs give reductions with roots.
Verdict reduction_positive() {
  Verdict v;
  std::mt19937_64 rng(1006);
  for (int trial = 0; trial < 100 && v.ok; ++trial) {
    const Digraph d1 = t::random_digraph(rng, 5);
    const Digraph d2 = relabel(d1, t::random_permutation(rng, d1.vertex_count()));
    const std::size_t k = 2 + trial % 2;
    const Digraph d = reduce(d1, d2, k).graph;
    const ClassRootDecision decision = decide_root_in_class(d, k);
    if (!decision.has_root()) v.fail("no root at trial " + std::to_string(trial));
    else if (!verify_root(*decision.root, k, d)) v.fail("root fails at trial " + std::to_string(trial));
  }
  if (v.ok) v.detail = "100 pairs";
  return v;
}

// Non-isomorphic inputs give reductions without roots, and the complete
// search confirms the smallest such instance independently.
Verdict reduction_negative() {
  Verdict v;
  std::mt19937_64 rng(1007);
  int pairs = 0;
  while (pairs < 100 && v.ok) {
    const Digraph d1 = t::random_digraph(rng, 4);
    const Digraph d2 = pairs % 2 == 0
                           ? t::rewire(rng, relabel(d1, t::random_permutation(rng, d1.vertex_count())), 3)
                           : t::random_digraph(rng, 4);
    if (t::brute_force_isomorphic(d1, d2)) continue;
    if (find_isomorphism(d1, d2)) {
      v.fail("isomorphism module disagrees with brute force");
      break;
    }
    const std::size_t k = 2 + pairs % 2;
    if (decide_root_in_class(reduce(d1, d2, k).graph, k).has_root()) {
      v.fail("root reported at pair " + std::to_string(pairs));
    }
    ++pairs;
  }
  const ReductionInstance smallest = reduce(Digraph(1, {{0, 0}}), Digraph(1), 2);
  const SearchOutcome outcome = backtracking_root_search(smallest.graph, 2, 100'000'000);
  if (outcome.status != SearchStatus::kNoRoot) {
    v.fail(std::string("13-vertex search: ") + to_string(outcome.status));
  }
  if (v.ok) {
    v.detail = "100 pairs; 13-vertex search no-root in " +
               std::to_string(outcome.statistics.nodes) + " nodes";
  }
  return v;
}

std::vector<t::ClassInstance> extraction_instances() {
  std::mt19937_64 rng(1008);
  std::vector<t::ClassInstance> instances;
  // Parent digraphs (suspensions) have at most 6 vertices.
  for (int trial = 0; trial < 100; ++trial) instances.push_back(t::random_class_instance(rng, 4, 2 + trial % 2));
  return instances;
}

// Extraction round trip on scrambled instances.
Verdict extraction_round_trip() {
  Verdict v;
  for (const auto& inst : extraction_instances()) {
    if (!v.ok) break;
    try {
      const auto maps = extract_isomorphisms(inst.graph, inst.root, inst.k);
      const auto blocks = weak_components(inst.graph);
      const Digraph first = induced(inst.graph, blocks[0]).graph;
      if (maps.size() != inst.k - 1) v.fail("wrong map count");
      for (std::size_t j = 0; j < maps.size() && v.ok; ++j) {
        if (!is_isomorphism(first, induced(inst.graph, blocks[j + 1]).graph, maps[j])) {
          v.fail("map fails validation");
        }
      }
    } catch (const std::exception& e) {
      v.fail(e.what());
    }
  }
  if (v.ok) v.detail = "100 instances";
  return v;
}

// The source path of each extraction instance.
Verdict source_path_invariant() {
  Verdict v;
  for (const auto& inst : extraction_instances()) {
    if (!v.ok) break;
    const FreePath q = source_free_path(inst.graph, inst.root, inst.k);
    if (q.vertices.size() != inst.k || !is_free_path(inst.root, q.vertices)) v.fail("not a free path");
    std::vector<bool> in_q(inst.graph.vertex_count(), false);
    for (Vertex x : q.vertices) in_q[x] = true;
    for (Vertex x : q.vertices) {
      for (Vertex u : inst.root.in(x)) {
        if (!in_q[u]) v.fail("root predecessor outside the sources");
      }
    }
  }
  if (v.ok) v.detail = "100 instances";
  return v;
}

// Structural invariants of the constructions.
Verdict structural_invariants() {
  Verdict v;
  std::mt19937_64 rng(1010);
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    const Digraph d = t::random_digraph(rng, 8);
    const Subdivision s = subdivide(d);
    const std::string bad = t::subdivision_facts_violation(s.graph, s.core);
    if (!bad.empty()) v.fail("subdivide: " + bad);
  }
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    const ReductionInstance inst =
        reduce(t::random_digraph(rng, 5), t::random_digraph(rng, 5), t::uniform(rng, 2, 4));
    const std::string bad = t::reduction_invariants_violation(inst);
    if (!bad.empty()) v.fail("reduce: " + bad);
  }
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    const Digraph d = t::random_digraph(rng, 7);
    const Digraph s = subdivide(d).graph;
    const CoreResult core = find_core(relabel(s, t::random_permutation(rng, s.vertex_count())));
    const auto* w = std::get_if<CoreWitness>(&core);
    if (w == nullptr) v.fail("find_core rejected a subdivision");
    else if (!t::brute_force_isomorphic(w->parent, d)) v.fail("recovered parent differs");
  }
  if (v.ok) v.detail = "600 instances";
  return v;
}

Digraph subdivided_suspension(const Digraph& d) { return subdivide(suspend(d).graph).graph; }

// Isomorphism survives suspension plus subdivision in both directions.
Verdict subdivided_suspension_equivalence() {
  Verdict v;
  std::mt19937_64 rng(1011);
  int same_degree_negatives = 0;
  for (int trial = 0; trial < 100 && v.ok; ++trial) {
    const Digraph d1 = t::random_digraph(rng, 5);
    Digraph d2 = relabel(d1, t::random_permutation(rng, d1.vertex_count()));
    if (trial % 3 == 1) {
      // Degree-preserving rewiring until the pair is non-isomorphic, if it can be.
      for (int attempt = 0; attempt < 20; ++attempt) {
        const Digraph candidate = t::rewire(rng, d2, 2);
        if (!t::brute_force_isomorphic(d1, candidate)) {
          d2 = candidate;
          break;
        }
      }
    } else if (trial % 3 == 2) {
      d2 = t::random_digraph(rng, d1.vertex_count(), 0.5);
    }
    const bool base = t::brute_force_isomorphic(d1, d2);
    if (!base && t::sorted_degrees(d1, true) == t::sorted_degrees(d2, true) &&
        t::sorted_degrees(d1, false) == t::sorted_degrees(d2, false)) {
      ++same_degree_negatives;
    }
    if (is_isomorphic(subdivided_suspension(d1), subdivided_suspension(d2)) != base) {
      v.fail("disagreement at trial " + std::to_string(trial));
    }
  }
  if (v.ok && same_degree_negatives < 10) {
    v.fail("only " + std::to_string(same_degree_negatives) + " same-degree non-isomorphic pairs");
  }
  if (v.ok) v.detail = "100 pairs, " + std::to_string(same_degree_negatives) + " same-degree negatives";
  return v;
}

// Isomorphism checker against permutation enumeration.
Verdict isomorphism_matches_brute_force() {
  Verdict v;
  std::mt19937_64 rng(1012);
  int positives = 0;
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    const Digraph a = t::random_digraph(rng, 6);
    Digraph b = relabel(a, t::random_permutation(rng, a.vertex_count()));
    if (trial % 4 == 1) b = t::rewire(rng, b, 6);
    if (trial % 4 == 3) b = t::random_digraph(rng, a.vertex_count(), 0.5);
    const auto phi = find_isomorphism(a, b);
    const bool expected = t::brute_force_isomorphic(a, b);
    if (phi.has_value() != expected) v.fail("verdict differs at trial " + std::to_string(trial));
    if (phi && !is_isomorphism(a, b, *phi)) v.fail("returned map is invalid");
    positives += expected;
  }
  if (v.ok) v.detail = "200 pairs, " + std::to_string(positives) + " isomorphic";
  return v;
}

// Fixed-seed experiment output is byte-identical across runs.
Verdict experiment_deterministic() {
  Verdict v;
  const std::vector<std::string> args{"experiment", "--trials", "30", "--max-n", "5",
                                      "--seed", "2026", "--json"};
  std::ostringstream out1, out2, err;
  const int code1 = cli::run(args, out1, err);
  const int code2 = cli::run(args, out2, err);
  if (code1 != cli::kPositive || code2 != cli::kPositive) v.fail("experiment exit code " + std::to_string(code1));
  if (out1.str() != out2.str()) v.fail("outputs differ");
  if (out1.str().empty()) v.fail("empty output");
  if (v.ok) v.detail = std::to_string(out1.str().size()) + " identical bytes";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "power agrees with walk oracle", 5, power_matches_oracle},
      {2, "power composition law", 5, power_composes},
      {3, "assembled roots verify", 10, assembled_roots_verify},
      {4, "3-vertex census agreement", 60, census_agrees},
      {5, "fixed oracle values", 1, fixed_oracle_values},
      {6, "isomorphic inputs give roots", 60, reduction_positive},
      {7, "non-isomorphic inputs give no root", 600, reduction_negative},
      {8, "isomorphism extraction round trip", 60, extraction_round_trip},
      {9, "source free path invariant", 60, source_path_invariant},
      {10, "structural invariants", 30, structural_invariants},
      {11, "subdivided suspension equivalence", 60, subdivided_suspension_equivalence},
      {12, "isomorphism vs brute force", 60, isomorphism_matches_brute_force},
      {13, "experiment determinism", 60, experiment_deterministic},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && seconds > c.limit_seconds) v.fail("over time limit");
    failures += !v.ok;
    char line[256];
    std::snprintf(line, sizeof line, "%s  %2d  %-38s %8.3fs / %gs  ", v.ok ? "PASS" : "FAIL", c.id,
                  c.title, seconds, c.limit_seconds);
    std::cout << line << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
