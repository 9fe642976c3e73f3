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

#ifndef DIGROOT_SUBDIVISION_HPP
#define DIGROOT_SUBDIVISION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "digroot/digraph.hpp"
#include "digroot/errors.hpp"
#include "digroot/reduction.hpp"

namespace digroot {

// ---------------------------------------------------------------------------
// Core recognition
// ---------------------------------------------------------------------------

enum class SubdivisionDefect {
  /// Some arc would have both endpoints on the same side of the core split
  /// (includes loops and odd alternating cycles).
  kArcWithinSide,
  /// A vertex outside the core is not thin.
  kNonThinComplement,
  /// Two complement vertices replace the same parent arc.
  kParallelArcs,
};

const char* to_string(SubdivisionDefect defect) noexcept;

struct NotASubdivision {
  SubdivisionDefect defect = SubdivisionDefect::kArcWithinSide;
  /// Offending vertex (the first endpoint for kArcWithinSide).
  Vertex vertex = 0;
  /// The offending arc for kArcWithinSide; for kParallelArcs, `to` holds the
  /// second complement vertex.
  Arc arc{};

  std::string describe() const;
};

using CoreResult = std::variant<CoreWitness, NotASubdivision>;

/// Recognises a subdivision digraph and recovers a core with its contracted
/// parent.
///
/// Non-thin vertices are forced into the core and sides alternate along
/// every arc. A weak component made only of thin vertices is a directed
/// cycle; when it admits both alternating splits the one placing its smallest
/// vertex in the core is used.
CoreResult find_core(const Digraph& s);

// ---------------------------------------------------------------------------
// Free paths
// ---------------------------------------------------------------------------

/// a_1 -> ... -> a_k with O(a_i) = {a_{i+1}} and I(a_{i+1}) = {a_i}.
struct FreePath {
  std::vector<Vertex> vertices;

  friend bool operator==(const FreePath&, const FreePath&) = default;
};

bool is_free_path(const Digraph& r, std::span<const Vertex> vertices);

struct FreePathCover {
  /// Pairwise disjoint, k vertices each, together covering V(D). Sorted by
  /// smallest contained vertex.
  std::vector<FreePath> paths;
  /// Weak-component index (as ordered by weak_components) visited at each
  /// path position; identical for every path.
  std::vector<std::size_t> component_order;
};

/// With Q the in-degree-zero vertices of D (|Q| = k), returns the order of Q
/// that forms a free path in the root R.
///
/// Throws InvalidArgument for k < 2 or when R^k != D, HypothesisViolation
/// when D is not a subdivision digraph, has a vertex of out-degree zero, or
/// |Q| != k, and InconsistentRoot when R[Q] is not a free path or some
/// R-in-neighbour of Q lies outside Q.
FreePath source_free_path(const Digraph& d, const Digraph& r, std::size_t k);

/// Grows a free-path cover of V(D) from a free path of core vertices.
///
/// Breadth-first worklist. A core path a_1..a_k spawns the paths through
/// O_D(a_i) by following unique R-successors, and the paths through I_D(a_i)
/// by following unique R-predecessors. A non-core path u_1..u_k lifts to the
/// path of unique D-out-neighbours of the u_i when all of those have positive
/// out-degree, and to the path of unique D-in-neighbours when all of those
/// have positive in-degree. Every uniqueness and freeness claim is checked;
/// the first failure throws InconsistentRoot naming the step. Unreached
/// vertices throw IncompleteCover with the residue.
FreePathCover propagate_cover(const Digraph& d, const Digraph& r, std::size_t k,
                              const CoreWitness& core, const FreePath& seed);

// ---------------------------------------------------------------------------
// The restricted class
// ---------------------------------------------------------------------------

/// Conditions a digraph must meet for class-restricted root decisions:
/// subdivision digraph, exactly k weak components, positive out-degrees,
/// exactly one in-degree-zero vertex per component.
enum class ClassCondition {
  kNotSubdivision,
  kComponentCount,
  kZeroOutDegree,
  kSourceCount,
  kBadK,
};

const char* to_string(ClassCondition condition) noexcept;

class ClassHypothesisViolation : public HypothesisViolation {
 public:
  ClassHypothesisViolation(ClassCondition condition, const std::string& what)
      : HypothesisViolation(std::string(to_string(condition)) + ": " + what),
        condition_(condition) {}

  ClassCondition condition() const noexcept { return condition_; }

 private:
  ClassCondition condition_;
};

/// Throws ClassHypothesisViolation for the first condition that fails.
void check_class_hypotheses(const Digraph& d, std::size_t k);

/// For a class digraph D with k-th root R, the isomorphisms from the first
/// weak component onto components 2..k, read off the free-path cover.
///
/// Each map is between induced components in local indices (see
/// weak_components and induced) and is validated arc by arc before return.
std::vector<VertexBijection> extract_isomorphisms(const Digraph& d,
                                                  const Digraph& r,
                                                  std::size_t k);

struct ClassRootDecision {
  /// Present iff D has a k-th root; verified before return.
  std::optional<Digraph> root;
  /// When no root exists: 1-based indices (1, j) of a component pair that is
  /// not isomorphic.
  std::optional<std::pair<std::size_t, std::size_t>> non_isomorphic_pair;

  bool has_root() const noexcept { return root.has_value(); }
};

/// Decides whether a class digraph has a k-th root: it does iff all weak
/// components are isomorphic, and then the root is assembled from those
/// isomorphisms. Class violations throw rather than returning no-root.
ClassRootDecision decide_root_in_class(const Digraph& d, std::size_t k);

}  // namespace digroot

#endif  // DIGROOT_SUBDIVISION_HPP
