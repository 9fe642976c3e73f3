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

#ifndef DIGROOT_ISOMORPHISM_HPP
#define DIGROOT_ISOMORPHISM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "digroot/digraph.hpp"

namespace digroot {

/// Vertex colouring with canonical ids: colours are numbered 0, 1, ... in
/// order of first appearance when scanning vertices by ascending index.
struct Coloring {
  std::vector<std::size_t> colors;
  /// Set when one more refinement round would not split any class.
  bool stable = false;

  std::size_t class_count() const;
  /// Class sizes sorted ascending; equal for isomorphic graphs after
  /// refinement.
  std::vector<std::size_t> class_sizes() const;
};

/// Directed colour refinement. Each round splits classes by the multisets of
/// out-neighbour colours and in-neighbour colours until no class splits.
/// `initial` must have one entry per vertex when given; it is canonicalised
/// before refinement starts.
Coloring refine_colors(const Digraph& d,
                       const std::optional<Coloring>& initial = std::nullopt);

/// Some isomorphism a -> b, or nullopt when none exists.
///
/// Refines both graphs jointly as one disjoint union so that colour ids are
/// comparable, then individualises the smallest vertex of the largest
/// ambiguous class of `a` against each candidate of `b` in ascending order.
/// Complete; every returned map is checked arc by arc.
std::optional<VertexBijection> find_isomorphism(const Digraph& a,
                                                const Digraph& b);

bool is_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace digroot

#endif  // DIGROOT_ISOMORPHISM_HPP
