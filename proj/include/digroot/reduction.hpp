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

#ifndef DIGROOT_REDUCTION_HPP
#define DIGROOT_REDUCTION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "digroot/digraph.hpp"

namespace digroot {

/// A core C of a subdivision digraph S together with the digraph whose
/// complete subdivision S is.
struct CoreWitness {
  /// C, ascending. Parent vertex i is S-vertex core[i].
  std::vector<Vertex> core;
  /// V(S) \ C, ascending. Every member is thin.
  std::vector<Vertex> complement;
  /// The contracted digraph on |C| vertices.
  Digraph parent;
  /// complement_arcs[j] is the parent arc replaced by complement[j], in
  /// parent indices.
  std::vector<Arc> complement_arcs;

  bool in_core(Vertex v) const;
};

struct Suspension {
  Digraph graph;
  Vertex r = 0;
  Vertex s = 0;
};

/// Adds r and s with arcs r->a, s->a and a->s for every vertex a. Original
/// vertices keep their indices; r = n and s = n + 1. Throws InvalidArgument
/// for the empty digraph.
Suspension suspend(const Digraph& d);

struct Subdivision {
  Digraph graph;
  CoreWitness core;
};

/// Complete subdivision: every arc a->b becomes a->x->b through a new vertex
/// x. Originals keep their indices; the vertex for the i-th arc in ascending
/// (from, to) order is n + i.
Subdivision subdivide(const Digraph& d);

enum class Role { kOriginal, kRoot, kSink, kSubdivision };

const char* to_string(Role role) noexcept;

struct VertexOrigin {
  /// 1-based copy index i of the component the vertex belongs to.
  std::size_t copy = 0;
  Role role = Role::kOriginal;
  /// kOriginal: the vertex of D_i it copies.
  Vertex source = 0;
  /// kSubdivision: the replaced arc, in the indices of the suspension of D_i
  /// (originals first, then r, then s).
  Arc replaced{};
};

struct ReductionInstance {
  Digraph graph;
  std::vector<VertexOrigin> provenance;
  /// First vertex of each component, in copy order.
  std::vector<std::size_t> component_offsets;
  std::size_t k = 0;
};

/// Disjoint union of the subdivided suspensions of D1 and of k-1 copies of
/// D2, components in copy order 1..k. Throws InvalidArgument for an empty
/// input or k < 2.
ReductionInstance reduce(const Digraph& d1, const Digraph& d2, std::size_t k);

/// k-th root of the disjoint union of `parts` (k = parts.size()), built from
/// isomorphisms isos[i]: reference -> parts[i].
///
/// For every vertex a of the reference the root contains the path
/// isos[0](a) -> isos[1](a) -> ... -> isos[k-1](a) and the wrap arcs
/// isos[k-1](a) -> isos[0](b) for each out-neighbour b of a. Vertices are
/// numbered as in disjoint_union(parts). Throws InvalidArgument when the
/// counts disagree or some map is not an isomorphism.
Digraph assemble_root(const Digraph& reference, std::span<const Digraph> parts,
                   std::span<const VertexBijection> isos);

struct ComponentSplit {
  /// k-1 copies of the first component.
  Digraph first_copies;
  /// Components 2..k.
  Digraph rest;
};

/// Turns a digraph with exactly k weak components into a pair of digraphs
/// that are isomorphic iff all components are pairwise isomorphic. Throws
/// HypothesisViolation when the component count is not k.
ComponentSplit split_components(const Digraph& d, std::size_t k);

}  // namespace digroot

#endif  // DIGROOT_REDUCTION_HPP
