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

#include "digroot/reduction.hpp"

#include <algorithm>
#include <string>

#include "digroot/errors.hpp"

namespace digroot {

bool CoreWitness::in_core(Vertex v) const {
  return std::binary_search(core.begin(), core.end(), v);
}

Suspension suspend(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) throw InvalidArgument("cannot suspend the empty digraph");
  const Vertex r = n;
  const Vertex s = n + 1;
  std::vector<Arc> arcs = d.arcs();
  for (Vertex a = 0; a < n; ++a) {
    arcs.push_back({r, a});
    arcs.push_back({s, a});
    arcs.push_back({a, s});
  }
  return {Digraph(n + 2, arcs), r, s};
}

Subdivision subdivide(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  const std::vector<Arc> original = d.arcs();
  std::vector<Arc> arcs;
  arcs.reserve(2 * original.size());
  CoreWitness witness;
  witness.core.resize(n);
  for (Vertex v = 0; v < n; ++v) witness.core[v] = v;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const Vertex x = n + i;
    arcs.push_back({original[i].from, x});
    arcs.push_back({x, original[i].to});
    witness.complement.push_back(x);
  }
  witness.parent = d;
  witness.complement_arcs = original;
  return {Digraph(n + original.size(), arcs), std::move(witness)};
}

const char* to_string(Role role) noexcept {
  switch (role) {
    case Role::kOriginal:
      return "original";
    case Role::kRoot:
      return "r";
    case Role::kSink:
      return "s";
    case Role::kSubdivision:
      return "subdivision";
  }
  return "unknown";
}

ReductionInstance reduce(const Digraph& d1, const Digraph& d2, std::size_t k) {
  if (k < 2) throw InvalidArgument("reduction requires k >= 2");
  if (d1.vertex_count() == 0 || d2.vertex_count() == 0) {
    throw InvalidArgument("reduction inputs must be nonempty digraphs");
  }
  ReductionInstance instance;
  instance.k = k;
  std::vector<Digraph> components;
  for (std::size_t copy = 1; copy <= k; ++copy) {
    const Digraph& base = copy == 1 ? d1 : d2;
    const std::size_t n = base.vertex_count();
    const Suspension hat = suspend(base);
    Subdivision bar = subdivide(hat.graph);
    for (Vertex v = 0; v < bar.graph.vertex_count(); ++v) {
      VertexOrigin origin;
      origin.copy = copy;
      if (v < n) {
        origin.role = Role::kOriginal;
        origin.source = v;
      } else if (v == hat.r) {
        origin.role = Role::kRoot;
      } else if (v == hat.s) {
        origin.role = Role::kSink;
      } else {
        origin.role = Role::kSubdivision;
        origin.replaced = bar.core.complement_arcs[v - hat.graph.vertex_count()];
      }
      instance.provenance.push_back(origin);
    }
    components.push_back(std::move(bar.graph));
  }
  DisjointUnion all = disjoint_union(components);
  instance.graph = std::move(all.graph);
  instance.component_offsets = std::move(all.offsets);
  return instance;
}

Digraph assemble_root(const Digraph& reference, std::span<const Digraph> parts,
                   std::span<const VertexBijection> isos) {
  const std::size_t k = parts.size();
  if (k == 0) throw InvalidArgument("root construction needs at least one part");
  if (isos.size() != k) {
    throw InvalidArgument("expected " + std::to_string(k) +
                          " isomorphisms, got " + std::to_string(isos.size()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_isomorphism(reference, parts[i], isos[i])) {
      throw InvalidArgument("map " + std::to_string(i + 1) +
                            " is not an isomorphism from the reference onto part " +
                            std::to_string(i + 1));
    }
  }
  const DisjointUnion all = disjoint_union(parts);
  const auto& offset = all.offsets;
  std::vector<Arc> arcs;
  for (Vertex a = 0; a < reference.vertex_count(); ++a) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      arcs.push_back({offset[i] + isos[i](a), offset[i + 1] + isos[i + 1](a)});
    }
    for (Vertex b : reference.out(a)) {
      arcs.push_back({offset[k - 1] + isos[k - 1](a), offset[0] + isos[0](b)});
    }
  }
  return Digraph(all.graph.vertex_count(), arcs);
}

ComponentSplit split_components(const Digraph& d, std::size_t k) {
  const auto blocks = weak_components(d);
  if (blocks.size() != k) {
    throw HypothesisViolation("expected " + std::to_string(k) +
                              " weakly connected components, found " +
                              std::to_string(blocks.size()));
  }
  if (k < 2) throw InvalidArgument("component split requires k >= 2");
  const Digraph first = induced(d, blocks.front()).graph;
  const std::vector<Digraph> copies(k - 1, first);
  std::vector<Digraph> rest;
  for (std::size_t i = 1; i < k; ++i) rest.push_back(induced(d, blocks[i]).graph);
  return {disjoint_union(copies).graph, disjoint_union(rest).graph};
}

}  // namespace digroot
