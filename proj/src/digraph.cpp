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

#include "digroot/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "digroot/errors.hpp"

namespace digroot {

Digraph::Digraph(std::size_t n) : adjacency_(n), out_(n), in_(n) {}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs) : adjacency_(n) {
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) {
      throw InvalidArgument("arc (" + std::to_string(a.from) + ", " +
                            std::to_string(a.to) + ") out of range for " +
                            std::to_string(n) + " vertices");
    }
    adjacency_.set(a.from, a.to);
  }
  index_from_matrix();
}

Digraph::Digraph(BitMatrix adjacency) : adjacency_(std::move(adjacency)) {
  index_from_matrix();
}

void Digraph::index_from_matrix() {
  const std::size_t n = adjacency_.size();
  out_.assign(n, {});
  in_.assign(n, {});
  arc_count_ = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (adjacency_.test(u, v)) {
        out_[u].push_back(v);
        in_[v].push_back(u);
        ++arc_count_;
      }
    }
  }
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) result.push_back({u, v});
  }
  return result;
}

std::size_t Digraph::loop_count() const noexcept {
  std::size_t loops = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) loops += adjacency_.test(v, v);
  return loops;
}

Digraph Digraph::reversed() const { return Digraph(adjacency_.transposed()); }

VertexBijection::VertexBijection(std::vector<Vertex> forward)
    : forward_(std::move(forward)), inverse_(forward_.size(), forward_.size()) {
  const std::size_t n = forward_.size();
  for (Vertex v = 0; v < n; ++v) {
    const Vertex image = forward_[v];
    if (image >= n || inverse_[image] != n) {
      throw InvalidArgument("vertex map is not a bijection at vertex " +
                            std::to_string(v));
    }
    inverse_[image] = v;
  }
}

VertexBijection VertexBijection::identity(std::size_t n) {
  std::vector<Vertex> forward(n);
  std::iota(forward.begin(), forward.end(), Vertex{0});
  return VertexBijection(std::move(forward));
}

VertexBijection VertexBijection::inverse() const {
  return VertexBijection(inverse_);
}

VertexBijection VertexBijection::after(const VertexBijection& first) const {
  if (first.size() != size()) {
    throw InvalidArgument("cannot compose bijections of different sizes");
  }
  std::vector<Vertex> composed(size());
  for (Vertex v = 0; v < size(); ++v) composed[v] = forward_[first(v)];
  return VertexBijection(std::move(composed));
}

std::vector<Vertex> iterated_neighborhood(const Digraph& d,
                                          std::span<const Vertex> start,
                                          Direction direction, std::size_t t) {
  const std::size_t n = d.vertex_count();
  std::vector<char> current(n, 0);
  for (Vertex v : start) {
    if (v >= n) {
      throw InvalidArgument("vertex " + std::to_string(v) +
                            " out of range in neighbourhood query");
    }
    current[v] = 1;
  }
  std::vector<char> next(n);
  for (std::size_t step = 0; step < t; ++step) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!current[v]) continue;
      const auto nbrs = direction == Direction::kOut ? d.out(v) : d.in(v);
      for (Vertex w : nbrs) next[w] = 1;
      any = any || !nbrs.empty();
    }
    current.swap(next);
    if (!any) break;
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    if (current[v]) result.push_back(v);
  }
  return result;
}

std::vector<std::vector<Vertex>> weak_components(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::size_t> component(n, n);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (component[root] != n) continue;
    const std::size_t id = blocks.size();
    blocks.emplace_back();
    component[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      blocks[id].push_back(v);
      for (auto nbrs : {d.out(v), d.in(v)}) {
        for (Vertex w : nbrs) {
          if (component[w] == n) {
            component[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(blocks[id].begin(), blocks[id].end());
  }
  return blocks;
}

InducedSubgraph induced(const Digraph& d, std::span<const Vertex> subset) {
  const std::size_t n = d.vertex_count();
  std::vector<Vertex> vertices(subset.begin(), subset.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<std::size_t> local(n, n);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n) {
      throw InvalidArgument("vertex " + std::to_string(vertices[i]) +
                            " out of range in induced subgraph");
    }
    local[vertices[i]] = i;
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : d.out(vertices[i])) {
      if (local[w] != n) arcs.push_back({i, local[w]});
    }
  }
  return {Digraph(vertices.size(), arcs), std::move(vertices)};
}

Digraph relabel(const Digraph& d, const VertexBijection& pi) {
  if (pi.size() != d.vertex_count()) {
    throw InvalidArgument("relabelling of size " + std::to_string(pi.size()) +
                          " applied to digraph on " +
                          std::to_string(d.vertex_count()) + " vertices");
  }
  std::vector<Arc> arcs = d.arcs();
  for (Arc& a : arcs) a = {pi(a.from), pi(a.to)};
  return Digraph(d.vertex_count(), arcs);
}

bool is_isomorphism(const Digraph& from, const Digraph& to,
                    const VertexBijection& phi) {
  if (from.vertex_count() != to.vertex_count() ||
      phi.size() != from.vertex_count() || from.arc_count() != to.arc_count()) {
    return false;
  }
  // Equal arc counts plus injectivity make "arcs onto arcs" sufficient.
  for (const Arc& a : from.arcs()) {
    if (!to.has_arc(phi(a.from), phi(a.to))) return false;
  }
  return true;
}

DisjointUnion disjoint_union(std::span<const Digraph> parts) {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const Digraph& p : parts) {
    offsets.push_back(total);
    total += p.vertex_count();
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Arc& a : parts[i].arcs()) {
      arcs.push_back({a.from + offsets[i], a.to + offsets[i]});
    }
  }
  return {Digraph(total, arcs), std::move(offsets)};
}

}  // namespace digroot
