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

#ifndef DIGROOT_DIGRAPH_HPP
#define DIGROOT_DIGRAPH_HPP

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <vector>

#include "digroot/bit_matrix.hpp"

namespace digroot {

using Vertex = std::size_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite directed graph on vertices 0..n-1 without multiple arcs; loops are
/// allowed.
///
/// Immutable once built. Out- and in-neighbour lists are kept sorted in
/// ascending order next to a packed adjacency matrix, so set queries and
/// Boolean products both work without conversion.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);
  /// Duplicate arcs collapse to one. Throws InvalidArgument on an endpoint
  /// outside 0..n-1.
  Digraph(std::size_t n, std::span<const Arc> arcs);
  Digraph(std::size_t n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}
  explicit Digraph(BitMatrix adjacency);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  /// All arcs in ascending (from, to) order.
  std::vector<Arc> arcs() const;

  std::span<const Vertex> out(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in(Vertex v) const { return in_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }

  bool has_arc(Vertex from, Vertex to) const noexcept {
    return from < vertex_count() && to < vertex_count() &&
           adjacency_.test(from, to);
  }

  std::size_t loop_count() const noexcept;

  const BitMatrix& adjacency() const noexcept { return adjacency_; }

  /// Same vertices, every arc reversed.
  Digraph reversed() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void index_from_matrix();

  BitMatrix adjacency_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// Bijection between two vertex sets of equal size, stored in both
/// directions.
class VertexBijection {
 public:
  VertexBijection() = default;
  /// Throws InvalidArgument unless `forward` is a permutation of 0..n-1.
  explicit VertexBijection(std::vector<Vertex> forward);

  static VertexBijection identity(std::size_t n);

  std::size_t size() const noexcept { return forward_.size(); }
  Vertex operator()(Vertex v) const { return forward_.at(v); }
  Vertex inverse_of(Vertex v) const { return inverse_.at(v); }

  const std::vector<Vertex>& forward() const noexcept { return forward_; }
  const std::vector<Vertex>& backward() const noexcept { return inverse_; }

  VertexBijection inverse() const;
  /// (this after first)(v) = this(first(v)).
  VertexBijection after(const VertexBijection& first) const;

  friend bool operator==(const VertexBijection& a, const VertexBijection& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::vector<Vertex> forward_;
  std::vector<Vertex> inverse_;
};

enum class Direction { kOut, kIn };

/// O^t(U) or I^t(U). t = 0 returns U itself (sorted, deduplicated).
std::vector<Vertex> iterated_neighborhood(const Digraph& d,
                                          std::span<const Vertex> start,
                                          Direction direction, std::size_t t);

/// Weakly connected components, each sorted ascending, blocks ordered by
/// their smallest vertex.
std::vector<std::vector<Vertex>> weak_components(const Digraph& d);

struct InducedSubgraph {
  Digraph graph;
  /// Local vertex i of `graph` is vertex `vertices[i]` of the parent.
  std::vector<Vertex> vertices;
};

/// D[U]. Local order follows ascending parent index.
InducedSubgraph induced(const Digraph& d, std::span<const Vertex> subset);

/// Arc set {(pi(u), pi(v))}.
Digraph relabel(const Digraph& d, const VertexBijection& pi);

/// True iff `phi` maps arcs onto arcs and non-arcs onto non-arcs.
bool is_isomorphism(const Digraph& from, const Digraph& to,
                    const VertexBijection& phi);

struct DisjointUnion {
  Digraph graph;
  /// Vertex v of part p becomes offsets[p] + v.
  std::vector<std::size_t> offsets;
};

DisjointUnion disjoint_union(std::span<const Digraph> parts);

}  // namespace digroot

#endif  // DIGROOT_DIGRAPH_HPP
