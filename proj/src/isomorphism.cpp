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

#include <algorithm>
#include <map>
#include <string>

#include "digroot/errors.hpp"

namespace digroot {

std::size_t Coloring::class_count() const {
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<std::size_t> Coloring::class_sizes() const {
  std::vector<std::size_t> sizes(class_count(), 0);
  for (std::size_t c : colors) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

namespace {

// Renumbers ids by first appearance. Returns the number of classes.
std::size_t canonicalize(std::vector<std::size_t>& colors) {
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t& c : colors) {
    const auto [it, inserted] = ids.emplace(c, ids.size());
    c = it->second;
  }
  return ids.size();
}

}  // namespace

Coloring refine_colors(const Digraph& d, const std::optional<Coloring>& initial) {
  const std::size_t n = d.vertex_count();
  Coloring result;
  if (initial) {
    if (initial->colors.size() != n) {
      throw InvalidArgument("initial colouring has " +
                            std::to_string(initial->colors.size()) +
                            " entries for " + std::to_string(n) + " vertices");
    }
    result.colors = initial->colors;
  } else {
    result.colors.assign(n, 0);
  }
  std::size_t classes = canonicalize(result.colors);

  std::vector<std::vector<std::size_t>> keys(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.clear();
      key.push_back(result.colors[v]);
      const std::size_t out_begin = key.size();
      for (Vertex w : d.out(v)) key.push_back(result.colors[w]);
      std::sort(key.begin() + static_cast<std::ptrdiff_t>(out_begin), key.end());
      key.push_back(n);  // separator: no colour id reaches n
      const std::size_t in_begin = key.size();
      for (Vertex w : d.in(v)) key.push_back(result.colors[w]);
      std::sort(key.begin() + static_cast<std::ptrdiff_t>(in_begin), key.end());
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      next[v] = ids.emplace(keys[v], ids.size()).first->second;
    }
    const bool split = ids.size() != classes;
    classes = ids.size();
    result.colors = std::move(next);
    if (!split) break;
  }
  result.stable = true;
  return result;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Digraph& a, const Digraph& b)
      : a_(a), b_(b), n_(a.vertex_count()) {
    const Digraph parts[] = {a, b};
    joint_ = disjoint_union(parts).graph;
  }

  std::optional<VertexBijection> run() {
    Coloring start;
    start.colors.assign(2 * n_, 0);
    return search(start);
  }

 private:
  std::optional<VertexBijection> search(const Coloring& seed) {
    const Coloring refined = refine_colors(joint_, seed);
    const std::size_t classes = refined.class_count();
    std::vector<std::size_t> count_a(classes, 0);
    std::vector<std::size_t> count_b(classes, 0);
    for (Vertex v = 0; v < n_; ++v) {
      ++count_a[refined.colors[v]];
      ++count_b[refined.colors[n_ + v]];
    }
    if (count_a != count_b) return std::nullopt;

    std::size_t target = classes;
    for (std::size_t c = 0; c < classes; ++c) {
      if (count_a[c] > 1 && (target == classes || count_a[c] > count_a[target])) {
        target = c;
      }
    }

    if (target == classes) {
      std::vector<Vertex> by_color(classes);
      for (Vertex w = 0; w < n_; ++w) by_color[refined.colors[n_ + w]] = w;
      std::vector<Vertex> forward(n_);
      for (Vertex v = 0; v < n_; ++v) forward[v] = by_color[refined.colors[v]];
      VertexBijection phi(std::move(forward));
      if (is_isomorphism(a_, b_, phi)) return phi;
      return std::nullopt;
    }

    Vertex pivot = n_;
    for (Vertex v = 0; v < n_ && pivot == n_; ++v) {
      if (refined.colors[v] == target) pivot = v;
    }
    for (Vertex w = 0; w < n_; ++w) {
      if (refined.colors[n_ + w] != target) continue;
      Coloring branch = refined;
      branch.colors[pivot] = classes;
      branch.colors[n_ + w] = classes;
      if (auto phi = search(branch)) return phi;
    }
    return std::nullopt;
  }

  const Digraph& a_;
  const Digraph& b_;
  std::size_t n_;
  Digraph joint_;
};

}  // namespace

std::optional<VertexBijection> find_isomorphism(const Digraph& a,
                                                const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count() ||
      a.loop_count() != b.loop_count()) {
    return std::nullopt;
  }
  if (a.vertex_count() == 0) return VertexBijection{};
  return IsomorphismSearch(a, b).run();
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace digroot
