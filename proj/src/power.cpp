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

#include "digroot/power.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "digroot/errors.hpp"

namespace digroot {
namespace {

void require_positive(std::uint64_t k) {
  if (k == 0) throw InvalidArgument("power exponent must be at least 1");
}

}  // namespace

Digraph power(const Digraph& d, std::uint64_t k) {
  require_positive(k);
  return Digraph(boolean_power(d.adjacency(), k));
}

Digraph walk_power_oracle(const Digraph& d, std::uint64_t k) {
  require_positive(k);
  const std::size_t n = d.vertex_count();
  std::vector<Arc> arcs;
  std::vector<char> frontier(n);
  std::vector<char> next(n);
  for (Vertex source = 0; source < n; ++source) {
    std::fill(frontier.begin(), frontier.end(), 0);
    frontier[source] = 1;
    for (std::uint64_t step = 0; step < k; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (Vertex v = 0; v < n; ++v) {
        if (!frontier[v]) continue;
        for (Vertex w : d.out(v)) next[w] = 1;
      }
      frontier.swap(next);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (frontier[v]) arcs.push_back({source, v});
    }
  }
  return Digraph(n, arcs);
}

bool verify_root(const Digraph& root, std::uint64_t k, const Digraph& d) {
  if (root.vertex_count() != d.vertex_count()) {
    throw InvalidArgument("root candidate has " +
                          std::to_string(root.vertex_count()) +
                          " vertices but the target has " +
                          std::to_string(d.vertex_count()));
  }
  return power(root, k) == d;
}

}  // namespace digroot
