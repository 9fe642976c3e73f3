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

#include "digroot/subdivision.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "digroot/isomorphism.hpp"
#include "digroot/power.hpp"

namespace digroot {

const char* to_string(SubdivisionDefect defect) noexcept {
  switch (defect) {
    case SubdivisionDefect::kArcWithinSide:
      return "arc-within-side";
    case SubdivisionDefect::kNonThinComplement:
      return "non-thin-complement";
    case SubdivisionDefect::kParallelArcs:
      return "parallel-arcs";
  }
  return "unknown";
}

std::string NotASubdivision::describe() const {
  switch (defect) {
    case SubdivisionDefect::kArcWithinSide:
      return "arc " + std::to_string(arc.from) + " -> " + std::to_string(arc.to) +
             " joins two vertices on the same side of every admissible core";
    case SubdivisionDefect::kNonThinComplement:
      return "vertex " + std::to_string(vertex) +
             " lies outside the core but is not thin";
    case SubdivisionDefect::kParallelArcs:
      return "vertices " + std::to_string(arc.from) + " and " +
             std::to_string(arc.to) + " subdivide the same arc";
  }
  return "unknown defect";
}

namespace {

bool is_thin(const Digraph& d, Vertex v) {
  return d.in_degree(v) == 1 && d.out_degree(v) == 1;
}

enum Side : char { kUnset = 0, kCore = 1, kComplement = 2 };

void spread_sides(const Digraph& s, std::vector<char>& side,
                  std::deque<Vertex>& queue) {
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const char opposite = side[v] == kCore ? kComplement : kCore;
    for (auto nbrs : {s.out(v), s.in(v)}) {
      for (Vertex w : nbrs) {
        if (side[w] == kUnset) {
          side[w] = opposite;
          queue.push_back(w);
        }
      }
    }
  }
}

}  // namespace

CoreResult find_core(const Digraph& s) {
  const std::size_t n = s.vertex_count();
  std::vector<char> side(n, kUnset);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_thin(s, v)) {
      side[v] = kCore;
      queue.push_back(v);
    }
  }
  spread_sides(s, side, queue);
  // Remaining vertices lie in all-thin components, i.e. directed cycles.
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] != kUnset) continue;
    side[v] = kCore;
    queue.push_back(v);
    spread_sides(s, side, queue);
  }

  for (const Arc& a : s.arcs()) {
    if (side[a.from] == side[a.to]) {
      return NotASubdivision{SubdivisionDefect::kArcWithinSide, a.from, a};
    }
  }

  CoreWitness witness;
  std::vector<std::size_t> parent_index(n, n);
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == kCore) {
      parent_index[v] = witness.core.size();
      witness.core.push_back(v);
    } else {
      witness.complement.push_back(v);
    }
  }
  std::map<Arc, Vertex> replaced_by;
  for (Vertex x : witness.complement) {
    if (!is_thin(s, x)) {
      return NotASubdivision{SubdivisionDefect::kNonThinComplement, x, {}};
    }
    const Arc parent_arc{parent_index[s.in(x)[0]], parent_index[s.out(x)[0]]};
    const auto [it, inserted] = replaced_by.emplace(parent_arc, x);
    if (!inserted) {
      return NotASubdivision{SubdivisionDefect::kParallelArcs, it->second,
                             Arc{it->second, x}};
    }
    witness.complement_arcs.push_back(parent_arc);
  }
  witness.parent = Digraph(witness.core.size(), witness.complement_arcs);
  return witness;
}

bool is_free_path(const Digraph& r, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const auto out = r.out(vertices[i]);
    const auto in = r.in(vertices[i + 1]);
    if (out.size() != 1 || out[0] != vertices[i + 1]) return false;
    if (in.size() != 1 || in[0] != vertices[i]) return false;
  }
  return true;
}

namespace {

void require_root(const Digraph& d, const Digraph& r, std::size_t k) {
  if (k < 2) throw InvalidArgument("free-path machinery requires k >= 2");
  if (!verify_root(r, k, d)) {
    throw InvalidArgument("the candidate is not a k-th root of the digraph");
  }
}

std::string path_text(std::span<const Vertex> vertices) {
  std::string text;
  for (Vertex v : vertices) {
    if (!text.empty()) text += " -> ";
    text += std::to_string(v);
  }
  return text;
}

}  // namespace

FreePath source_free_path(const Digraph& d, const Digraph& r, std::size_t k) {
  require_root(d, r, k);
  const std::size_t n = d.vertex_count();
  if (std::holds_alternative<NotASubdivision>(find_core(d))) {
    throw HypothesisViolation("the digraph is not a subdivision digraph");
  }
  std::vector<char> in_q(n, 0);
  std::vector<Vertex> q;
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) == 0) {
      throw HypothesisViolation("vertex " + std::to_string(v) +
                                " has out-degree zero");
    }
    if (d.in_degree(v) == 0) {
      in_q[v] = 1;
      q.push_back(v);
    }
  }
  if (q.size() != k) {
    throw HypothesisViolation("expected " + std::to_string(k) +
                              " vertices of in-degree zero, found " +
                              std::to_string(q.size()));
  }
  for (Vertex v : q) {
    for (Vertex u : r.in(v)) {
      if (!in_q[u]) {
        throw InconsistentRoot("sources closed under root predecessors",
                               "root arc " + std::to_string(u) + " -> " +
                                   std::to_string(v) +
                                   " enters a source from outside");
      }
    }
  }
  // Root in-degree equals in-degree inside R[Q] now, so the path head is the
  // unique member of Q without root predecessors.
  std::vector<Vertex> heads;
  for (Vertex v : q) {
    if (r.in_degree(v) == 0) heads.push_back(v);
  }
  if (heads.size() != 1) {
    throw InconsistentRoot("free path on the sources",
                           std::to_string(heads.size()) +
                               " sources have no root predecessor");
  }
  FreePath path{{heads.front()}};
  while (path.vertices.size() < k) {
    const auto out = r.out(path.vertices.back());
    if (out.size() != 1 || !in_q[out[0]]) {
      throw InconsistentRoot("free path on the sources",
                             "vertex " + std::to_string(path.vertices.back()) +
                                 " does not continue the path inside the sources");
    }
    path.vertices.push_back(out[0]);
  }
  if (!is_free_path(r, path.vertices)) {
    throw InconsistentRoot("free path on the sources",
                           path_text(path.vertices) + " is not free");
  }
  std::size_t induced_arcs = 0;
  for (Vertex v : q) {
    for (Vertex w : r.out(v)) induced_arcs += in_q[w];
  }
  if (induced_arcs != k - 1) {
    throw InconsistentRoot("free path on the sources",
                           "the root restricted to the sources has " +
                               std::to_string(induced_arcs) + " arcs");
  }
  return path;
}

namespace {

class CoverBuilder {
 public:
  CoverBuilder(const Digraph& d, const Digraph& r, std::size_t k,
               const CoreWitness& core)
      : d_(d), r_(r), k_(k), core_(core), owner_(d.vertex_count(), kNone) {}

  FreePathCover run(const FreePath& seed) {
    check_seed(seed);
    check_hypotheses();
    admit(seed, "seed");
    while (!queue_.empty()) {
      const std::size_t id = queue_.front();
      queue_.pop_front();
      const std::vector<Vertex> path = paths_[id].vertices;
      std::vector<FreePath> found;
      const std::size_t in_core = static_cast<std::size_t>(std::count_if(
          path.begin(), path.end(), [&](Vertex v) { return core_.in_core(v); }));
      if (in_core == k_) {
        spawn_outward(path, found);
        if (lift_predecessors_) spawn_inward(path, found);
      } else if (in_core == 0) {
        lift(path, Direction::kOut, found);
        lift(path, Direction::kIn, found);
      } else {
        throw InconsistentRoot("free-path propagation",
                               "path " + path_text(path) +
                                   " mixes core and non-core vertices");
      }
      std::sort(found.begin(), found.end(),
                [](const FreePath& a, const FreePath& b) {
                  return *std::min_element(a.vertices.begin(), a.vertices.end()) <
                         *std::min_element(b.vertices.begin(), b.vertices.end());
                });
      for (const FreePath& p : found) admit(p, "propagated path");
    }
    return finish();
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void check_seed(const FreePath& seed) {
    if (seed.vertices.size() != k_) {
      throw InvalidArgument("seed path must have exactly k vertices");
    }
    for (Vertex v : seed.vertices) {
      if (v >= d_.vertex_count() || !core_.in_core(v)) {
        throw InvalidArgument("seed path vertex " + std::to_string(v) +
                              " is not a core vertex");
      }
    }
    if (!is_free_path(r_, seed.vertices)) {
      throw InvalidArgument("seed " + path_text(seed.vertices) +
                            " is not a free path of the root");
    }
  }

  void check_hypotheses() {
    const std::size_t n = d_.vertex_count();
    lift_predecessors_ = true;
    for (Vertex x = 0; x < n; ++x) {
      const Vertex single[] = {x};
      if (iterated_neighborhood(r_, single, Direction::kIn, k_ - 1).empty()) {
        for (Vertex y : r_.out(x)) {
          if (!core_.in_core(y)) {
            throw HypothesisViolation(
                "vertex " + std::to_string(x) +
                " has no root walk of length k-1 into it but a non-core root "
                "successor " + std::to_string(y));
          }
        }
      }
      if (iterated_neighborhood(r_, single, Direction::kOut, k_ - 1).empty()) {
        lift_predecessors_ = false;
      }
    }
  }

  // Paths through O_D(a_i), following unique root successors.
  void spawn_outward(const std::vector<Vertex>& core_path,
                     std::vector<FreePath>& found) {
    spawn(core_path, found, Direction::kOut, "out-neighbour paths of a core path");
  }

  // Paths through I_D(a_i), following unique root predecessors from the end.
  void spawn_inward(const std::vector<Vertex>& core_path,
                    std::vector<FreePath>& found) {
    spawn(core_path, found, Direction::kIn, "in-neighbour paths of a core path");
  }

  void spawn(const std::vector<Vertex>& a, std::vector<FreePath>& found,
             Direction side, const char* step) {
    auto d_nbrs = [&](Vertex v) {
      return side == Direction::kOut ? d_.out(v) : d_.in(v);
    };
    const std::size_t m = d_nbrs(a.front()).size();
    for (Vertex v : a) {
      if (d_nbrs(v).size() != m) {
        throw InconsistentRoot(step, "neighbourhood sizes differ along " +
                                         path_text(a));
      }
    }
    // Outward paths run forward from a_1; inward paths run backward from a_k.
    const bool forward = side == Direction::kOut;
    std::vector<std::vector<char>> seen(k_);
    for (Vertex start : d_nbrs(forward ? a.front() : a.back())) {
      std::vector<Vertex> u{start};
      for (std::size_t step_index = 1; step_index < k_; ++step_index) {
        const Vertex here = u.back();
        const auto next_set = forward ? r_.out(here) : r_.in(here);
        if (next_set.size() != 1) {
          throw InconsistentRoot(step, "vertex " + std::to_string(here) + " has " +
                                           std::to_string(next_set.size()) +
                                           " root neighbours, expected 1");
        }
        const Vertex next = next_set[0];
        const Vertex anchor = forward ? a[step_index] : a[k_ - 1 - step_index];
        const auto expected = d_nbrs(anchor);
        if (!std::binary_search(expected.begin(), expected.end(), next)) {
          throw InconsistentRoot(step, "vertex " + std::to_string(next) +
                                           " is not a neighbour of " +
                                           std::to_string(anchor));
        }
        u.push_back(next);
      }
      if (!forward) std::reverse(u.begin(), u.end());
      if (!is_free_path(r_, u)) {
        throw InconsistentRoot(step, path_text(u) + " is not free");
      }
      found.push_back(FreePath{std::move(u)});
    }
    // The i-th vertices of the new paths must be exactly the neighbourhood
    // of a_i.
    const std::size_t first = found.size() - m;
    for (std::size_t i = 0; i < k_; ++i) {
      std::vector<Vertex> layer;
      for (std::size_t p = first; p < found.size(); ++p) {
        layer.push_back(found[p].vertices[i]);
      }
      std::sort(layer.begin(), layer.end());
      const auto expected = d_nbrs(a[i]);
      if (!std::equal(layer.begin(), layer.end(), expected.begin(), expected.end())) {
        throw InconsistentRoot(step, "paths do not cover the neighbourhood of " +
                                         std::to_string(a[i]));
      }
    }
  }

  void lift(const std::vector<Vertex>& u, Direction side,
            std::vector<FreePath>& found) {
    const char* step = side == Direction::kOut ? "lift to core successors"
                                               : "lift to core predecessors";
    std::vector<Vertex> a;
    for (Vertex v : u) {
      const auto nbrs = side == Direction::kOut ? d_.out(v) : d_.in(v);
      if (nbrs.size() != 1) {
        throw InconsistentRoot(step, "non-core vertex " + std::to_string(v) +
                                         " is not thin");
      }
      a.push_back(nbrs[0]);
    }
    for (Vertex v : a) {
      const std::size_t degree =
          side == Direction::kOut ? d_.out_degree(v) : d_.in_degree(v);
      if (degree == 0) return;
    }
    if (!is_free_path(r_, a)) {
      throw InconsistentRoot(step, path_text(a) + " is not a free path of the root");
    }
    found.push_back(FreePath{std::move(a)});
  }

  void admit(const FreePath& p, const char* what) {
    std::size_t existing = kNone;
    bool all_new = true;
    for (Vertex v : p.vertices) {
      if (owner_[v] == kNone) continue;
      all_new = false;
      if (existing == kNone) existing = owner_[v];
    }
    if (all_new) {
      const std::size_t id = paths_.size();
      for (Vertex v : p.vertices) owner_[v] = id;
      paths_.push_back(p);
      queue_.push_back(id);
      return;
    }
    if (paths_[existing] != p) {
      throw InconsistentRoot("free-path disjointness",
                             std::string(what) + " " + path_text(p.vertices) +
                                 " overlaps " + path_text(paths_[existing].vertices));
    }
  }

  FreePathCover finish() {
    std::vector<Vertex> residue;
    for (Vertex v = 0; v < owner_.size(); ++v) {
      if (owner_[v] == kNone) residue.push_back(v);
    }
    if (!residue.empty()) throw IncompleteCover(std::move(residue));

    const auto blocks = weak_components(d_);
    std::vector<std::size_t> component(d_.vertex_count());
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      for (Vertex v : blocks[c]) component[v] = c;
    }
    FreePathCover cover;
    cover.paths = paths_;
    std::sort(cover.paths.begin(), cover.paths.end(),
              [](const FreePath& a, const FreePath& b) {
                return *std::min_element(a.vertices.begin(), a.vertices.end()) <
                       *std::min_element(b.vertices.begin(), b.vertices.end());
              });
    for (const FreePath& p : cover.paths) {
      std::vector<std::size_t> order;
      for (Vertex v : p.vertices) order.push_back(component[v]);
      std::vector<std::size_t> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      const bool each_once =
          blocks.size() == k_ &&
          std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      if (!each_once) {
        throw InconsistentRoot("component visits",
                               "path " + path_text(p.vertices) +
                                   " does not meet every component exactly once");
      }
      if (cover.component_order.empty()) {
        cover.component_order = order;
      } else if (cover.component_order != order) {
        throw InconsistentRoot("component visits",
                               "path " + path_text(p.vertices) +
                                   " visits components in a different order");
      }
    }
    return cover;
  }

  const Digraph& d_;
  const Digraph& r_;
  std::size_t k_;
  const CoreWitness& core_;
  bool lift_predecessors_ = true;
  std::vector<std::size_t> owner_;
  std::vector<FreePath> paths_;
  std::deque<std::size_t> queue_;
};

}  // namespace

FreePathCover propagate_cover(const Digraph& d, const Digraph& r, std::size_t k,
                              const CoreWitness& core, const FreePath& seed) {
  require_root(d, r, k);
  return CoverBuilder(d, r, k, core).run(seed);
}

const char* to_string(ClassCondition condition) noexcept {
  switch (condition) {
    case ClassCondition::kNotSubdivision:
      return "not-a-subdivision-digraph";
    case ClassCondition::kComponentCount:
      return "wrong-component-count";
    case ClassCondition::kZeroOutDegree:
      return "zero-out-degree-vertex";
    case ClassCondition::kSourceCount:
      return "in-degree-zero-count";
    case ClassCondition::kBadK:
      return "invalid-k";
  }
  return "unknown";
}

void check_class_hypotheses(const Digraph& d, std::size_t k) {
  if (k < 2) throw ClassHypothesisViolation(ClassCondition::kBadK, "k must be at least 2");
  const CoreResult core = find_core(d);
  if (const auto* bad = std::get_if<NotASubdivision>(&core)) {
    throw ClassHypothesisViolation(ClassCondition::kNotSubdivision, bad->describe());
  }
  const auto blocks = weak_components(d);
  if (blocks.size() != k) {
    throw ClassHypothesisViolation(
        ClassCondition::kComponentCount,
        "expected " + std::to_string(k) + " weakly connected components, found " +
            std::to_string(blocks.size()));
  }
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (d.out_degree(v) == 0) {
      throw ClassHypothesisViolation(ClassCondition::kZeroOutDegree,
                                     "vertex " + std::to_string(v));
    }
  }
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    const auto sources = std::count_if(blocks[c].begin(), blocks[c].end(),
                                       [&](Vertex v) { return d.in_degree(v) == 0; });
    if (sources != 1) {
      throw ClassHypothesisViolation(
          ClassCondition::kSourceCount,
          "component " + std::to_string(c + 1) + " has " + std::to_string(sources) +
              " vertices of in-degree zero");
    }
  }
}

std::vector<VertexBijection> extract_isomorphisms(const Digraph& d,
                                                  const Digraph& r,
                                                  std::size_t k) {
  check_class_hypotheses(d, k);
  require_root(d, r, k);
  const CoreWitness core = std::get<CoreWitness>(find_core(d));
  const FreePath seed = source_free_path(d, r, k);
  const FreePathCover cover = propagate_cover(d, r, k, core, seed);

  const auto blocks = weak_components(d);
  std::vector<InducedSubgraph> parts;
  std::vector<std::size_t> local(d.vertex_count());
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) local[block[i]] = i;
    parts.push_back(induced(d, block));
  }
  std::vector<std::size_t> position(k);
  for (std::size_t p = 0; p < k; ++p) position[cover.component_order[p]] = p;

  std::vector<VertexBijection> maps;
  for (std::size_t j = 1; j < k; ++j) {
    const std::size_t size = blocks.front().size();
    if (blocks[j].size() != size) {
      throw InconsistentRoot("isomorphism assembly",
                             "components 1 and " + std::to_string(j + 1) +
                                 " differ in size");
    }
    std::vector<Vertex> forward(size);
    for (const FreePath& p : cover.paths) {
      forward[local[p.vertices[position[0]]]] = local[p.vertices[position[j]]];
    }
    VertexBijection phi(std::move(forward));
    if (!is_isomorphism(parts.front().graph, parts[j].graph, phi)) {
      throw InconsistentRoot("isomorphism assembly",
                             "free paths do not respect the arcs of components 1 and " +
                                 std::to_string(j + 1));
    }
    maps.push_back(std::move(phi));
  }
  return maps;
}

ClassRootDecision decide_root_in_class(const Digraph& d, std::size_t k) {
  check_class_hypotheses(d, k);
  const auto blocks = weak_components(d);
  std::vector<Digraph> parts;
  for (const auto& block : blocks) parts.push_back(induced(d, block).graph);

  std::vector<VertexBijection> isos{VertexBijection::identity(parts.front().vertex_count())};
  for (std::size_t j = 1; j < k; ++j) {
    auto phi = find_isomorphism(parts.front(), parts[j]);
    if (!phi) return ClassRootDecision{std::nullopt, std::pair{std::size_t{1}, j + 1}};
    isos.push_back(std::move(*phi));
  }
  const Digraph union_root = assemble_root(parts.front(), parts, isos);
  // Translate union numbering (blocks concatenated) back to D's numbering.
  std::vector<Vertex> original;
  for (const auto& block : blocks) original.insert(original.end(), block.begin(), block.end());
  std::vector<Arc> arcs = union_root.arcs();
  for (Arc& a : arcs) a = {original[a.from], original[a.to]};
  Digraph root(d.vertex_count(), arcs);
  if (!verify_root(root, k, d)) {
    throw InconsistentRoot("root assembly", "assembled root fails verification");
  }
  return ClassRootDecision{std::move(root), std::nullopt};
}

}  // namespace digroot
