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

#ifndef DIGROOT_GRAPH_IO_HPP
#define DIGROOT_GRAPH_IO_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "digroot/digraph.hpp"
#include "digroot/errors.hpp"

namespace digroot {

// Text format, one statement per line:
//
//   # comment                 ignored, as are blank lines
//   name <text>               optional, before the header
//   vertices <N>              required header
//   label <v> <text>          optional per-vertex label
//   <u> <v>                   one arc, 0-based
//
// The normalised form drops comments and blank lines, and writes the name,
// the header, labels by ascending vertex, then arcs in ascending order, each
// line terminated by '\n'.

struct GraphFile {
  std::optional<std::string> name;
  Digraph graph;
  std::map<Vertex, std::string> labels;
};

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : InvalidArgument("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

GraphFile parse_graph_file(std::string_view text);
Digraph parse_graph(std::string_view text);

std::string serialize_graph_file(const GraphFile& file);
std::string serialize_graph(const Digraph& d);

/// Graphviz rendering. `node_labels`, when nonempty, must hold one label per
/// vertex and is emitted as the node label attribute.
std::string to_dot(const Digraph& d, std::span<const std::string> node_labels = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace digroot

#endif  // DIGROOT_GRAPH_IO_HPP
