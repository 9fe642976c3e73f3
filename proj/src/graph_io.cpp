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

#include "digroot/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace digroot {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits off the first whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  const auto end = rest.find_first_of(" \t");
  const std::string_view token = rest.substr(0, end);
  rest = end == std::string_view::npos ? std::string_view{} : trim(rest.substr(end));
  return token;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  GraphFile file;
  std::optional<std::size_t> n;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::string_view rest = line;
    const std::string_view head = next_token(rest);
    if (head == "name") {
      if (n) throw ParseError(line_no, "'name' must precede the vertices header");
      if (file.name) throw ParseError(line_no, "duplicate 'name' line");
      file.name = std::string(rest);
    } else if (head == "vertices") {
      if (n) throw ParseError(line_no, "duplicate vertices header");
      n = parse_index(next_token(rest), line_no);
      if (!rest.empty()) throw ParseError(line_no, "trailing text after vertex count");
    } else if (head == "label") {
      if (!n) throw ParseError(line_no, "'label' before the vertices header");
      const std::size_t v = parse_index(next_token(rest), line_no);
      if (v >= *n) throw ParseError(line_no, "label vertex " + std::to_string(v) + " out of range");
      if (rest.empty()) throw ParseError(line_no, "empty label");
      if (!file.labels.emplace(v, std::string(rest)).second) {
        throw ParseError(line_no, "duplicate label for vertex " + std::to_string(v));
      }
    } else {
      if (!n) throw ParseError(line_no, "arc before the vertices header");
      const std::size_t u = parse_index(head, line_no);
      const std::size_t v = parse_index(next_token(rest), line_no);
      if (!rest.empty()) throw ParseError(line_no, "trailing text after arc");
      if (u >= *n || v >= *n) {
        throw ParseError(line_no, "arc " + std::to_string(u) + " " + std::to_string(v) +
                                      " out of range for " + std::to_string(*n) +
                                      " vertices");
      }
      if (!seen.insert({u, v}).second) {
        throw ParseError(line_no, "duplicate arc " + std::to_string(u) + " " +
                                      std::to_string(v));
      }
      arcs.push_back({u, v});
    }
  }
  if (!n) throw ParseError(line_no, "missing 'vertices N' header");
  file.graph = Digraph(*n, arcs);
  return file;
}

Digraph parse_graph(std::string_view text) { return parse_graph_file(text).graph; }

std::string serialize_graph_file(const GraphFile& file) {
  std::string out;
  if (file.name) out += "name " + *file.name + "\n";
  out += "vertices " + std::to_string(file.graph.vertex_count()) + "\n";
  for (const auto& [v, label] : file.labels) {
    out += "label " + std::to_string(v) + " " + label + "\n";
  }
  for (const Arc& a : file.graph.arcs()) {
    out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  }
  return out;
}

std::string serialize_graph(const Digraph& d) { return serialize_graph_file({std::nullopt, d, {}}); }

std::string to_dot(const Digraph& d, std::span<const std::string> node_labels) {
  if (!node_labels.empty() && node_labels.size() != d.vertex_count()) {
    throw InvalidArgument("DOT export needs one label per vertex");
  }
  std::ostringstream dot;
  dot << "digraph G {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    dot << "  " << v;
    if (!node_labels.empty()) {
      std::string escaped;
      for (char c : node_labels[v]) {
        if (c == '"' || c == '\\') escaped += '\\';
        escaped += c;
      }
      dot << " [label=\"" << v << "\\n" << escaped << "\"]";
    }
    dot << ";\n";
  }
  for (const Arc& a : d.arcs()) dot << "  " << a.from << " -> " << a.to << ";\n";
  dot << "}\n";
  return dot.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

}  // namespace digroot
