// Copyright 2026 The hamparity Authors
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

#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamparity/error.hpp"
#include "hamparity/graph.hpp"

namespace hamparity {
namespace {

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r'))
      ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
           line[pos] != '\r')
      ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

bool parse_index(std::string_view token, std::size_t& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

MixedGraph parse_graph(std::string_view text) {
  std::optional<MixedGraph> graph;
  std::set<UnorderedPair> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = tokenize(strip_comment(line));
    if (tokens.empty()) continue;

    if (!graph) {
      std::size_t n = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_index(tokens[1], n)) {
        throw ParseError(line_no, "expected header 'n <N>'");
      }
      if (n < 1 || n > kMaxVertices) {
        throw ParseError(line_no, "vertex count " + std::to_string(n) +
                                      " outside [1, " +
                                      std::to_string(kMaxVertices) + "]");
      }
      graph.emplace(n);
      continue;
    }

    if (tokens.size() != 3 || (tokens[0] != "u" && tokens[0] != "d")) {
      throw ParseError(line_no, "expected 'u <i> <j>' or 'd <i> <j>'");
    }
    std::size_t i = 0;
    std::size_t j = 0;
    if (!parse_index(tokens[1], i) || !parse_index(tokens[2], j)) {
      throw ParseError(line_no, "vertex ids must be nonnegative integers");
    }
    if (i >= graph->size() || j >= graph->size()) {
      throw ParseError(line_no, "vertex out of range");
    }
    if (i == j) throw ParseError(line_no, "self-loop");
    const auto pair = UnorderedPair::of(static_cast<VertexId>(i),
                                        static_cast<VertexId>(j));
    if (!seen.insert(pair).second) {
      throw ParseError(line_no, "duplicate pair {" + std::to_string(pair.lo) +
                                    ", " + std::to_string(pair.hi) + "}");
    }
    if (tokens[0] == "u") {
      graph->set_undirected(pair.lo, pair.hi);
    } else {
      graph->set_arc(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }

  if (!graph) throw ParseError(line_no, "missing header 'n <N>'");
  return *std::move(graph);
}

std::string serialize_graph(const MixedGraph& g) {
  std::ostringstream out;
  out << "n " << g.size() << '\n';
  for (VertexId i = 0; i < g.size(); ++i)
    for (VertexId j = i + 1; j < g.size(); ++j) {
      switch (g.kind(i, j)) {
        case PairKind::NonEdge: break;
        case PairKind::Undirected: out << "u " << i << ' ' << j << '\n'; break;
        case PairKind::Directed:
          if (g.has_arc(i, j)) out << "d " << i << ' ' << j << '\n';
          else out << "d " << j << ' ' << i << '\n';
          break;
      }
    }
  return out.str();
}

std::optional<std::size_t> parse_partition_header(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;

    const auto hash = line.find('#');
    if (hash == std::string_view::npos) continue;
    const auto tokens = tokenize(line.substr(hash + 1));
    if (tokens.size() != 2 || tokens[0] != "T") continue;
    // Range form "0..k-1".
    const auto range = tokens[1];
    const auto dots = range.find("..");
    if (dots == std::string_view::npos) continue;
    std::size_t lo = 0;
    std::size_t hi = 0;
    if (!parse_index(range.substr(0, dots), lo) ||
        !parse_index(range.substr(dots + 2), hi) || lo != 0) {
      continue;
    }
    return hi + 1;
  }
  return std::nullopt;
}

std::string serialize_graph_with_partition(const MixedGraph& g,
                                           std::size_t t_count) {
  if (t_count == 0 || t_count > g.size()) {
    throw Error(ErrorCode::InvalidArgument, "T must be a nonempty prefix");
  }
  std::ostringstream out;
  out << "# T 0.." << t_count - 1 << '\n';
  if (t_count < g.size()) out << "# W " << t_count << ".." << g.size() - 1 << '\n';
  out << serialize_graph(g);
  return out.str();
}

}  // namespace hamparity
