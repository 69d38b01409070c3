// Copyright 2026 The Chordless Authors.
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

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless::io {

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_no(line) {}
  std::size_t line_no;
};

/// A graph plus the mapping between input labels and dense internal ids.
/// Labels map to ids in first-appearance order.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;                      // id -> label
  std::unordered_map<std::string, VertexId> index;      // label -> id

  VertexId id_of(const std::string& label) const {
    auto it = index.find(label);
    if (it == index.end()) throw std::invalid_argument("unknown vertex label: " + label);
    return it->second;
  }
};

/// Edge-list format: '#' lines are comments, every other non-blank line is
/// two whitespace-separated labels. Self-loops, duplicate edges, and
/// malformed lines are rejected with their line number.
inline LabeledGraph parse_edge_list(std::istream& in) {
  LabeledGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::unordered_map<std::uint64_t, char> seen;
  std::string line;
  std::size_t line_no = 0;
  auto intern = [&](const std::string& label) -> VertexId {
    auto [it, inserted] =
        out.index.try_emplace(label, static_cast<VertexId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError(line_no, "expected exactly two labels");
    VertexId u = intern(a), v = intern(b);
    if (u == v) throw ParseError(line_no, "self-loop '" + a + " " + b + "'");
    std::uint64_t key = (std::uint64_t(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.emplace(key, 1).second)
      throw ParseError(line_no, "duplicate edge '" + a + " " + b + "'");
    edges.emplace_back(u, v);
  }
  out.graph = Graph::from_edge_list(static_cast<std::uint32_t>(out.labels.size()), edges);
  return out;
}

inline LabeledGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

/// A graph with numeric labels equal to its dense ids.
inline LabeledGraph with_numeric_labels(Graph g) {
  LabeledGraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.labels.push_back(std::to_string(v));
    out.index.emplace(out.labels.back(), v);
  }
  out.graph = std::move(g);
  return out;
}

/// Emits the active edges so that parse(emit(parse(x))) == parse(x): one
/// edge per line, original labels, insertion order.
inline void emit_edge_list(const LabeledGraph& lg, std::ostream& os) {
  for (auto [u, v] : lg.graph.active_edges())
    os << lg.labels[u] << ' ' << lg.labels[v] << '\n';
}

/// Streams solutions as they are produced, one line of original labels per
/// path/cycle, then a summary trailer. In count_only mode only the trailer
/// appears. A failed write stops the enumeration via the sink protocol.
class SolutionWriter {
 public:
  SolutionWriter(std::ostream& os, const std::vector<std::string>& labels,
                 bool count_only = false)
      : os_(os), labels_(labels), count_only_(count_only) {}

  /// Sink-compatible: returns false when the stream is broken.
  bool write(std::span<const VertexId> seq) {
    ++count_;
    if (count_only_) return true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) os_ << ' ';
      os_ << labels_[seq[i]];
    }
    os_ << '\n';
    return static_cast<bool>(os_);
  }

  void finish(std::uint64_t elapsed_ms, bool capped = false) {
    os_ << "# count=" << count_ << " elapsed_ms=" << elapsed_ms;
    if (capped) os_ << " capped=true";
    os_ << '\n';
    os_.flush();
  }

  std::uint64_t count() const { return count_; }

 private:
  std::ostream& os_;
  const std::vector<std::string>& labels_;
  bool count_only_;
  std::uint64_t count_ = 0;
};

}  // namespace chordless::io
