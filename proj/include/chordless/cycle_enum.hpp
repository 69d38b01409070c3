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
#include <optional>
#include <stdexcept>

#include "chordless/graph.hpp"
#include "chordless/path_enum.hpp"

namespace chordless {

/// Receives each chordless cycle in canonical form: the anchor first, then
/// the smaller-id of its two cycle neighbors. In all-cycles mode the anchor
/// is the cycle's minimum-id vertex; in through(v) mode it is v.
using CycleSink = PathSink;

struct CycleQuery {
  enum class Mode { All, Through };
  Mode mode = Mode::All;
  VertexId through = 0;
  std::optional<std::uint32_t> max_len;  // edge-count bound, >= 3
  std::optional<std::uint64_t> cap;      // stop after this many outputs
};

/// Enumerates chordless cycles by reduction to chordless s-t path
/// enumeration: for each anchor s (ascending), for each closing neighbor t of
/// s, remove the edge {s,t} and enumerate chordless s-t paths whose first
/// step has id below t. The path sequence (s, a, ..., t) is exactly the
/// canonical cycle. After an anchor's stages the anchor is deleted: cycles
/// avoiding s have no chord incident to s, so they are unaffected. The graph
/// is restored before returning.
inline EnumStats enumerate_chordless_cycles(Graph& g, const CycleQuery& q,
                                            const CycleSink& sink) {
  if (q.max_len && *q.max_len < 3) throw std::invalid_argument("max_len must be >= 3");
  if (q.mode == CycleQuery::Mode::Through &&
      (q.through >= g.vertex_count() || !g.is_active(q.through)))
    throw std::invalid_argument("through-vertex out of range");

  EnumStats total;
  total.bounded = q.max_len.has_value();
  std::uint64_t remaining = q.cap.value_or(UINT64_MAX);
  if (remaining == 0) return total;
  bool stop = false;
  PathSink wrapped = [&](std::span<const VertexId> cyc) {
    bool keep = sink(cyc);
    if (--remaining == 0 || !keep) stop = true;
    return !stop;
  };

  EnumOptions opts;
  if (q.max_len) opts.max_edges = *q.max_len - 1;

  auto cp0 = g.checkpoint();
  std::vector<VertexId> anchors;
  if (q.mode == CycleQuery::Mode::Through) {
    anchors.push_back(q.through);
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.is_active(v)) anchors.push_back(v);
  }

  std::vector<VertexId> closers;
  for (VertexId s : anchors) {
    if (stop) break;
    g.neighbors_into(s, closers);
    for (VertexId t : closers) {
      if (stop) break;
      auto cp = g.checkpoint();
      g.remove_edge(s, t);
      opts.root_branch_limit = t;
      EnumStats st = enumerate_chordless_st_paths(g, s, t, wrapped, opts);
      total += st;
      g.restore(cp);
    }
    if (q.mode == CycleQuery::Mode::All && !stop) g.remove_vertex(s);
  }
  g.restore(cp0);
  total.stopped = stop;
  return total;
}

/// Chordless cycles containing v, each once, anchored at v.
inline EnumStats enumerate_chordless_cycles_through(Graph& g, VertexId v,
                                                    const CycleQuery& q,
                                                    const CycleSink& sink) {
  CycleQuery q2 = q;
  q2.mode = CycleQuery::Mode::Through;
  q2.through = v;
  return enumerate_chordless_cycles(g, q2, sink);
}

/// True iff v lies on some cycle; equivalently, on some chordless cycle.
inline bool vertex_in_chordless_cycle(Graph& g, VertexId v) {
  CycleQuery q;
  q.mode = CycleQuery::Mode::Through;
  q.through = v;
  q.cap = 1;
  EnumStats st = enumerate_chordless_cycles(g, q, [](std::span<const VertexId>) {
    return false;
  });
  return st.outputs > 0;
}

}  // namespace chordless
