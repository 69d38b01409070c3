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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

/// Receives one complete chordless path (or cycle) per call as a vertex
/// sequence. Return false to stop the enumeration; the graph is restored on
/// the way out.
using PathSink = std::function<bool(std::span<const VertexId>)>;

struct EnumOptions {
  /// Prune any path longer than this many edges. Bounding keeps outputs
  /// correct (exactly the unbounded outputs within the bound) but forfeits
  /// the per-output delay guarantee: reachability marks are rebuilt from
  /// scratch instead of updated incrementally, since pruned subtrees leave
  /// the incremental marks understating reachability.
  std::optional<std::uint32_t> max_edges;

  /// Restrict the root branching to first-step vertices with id strictly
  /// below this value, and branch ascending at the root. Used by the
  /// cycle-to-path reduction to report each cycle exactly once.
  std::optional<VertexId> root_branch_limit;
};

struct EnumStats {
  std::uint64_t outputs = 0;
  std::uint64_t iterations = 0;           // recursion-node count
  std::uint64_t recompute_calls = 0;      // full mark rebuilds
  std::uint64_t max_delay_edgescans = 0;  // edge scans between consecutive outputs
  bool bounded = false;                   // max_edges was in effect
  bool stopped = false;                   // sink requested stop

  EnumStats& operator+=(const EnumStats& o) {
    outputs += o.outputs;
    iterations += o.iterations;
    recompute_calls += o.recompute_calls;
    if (o.max_delay_edgescans > max_delay_edgescans)
      max_delay_edgescans = o.max_delay_edgescans;
    bounded = bounded || o.bounded;
    stopped = stopped || o.stopped;
    return *this;
  }
};

/// Rebuilds `marks` to hold exactly {u active : a u-t path exists avoiding
/// N(s)}. t itself is marked whenever it survives. `scratch` is clobbered
/// (it carries the N(s) flags).
inline void recompute_marks(const Graph& g, VertexId s, VertexId t, MarkSet& marks,
                            MarkSet& scratch) {
  marks.clear_all();
  scratch.clear_all();
  for (VertexId u : g.neighbors(s)) scratch.mark(u);
  g.add_work(g.degree(s));
  if (!g.is_active(t) || scratch.marked(t)) return;
  const VertexId src[1] = {t};
  mark_reachable(g, src, marks, [&](VertexId v) { return !scratch.marked(v); });
}

/// Upgrades marks from "reachable to t avoiding N(s) ∪ N(nxt_s)" (the state
/// a first child leaves behind) to "reachable to t avoiding N(s)". The
/// search starts only from vertices of N(nxt_s) \ N(s) that are t or
/// adjacent to a marked vertex, so its cost is linear in the edges of newly
/// marked vertices plus the degree sum over N(nxt_s). Returns the number of
/// newly marked vertices.
inline std::uint64_t update_marks_first_child(const Graph& g, VertexId s, VertexId t,
                                              VertexId nxt_s, MarkSet& marks,
                                              MarkSet& scratch) {
  scratch.clear_all();
  for (VertexId u : g.neighbors(s)) scratch.mark(u);
  g.add_work(g.degree(s));
  std::vector<VertexId> starts;
  for (VertexId u : g.neighbors(nxt_s)) {
    g.add_work(1);
    if (scratch.marked(u) || marks.marked(u)) continue;
    bool seeds = (u == t);
    if (!seeds) {
      for (VertexId w : g.neighbors(u)) {
        g.add_work(1);
        if (marks.marked(w)) {
          seeds = true;
          break;
        }
      }
    }
    if (seeds) starts.push_back(u);
  }
  return mark_reachable(g, starts, marks, [&](VertexId v) { return !scratch.marked(v); });
}

/// Vertices v in N(s) from which a v-t path exists in G \ (N(s) \ v),
/// ascending. Requires marks to encode reachability-to-t within G \ N(s)
/// with t marked; then v qualifies iff some neighbor of v is marked (the
/// v-adjacent-to-t case is covered because t is marked).
inline std::vector<VertexId> branch_candidates(const Graph& g, VertexId s, VertexId t,
                                               const MarkSet& marks) {
  (void)t;
  std::vector<VertexId> out;
  for (VertexId v : g.neighbors(s)) {
    g.add_work(1);
    for (VertexId u : g.neighbors(v)) {
      g.add_work(1);
      if (marks.marked(u)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

namespace detail {

inline void validate_endpoints(const Graph& g, VertexId s, VertexId t) {
  if (s >= g.vertex_count() || t >= g.vertex_count() || !g.is_active(s) ||
      !g.is_active(t) || s == t)
    throw std::invalid_argument("path enumeration requires two distinct active vertices");
}

/// Bookkeeping shared by both enumerators: output emission and delay
/// tracking measured in graph edge scans.
class Emitter {
 public:
  Emitter(const Graph& g, const PathSink& sink, EnumStats& stats)
      : g_(g), sink_(sink), stats_(stats), last_(g.work()) {}

  // Returns false when the sink asked to stop.
  bool emit(std::span<const VertexId> path) {
    std::uint64_t now = g_.work();
    std::uint64_t delay = now - last_;
    if (delay > stats_.max_delay_edgescans) stats_.max_delay_edgescans = delay;
    last_ = now;
    ++stats_.outputs;
    return sink_(path);
  }

 private:
  const Graph& g_;
  const PathSink& sink_;
  EnumStats& stats_;
  std::uint64_t last_;
};

}  // namespace detail

/// The simple recursive algorithm: at each node, test every branch vertex
/// with a from-scratch reachability search. O(|V|(|V|+|E|)) per output, used
/// as the reference in differential tests. Branch order matches the
/// optimized variant (witness successor first, then ascending), so outputs
/// agree including order.
inline EnumStats enumerate_chordless_st_paths_simple(Graph& g, VertexId s, VertexId t,
                                                     const PathSink& sink,
                                                     const EnumOptions& opts = {}) {
  detail::validate_endpoints(g, s, t);
  EnumStats stats;
  stats.bounded = opts.max_edges.has_value();
  detail::Emitter emitter(g, sink, stats);
  auto cp0 = g.checkpoint();
  std::vector<VertexId> prefix{s};
  std::vector<VertexId> scratch_out;
  bool stop = false;

  auto rec = [&](auto&& self, VertexId cur, const std::vector<VertexId>& witness,
                 std::size_t pos) -> void {
    ++stats.iterations;
    if (stop) return;
    const std::uint32_t prefix_edges = static_cast<std::uint32_t>(prefix.size() - 1);
    if (g.is_adjacent(cur, t)) {
      // Any longer completion would have the {cur,t} chord.
      if (!opts.max_edges || prefix_edges + 1 <= *opts.max_edges) {
        scratch_out.assign(prefix.begin(), prefix.end());
        scratch_out.push_back(t);
        if (!emitter.emit(scratch_out)) {
          stop = true;
          stats.stopped = true;
        }
      }
      return;
    }
    if (opts.max_edges && prefix_edges + 2 > *opts.max_edges) return;

    std::vector<VertexId> nbrs;
    g.neighbors_into(cur, nbrs);
    VertexId nxt = witness[pos + 1];

    auto branch = [&](VertexId v, const std::vector<VertexId>& w, std::size_t wpos) {
      auto cp = g.checkpoint();
      for (VertexId u : nbrs)
        if (u != v && g.is_active(u)) g.remove_vertex(u);
      g.remove_vertex(cur);
      prefix.push_back(v);
      self(self, v, w, wpos);
      prefix.pop_back();
      g.restore(cp);
    };

    branch(nxt, witness, pos + 1);
    for (VertexId v : nbrs) {
      if (stop) break;
      if (v == nxt) continue;
      // From-scratch existence check for a v-t path in G \ (N(cur) \ v);
      // the shortest such path doubles as the child's witness.
      auto cp = g.checkpoint();
      for (VertexId u : nbrs)
        if (u != v && g.is_active(u)) g.remove_vertex(u);
      g.remove_vertex(cur);
      auto w = shortest_path(g, v, t);
      g.restore(cp);
      if (w) branch(v, *w, 0);
    }
  };

  if (g.is_adjacent(s, t)) {
    ++stats.iterations;
    if (!opts.max_edges || *opts.max_edges >= 1) {
      const VertexId out[2] = {s, t};
      if (!emitter.emit(out)) stats.stopped = true;
    }
    return stats;
  }
  auto witness = shortest_path(g, s, t);
  if (witness) rec(rec, s, *witness, 0);
  g.restore(cp0);
  return stats;
}

namespace detail {

/// The optimized enumerator (witness reuse plus incremental reachability
/// marks), run on an explicit stack since recursion depth can reach |V|.
class PathEnumerator {
 public:
  PathEnumerator(Graph& g, VertexId t, const PathSink& sink, const EnumOptions& opts,
                 EnumStats& stats)
      : g_(g),
        t_(t),
        sink_(sink),
        opts_(opts),
        stats_(stats),
        marks_(g.vertex_count()),
        scratch_(g.vertex_count()),
        emitter_(g, sink, stats) {}

  void run(VertexId s) {
    auto cp0 = g_.checkpoint();
    marks_.clear_all();
    prefix_.assign(1, s);
    if (opts_.root_branch_limit) {
      run_restricted_root(s);
    } else {
      if (g_.is_adjacent(s, t_)) {
        ++stats_.iterations;
        emit_leaf();
        return;
      }
      auto witness = shortest_path(g_, s, t_);
      if (witness) {
        // The root iteration counts only when the node is non-empty, so
        // that every counted node leads to at least one output.
        ++stats_.iterations;
        descend(s, *witness, 0, /*count_entry=*/false);
        loop();
      }
    }
    g_.restore(cp0);
  }

 private:
  struct Frame {
    VertexId s;
    Graph::Checkpoint cp;
    VertexId nxt;  // kNil when every child is treated as non-first
    std::vector<VertexId> cands;
    std::size_t idx = 0;
    bool expanded = false;
  };

  bool bounded() const { return opts_.max_edges.has_value(); }

  void emit_leaf() {
    const std::uint32_t edges = static_cast<std::uint32_t>(prefix_.size());
    if (bounded() && edges > *opts_.max_edges) return;
    out_.assign(prefix_.begin(), prefix_.end());
    out_.push_back(t_);
    if (!emitter_.emit(out_)) {
      stop_ = true;
      stats_.stopped = true;
    }
  }

  // Walks the first-child chain from `cur` along the witness until a leaf
  // is output or the length bound prunes the chain. Pushes one frame per
  // internal node.
  void descend(VertexId cur, std::vector<VertexId> witness, std::size_t pos,
               bool count_entry = true) {
    while (true) {
      if (count_entry) ++stats_.iterations;
      count_entry = true;
      if (stop_) return;
      if (g_.is_adjacent(cur, t_)) {
        emit_leaf();
        return;
      }
      const std::uint32_t prefix_edges = static_cast<std::uint32_t>(prefix_.size() - 1);
      if (bounded() && prefix_edges + 2 > *opts_.max_edges) return;
      VertexId nxt = witness[pos + 1];
      Frame f;
      f.s = cur;
      f.cp = g_.checkpoint();
      f.nxt = nxt;
      remove_other_neighbors_and_self(cur, nxt);
      stack_.push_back(std::move(f));
      prefix_.push_back(nxt);
      cur = nxt;
      ++pos;
    }
  }

  void remove_other_neighbors_and_self(VertexId s, VertexId keep) {
    g_.neighbors_into(s, nbrs_);
    for (VertexId u : nbrs_)
      if (u != keep) g_.remove_vertex(u);
    g_.remove_vertex(s);
  }

  void loop() {
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      g_.restore(f.cp);
      prefix_.pop_back();
      if (stop_) {
        stack_.pop_back();
        continue;
      }
      if (!f.expanded) {
        f.expanded = true;
        // Step 3: repair marks on return from the first child, or rebuild
        // them outright when bounding may have left them incomplete.
        if (bounded()) {
          recompute_marks(g_, f.s, t_, marks_, scratch_);
          ++stats_.recompute_calls;
        } else {
          update_marks_first_child(g_, f.s, t_, f.nxt, marks_, scratch_);
        }
        auto all = branch_candidates(g_, f.s, t_, marks_);
        f.cands.reserve(all.size());
        for (VertexId v : all)
          if (v != f.nxt) f.cands.push_back(v);
      } else {
        // Step 8: a non-first child returned; rebuild marks for this level.
        recompute_marks(g_, f.s, t_, marks_, scratch_);
        ++stats_.recompute_calls;
      }
      if (f.idx < f.cands.size()) {
        VertexId v = f.cands[f.idx++];
        marks_.clear_all();  // step 5: children start with a clean slate
        remove_other_neighbors_and_self(f.s, v);
        // A v-t path is guaranteed here by the mark condition; its shortest
        // instance is chordless and becomes the child's witness.
        auto witness = shortest_path(g_, v, t_);
        assert(witness.has_value());
        prefix_.push_back(v);
        descend(v, std::move(*witness), 0);
      } else {
        stack_.pop_back();
      }
    }
  }

  Graph& g_;
  VertexId t_;
  const PathSink& sink_;
  EnumOptions opts_;
  EnumStats& stats_;
  MarkSet marks_, scratch_;
  Emitter emitter_;
  std::vector<VertexId> prefix_, out_, nbrs_;
  std::vector<Frame> stack_;
  bool stop_ = false;

  // Root stage of the cycle reduction: branch ascending over candidates with
  // id below the limit, every child treated as a non-first child.
  void run_restricted_root(VertexId s) {
    const VertexId limit = *opts_.root_branch_limit;
    if (g_.is_adjacent(s, t_)) {
      ++stats_.iterations;
      emit_leaf();
      return;
    }
    if (bounded() && *opts_.max_edges < 2) return;
    recompute_marks(g_, s, t_, marks_, scratch_);
    ++stats_.recompute_calls;
    std::vector<VertexId> cands;
    for (VertexId v : branch_candidates(g_, s, t_, marks_))
      if (v < limit) cands.push_back(v);
    if (!cands.empty()) ++stats_.iterations;  // empty stages count nothing
    auto cp = g_.checkpoint();
    for (VertexId v : cands) {
      if (stop_) break;
      marks_.clear_all();
      remove_other_neighbors_and_self(s, v);
      auto witness = shortest_path(g_, v, t_);
      assert(witness.has_value());
      prefix_.push_back(v);
      descend(v, std::move(*witness), 0);
      loop();
      prefix_.pop_back();
      g_.restore(cp);
    }
  }
};

}  // namespace detail

/// Enumerates every chordless s-t path exactly once, with O(|V|+|E|) work
/// per output (witness-path reuse plus incremental reachability marks). The
/// graph is restored to its input state on return, including when the sink
/// stops the run early.
inline EnumStats enumerate_chordless_st_paths(Graph& g, VertexId s, VertexId t,
                                              const PathSink& sink,
                                              const EnumOptions& opts = {}) {
  detail::validate_endpoints(g, s, t);
  EnumStats stats;
  stats.bounded = opts.max_edges.has_value();
  detail::PathEnumerator e(g, t, sink, opts, stats);
  e.run(s);
  return stats;
}

}  // namespace chordless
