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

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chordless {

using VertexId = std::uint32_t;

inline constexpr std::uint32_t kNil = 0xFFFFFFFFu;

/// Undirected simple graph with journaled vertex/edge removal.
///
/// Incidence lists are doubly linked per endpoint so that removing an edge
/// unlinks it in O(1) and a later restore relinks it in O(1), provided
/// restores happen in exact reverse order (which the journal enforces).
/// Removed vertices keep their ids; ids are never reused. Neighbor iteration
/// visits active neighbors in ascending id, and that order survives any
/// remove/restore sequence.
class Graph {
 public:
  struct Checkpoint {
    std::size_t pos = 0;
  };

  Graph() = default;

  /// Builds a graph with exactly the given edges. Rejects self-loops and
  /// duplicate edges (in either orientation).
  static Graph from_edge_list(std::uint32_t n,
                              std::span<const std::pair<VertexId, VertexId>> edges) {
    Graph g;
    g.n_ = n;
    g.active_.assign(n, 1);
    g.degree_.assign(n, 0);
    g.head_.assign(n, kNil);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop rejected");
      g.edges_.emplace_back(u, v);
    }
    // Detect duplicates via per-vertex sorted incidence.
    const std::size_t m = g.edges_.size();
    g.arc_target_.resize(2 * m);
    g.arc_prev_.assign(2 * m, kNil);
    g.arc_next_.assign(2 * m, kNil);
    std::vector<std::vector<std::uint32_t>> incident(n);
    for (std::size_t e = 0; e < m; ++e) {
      auto [u, v] = g.edges_[e];
      g.arc_target_[2 * e] = v;      // lives in u's list
      g.arc_target_[2 * e + 1] = u;  // lives in v's list
      incident[u].push_back(static_cast<std::uint32_t>(2 * e));
      incident[v].push_back(static_cast<std::uint32_t>(2 * e + 1));
    }
    for (VertexId v = 0; v < n; ++v) {
      auto& arcs = incident[v];
      std::sort(arcs.begin(), arcs.end(), [&](std::uint32_t a, std::uint32_t b) {
        return g.arc_target_[a] < g.arc_target_[b];
      });
      for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        if (g.arc_target_[arcs[i]] == g.arc_target_[arcs[i + 1]])
          throw std::invalid_argument("duplicate edge rejected");
      }
      std::uint32_t prev = kNil;
      for (std::uint32_t a : arcs) {
        g.arc_prev_[a] = prev;
        if (prev != kNil)
          g.arc_next_[prev] = a;
        else
          g.head_[v] = a;
        prev = a;
      }
      g.degree_[v] = static_cast<std::uint32_t>(arcs.size());
    }
    g.m_active_ = m;
    return g;
  }

  std::uint32_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t active_edge_count() const { return m_active_; }
  bool is_active(VertexId v) const { return v < n_ && active_[v] != 0; }
  std::uint32_t degree(VertexId v) const { return degree_[v]; }

  /// Rough count of edge touches performed by graph operations; used for
  /// delay accounting by the enumerators.
  std::uint64_t work() const { return work_; }
  void add_work(std::uint64_t w) const { work_ += w; }

  bool is_adjacent(VertexId u, VertexId v) const {
    assert(is_active(u) && is_active(v));
    if (degree_[v] < degree_[u]) std::swap(u, v);
    for (std::uint32_t a = head_[u]; a != kNil; a = arc_next_[a]) {
      ++work_;
      if (arc_target_[a] == v) return true;
    }
    return false;
  }

  class NeighborIterator {
   public:
    NeighborIterator(const Graph* g, std::uint32_t arc) : g_(g), arc_(arc) {}
    VertexId operator*() const { return g_->arc_target_[arc_]; }
    NeighborIterator& operator++() {
      arc_ = g_->arc_next_[arc_];
      return *this;
    }
    bool operator!=(const NeighborIterator& o) const { return arc_ != o.arc_; }
    bool operator==(const NeighborIterator& o) const { return arc_ == o.arc_; }

   private:
    const Graph* g_;
    std::uint32_t arc_;
  };

  struct NeighborRange {
    const Graph* g;
    VertexId v;
    NeighborIterator begin() const { return {g, g->head_[v]}; }
    NeighborIterator end() const { return {g, kNil}; }
  };

  /// Active neighbors of v in ascending id.
  NeighborRange neighbors(VertexId v) const {
    assert(is_active(v));
    return {this, v};
  }

  void neighbors_into(VertexId v, std::vector<VertexId>& out) const {
    out.clear();
    for (VertexId u : neighbors(v)) out.push_back(u);
    work_ += out.size();
  }

  /// Removes an active vertex and every incident edge. Writes at most
  /// degree(v) + 1 journal entries.
  void remove_vertex(VertexId v) {
    assert(is_active(v));
    while (head_[v] != kNil) {
      unlink_edge(head_[v] >> 1);
    }
    journal_.push_back(Entry{v, true});
    note_journal_peak();
    active_[v] = 0;
  }

  /// Removes an active edge {u,v}.
  void remove_edge(VertexId u, VertexId v) {
    assert(is_active(u) && is_active(v));
    if (degree_[v] < degree_[u]) std::swap(u, v);
    for (std::uint32_t a = head_[u]; a != kNil; a = arc_next_[a]) {
      ++work_;
      if (arc_target_[a] == v) {
        unlink_edge(a >> 1);
        return;
      }
    }
    assert(false && "remove_edge: edge not present");
  }

  Checkpoint checkpoint() const { return Checkpoint{journal_.size()}; }

  /// Rolls the graph back to the state it had when c was taken.
  void restore(const Checkpoint& c) {
    assert(c.pos <= journal_.size());
    while (journal_.size() > c.pos) {
      Entry e = journal_.back();
      journal_.pop_back();
      if (e.is_vertex) {
        active_[e.id] = 1;
      } else {
        relink_arc(2 * e.id + 1);
        relink_arc(2 * e.id);
        auto [u, v] = edges_[e.id];
        ++degree_[u];
        ++degree_[v];
        ++m_active_;
        ++work_;
      }
    }
  }

  std::size_t journal_size() const { return journal_.size(); }
  std::size_t peak_journal_size() const { return peak_journal_; }

  /// Active adjacency lists plus active flags; for state comparison in tests.
  std::vector<std::vector<VertexId>> snapshot() const {
    std::vector<std::vector<VertexId>> out(n_);
    for (VertexId v = 0; v < n_; ++v) {
      if (!is_active(v)) continue;
      for (VertexId u : neighbors(v)) out[v].push_back(u);
    }
    return out;
  }

  /// All currently active edges, each once with u < v.
  std::vector<std::pair<VertexId, VertexId>> active_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_active_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [u, v] = edges_[e];
      if (!is_active(u) || !is_active(v)) continue;
      // An edge can be unlinked while both endpoints stay active; check
      // presence via the arc links: an unlinked arc is never reachable from
      // a head, so scan u's list instead of trusting the arrays.
      bool present = false;
      for (std::uint32_t a = head_[u]; a != kNil; a = arc_next_[a]) {
        if ((a >> 1) == e) {
          present = true;
          break;
        }
      }
      if (present) out.emplace_back(std::min(u, v), std::max(u, v));
    }
    return out;
  }

 private:
  struct Entry {
    std::uint32_t id;  // vertex id or edge index
    bool is_vertex;
  };

  void note_journal_peak() {
    if (journal_.size() > peak_journal_) peak_journal_ = journal_.size();
  }

  std::uint32_t arc_owner(std::uint32_t a) const {
    const auto& e = edges_[a >> 1];
    return (a & 1) ? e.second : e.first;
  }

  void unlink_arc(std::uint32_t a) {
    // Keeps a's own prev/next intact so a LIFO relink can undo this.
    std::uint32_t p = arc_prev_[a], nx = arc_next_[a];
    if (p != kNil)
      arc_next_[p] = nx;
    else
      head_[arc_owner(a)] = nx;
    if (nx != kNil) arc_prev_[nx] = p;
  }

  void relink_arc(std::uint32_t a) {
    std::uint32_t p = arc_prev_[a], nx = arc_next_[a];
    if (p != kNil)
      arc_next_[p] = a;
    else
      head_[arc_owner(a)] = a;
    if (nx != kNil) arc_prev_[nx] = a;
  }

  void unlink_edge(std::size_t e) {
    unlink_arc(static_cast<std::uint32_t>(2 * e));
    unlink_arc(static_cast<std::uint32_t>(2 * e + 1));
    auto [u, v] = edges_[e];
    --degree_[u];
    --degree_[v];
    --m_active_;
    ++work_;
    journal_.push_back(Entry{static_cast<std::uint32_t>(e), false});
    note_journal_peak();
  }

  std::uint32_t n_ = 0;
  std::size_t m_active_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<VertexId> arc_target_;
  std::vector<std::uint32_t> arc_prev_, arc_next_;
  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> degree_;
  std::vector<char> active_;
  std::vector<Entry> journal_;
  std::size_t peak_journal_ = 0;
  mutable std::uint64_t work_ = 0;
};

/// Per-vertex flags with O(1) bulk clear via epoch stamping.
class MarkSet {
 public:
  explicit MarkSet(std::uint32_t n = 0) : stamp_(n, 0) {}

  void resize(std::uint32_t n) { stamp_.assign(n, 0); epoch_ = 1; }

  bool marked(VertexId v) const { return stamp_[v] == epoch_; }

  void mark(VertexId v) { stamp_[v] = epoch_; }

  void clear_all() {
    if (epoch_ == UINT64_MAX) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 0;
    }
    ++epoch_;
  }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 1;
};

/// Marks every vertex reachable from `sources` through active, currently
/// unmarked vertices satisfying `guard`. Sources already marked are skipped
/// without scanning their edges. Returns the number of newly marked vertices.
template <typename Guard>
std::uint64_t mark_reachable(const Graph& g, std::span<const VertexId> sources,
                             MarkSet& marks, Guard&& guard) {
  std::uint64_t newly = 0;
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (!g.is_active(s) || marks.marked(s) || !guard(s)) continue;
    marks.mark(s);
    ++newly;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      g.add_work(1);
      if (marks.marked(w) || !guard(w)) continue;
      marks.mark(w);
      ++newly;
      queue.push_back(w);
    }
  }
  return newly;
}

/// BFS shortest path between two active vertices, or nullopt when
/// disconnected. A minimum-edge-count path is always chordless.
inline std::optional<std::vector<VertexId>> shortest_path(const Graph& g, VertexId s,
                                                          VertexId t) {
  assert(g.is_active(s) && g.is_active(t) && s != t);
  std::vector<std::uint32_t> parent(g.vertex_count(), kNil);
  parent[s] = s;
  std::deque<VertexId> queue{s};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      g.add_work(1);
      if (parent[w] != kNil) continue;
      parent[w] = u;
      if (w == t) {
        std::vector<VertexId> path;
        for (VertexId x = t; x != s; x = parent[x]) path.push_back(x);
        path.push_back(s);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace chordless
