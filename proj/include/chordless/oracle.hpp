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
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless::oracle {

/// Symmetric zero-diagonal adjacency snapshot supporting O(1) chord checks.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g) : n_(g.vertex_count()), a_(std::size_t(n_) * n_, false) {
    for (VertexId v = 0; v < n_; ++v) {
      if (!g.is_active(v)) continue;
      for (VertexId u : g.neighbors(v)) a_[std::size_t(v) * n_ + u] = true;
    }
  }

  std::uint32_t size() const { return n_; }
  bool at(VertexId u, VertexId v) const { return a_[std::size_t(u) * n_ + v]; }

 private:
  std::uint32_t n_;
  std::vector<bool> a_;
};

/// True iff no edge joins two non-consecutive vertices of seq. With
/// closed=true the wrap pair counts as consecutive. Throws if seq is not a
/// valid simple path/cycle of the snapshot.
inline bool is_chordless(const AdjacencyMatrix& m, std::span<const VertexId> seq,
                         bool closed) {
  const std::size_t k = seq.size();
  if (k < 2 || (closed && k < 3)) throw std::invalid_argument("sequence too short");
  std::vector<char> seen(m.size(), 0);
  for (VertexId v : seq) {
    if (v >= m.size() || seen[v]) throw std::invalid_argument("invalid vertex sequence");
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (!m.at(seq[i], seq[i + 1])) throw std::invalid_argument("non-adjacent consecutive pair");
  if (closed && !m.at(seq[k - 1], seq[0]))
    throw std::invalid_argument("non-adjacent wrap pair");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (closed && i == 0 && j == k - 1) continue;
      if (m.at(seq[i], seq[j])) return false;
    }
  }
  return true;
}

inline constexpr std::uint32_t kDefaultOracleLimit = 16;

///// Rotation/reflection-normalized form of a cycle: minimum-id vertex first,
/// then the smaller-id of its two cycle neighbors. Shared with cycle-enum so
/// set comparisons are trivial.
inline std::vector<VertexId> canonical_cycle(std::span<const VertexId> cyc) {
  const std::size_t k = cyc.size();
  std::size_t mi = 0;
  for (std::size_t i = 1; i < k; ++i)
    if (cyc[i] < cyc[mi]) mi = i;
  VertexId left = cyc[(mi + k - 1) % k];
  VertexId right = cyc[(mi + 1) % k];
  std::vector<VertexId> out;
  out.reserve(k);
  if (right <= left) {
    for (std::size_t i = 0; i < k; ++i) out.push_back(cyc[(mi + i) % k]);
  } else {
    for (std::size_t i = 0; i < k; ++i) out.push_back(cyc[(mi + k - i) % k]);
  }
  return out;
}

namespace detail {

inline void check_limit(const Graph& g, std::uint32_t limit) {
  if (g.vertex_count() > limit)
    throw std::invalid_argument("oracle size limit exceeded (exponential search)");
}

inline std::vector<std::vector<VertexId>> active_adjacency(const Graph& g) {
  std::vector<std::vector<VertexId>> adj(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_active(v)) continue;
    for (VertexId u : g.neighbors(v)) adj[v].push_back(u);
  }
  return adj;
}

}  // namespace detail

/// All chordless s-t paths by exhaustive DFS over simple paths.
inline std::set<std::vector<VertexId>> brute_paths(const Graph& g, VertexId s, VertexId t,
                                                   std::uint32_t limit = kDefaultOracleLimit) {
  detail::check_limit(g, limit);
  if (!g.is_active(s) || !g.is_active(t) || s == t)
    throw std::invalid_argument("brute_paths: bad endpoints");
  AdjacencyMatrix m(g);
  auto adj = detail::active_adjacency(g);
  std::set<std::vector<VertexId>> out;
  std::vector<VertexId> path{s};
  std::vector<char> used(g.vertex_count(), 0);
  used[s] = 1;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (v == t) {
      if (is_chordless(m, path, /*closed=*/false)) out.insert(path);
      return;
    }
    for (VertexId u : adj[v]) {
      if (used[u]) continue;
      used[u] = 1;
      path.push_back(u);
      self(self, u);
      path.pop_back();
      used[u] = 0;
    }
  };
  dfs(dfs, s);
  return out;
}

/// All chordless cycles, canonicalized, by exhaustive simple-cycle DFS.
inline std::set<std::vector<VertexId>> brute_cycles(const Graph& g,
                                                    std::uint32_t limit = kDefaultOracleLimit) {
  detail::check_limit(g, limit);
  AdjacencyMatrix m(g);
  auto adj = detail::active_adjacency(g);
  std::set<std::vector<VertexId>> out;
  std::vector<VertexId> path;
  std::vector<char> used(g.vertex_count(), 0);
  // Anchor a is the minimum vertex of each cycle; interior vertices are > a;
  // orientation deduped by requiring path[1] < path.back().
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    if (!g.is_active(a)) continue;
    path.assign(1, a);
    used[a] = 1;
    auto dfs = [&](auto&& self, VertexId v) -> void {
      for (VertexId u : adj[v]) {
        if (u == a && path.size() >= 3 && path[1] < path.back()) {
          if (is_chordless(m, path, /*closed=*/true)) out.insert(path);
          continue;
        }
        if (u <= a || used[u]) continue;
        used[u] = 1;
        path.push_back(u);
        self(self, u);
        path.pop_back();
        used[u] = 0;
      }
    };
    dfs(dfs, a);
    used[a] = 0;
  }
  return out;
}

struct CycleCount {
  std::uint64_t count = 0;
  bool saturated = false;  // cap hit; count is a lower bound
};

/// Counts all simple cycles (no chordless filter). The count explodes even at
/// modest sizes, so the search stops at `cap` and reports saturation.
inline CycleCount count_all_cycles(const Graph& g, std::uint32_t limit = kDefaultOracleLimit,
                                   std::uint64_t cap = 100000000) {
  detail::check_limit(g, limit);
  auto adj = detail::active_adjacency(g);
  CycleCount res;
  std::vector<VertexId> path;
  std::vector<char> used(g.vertex_count(), 0);
  for (VertexId a = 0; a < g.vertex_count() && !res.saturated; ++a) {
    if (!g.is_active(a)) continue;
    path.assign(1, a);
    used[a] = 1;
    auto dfs = [&](auto&& self, VertexId v) -> void {
      if (res.saturated) return;
      for (VertexId u : adj[v]) {
        if (u == a && path.size() >= 3 && path[1] < path.back()) {
          if (++res.count >= cap) {
            res.saturated = true;
            return;
          }
          continue;
        }
        if (u <= a || used[u]) continue;
        used[u] = 1;
        path.push_back(u);
        self(self, u);
        path.pop_back();
        used[u] = 0;
      }
    };
    dfs(dfs, a);
    used[a] = 0;
  }
  return res;
}

}  // namespace chordless::oracle
