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
#include <stdexcept>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless::gen {

/// SplitMix64: tiny, platform-independent, and pinned so generated instances
/// are byte-identical everywhere. Golden-file tests guard the sequence.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); modulo reduction (bias is irrelevant here and
  /// determinism matters more).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// G(n,p): each of the C(n,2) pairs independently with probability
/// `density`, drawn in lexicographic pair order.
inline Graph gnp(std::uint32_t n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp: n must be >= 1");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("gnp: density outside [0,1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.unit() < density) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

/// Hamiltonian cycle 0-1-...-(n-1)-0 plus floor(n*(avg_degree-2)/2) distinct
/// random chords, none duplicating a cycle edge.
inline Graph sparse_cycle_plus_chords(std::uint32_t n, double avg_degree,
                                      std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("sparse_cycle_plus_chords: n must be >= 3");
  if (avg_degree < 2.0)
    throw std::invalid_argument("sparse_cycle_plus_chords: avg_degree must be >= 2");
  const std::uint64_t want =
      static_cast<std::uint64_t>(static_cast<double>(n) * (avg_degree - 2.0) / 2.0);
  const std::uint64_t max_chords = std::uint64_t(n) * (n - 1) / 2 - n;
  if (want > max_chords)
    throw std::invalid_argument("sparse_cycle_plus_chords: infeasible chord count");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  SplitMix64 rng(seed);
  std::set<std::pair<VertexId, VertexId>> chords;
  while (chords.size() < want) {
    VertexId a = static_cast<VertexId>(rng.below(n));
    VertexId b = static_cast<VertexId>(rng.below(n));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 0 && b == n - 1)) continue;  // cycle edge
    chords.emplace(a, b);
  }
  edges.insert(edges.end(), chords.begin(), chords.end());
  return Graph::from_edge_list(n, edges);
}

inline Graph complete(std::uint32_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

inline Graph cycle(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

inline Graph path(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

/// Star with hub 0 and n leaves.
inline Graph star(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("star: n must be >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(n + 1, edges);
}

/// Wheel with hub 0 and an n-vertex rim (vertices 1..n).
inline Graph wheel(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("wheel: rim must have >= 3 vertices");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % n + 1);
  }
  return Graph::from_edge_list(n + 1, edges);
}

/// Petersen graph: outer pentagon 0-4, inner pentagram 5-9, spokes i--i+5.
inline Graph petersen() {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edge_list(10, edges);
}

/// Random interval graph: n intervals in [0,1], edge iff overlap. Interval
/// graphs are chordal, so every chordless cycle downstream is a triangle.
inline Graph interval_random(std::uint32_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("interval_random: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<std::pair<double, double>> iv(n);
  for (auto& [a, b] : iv) {
    a = rng.unit();
    b = rng.unit();
    if (a > b) std::swap(a, b);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second)
        edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace chordless::gen
