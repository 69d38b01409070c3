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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "chordless/cycle_enum.hpp"
#include "chordless/gen.hpp"
#include "chordless/oracle.hpp"
#include "test_util.hpp"

using namespace chordless;
using test::Collector;

namespace {

Graph make(std::uint32_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  std::vector<std::pair<VertexId, VertexId>> e(edges);
  return Graph::from_edge_list(n, e);
}

std::set<std::vector<VertexId>> all_cycles(Graph& g, CycleQuery q = {}) {
  Collector c;
  enumerate_chordless_cycles(g, q, c.sink());
  REQUIRE_FALSE(c.has_duplicates());
  return c.as_set();
}

// Independent cycle-membership via bridge detection: v lies on a cycle iff
// some incident edge is not a bridge.
bool on_cycle_by_bridges(const Graph& g, VertexId target) {
  const std::uint32_t n = g.vertex_count();
  auto adj = g.snapshot();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> incident_nonbridge(n, 0);
  int timer = 0;
  auto dfs = [&](auto&& self, VertexId v, VertexId parent, bool skipped_parent) -> void {
    disc[v] = low[v] = timer++;
    bool parent_skipped = skipped_parent;
    for (VertexId u : adj[v]) {
      if (u == parent && !parent_skipped) {
        parent_skipped = true;  // skip one parent edge only (no multi-edges anyway)
        continue;
      }
      if (disc[u] != -1) {
        low[v] = std::min(low[v], disc[u]);
        // Any non-tree edge lies on a cycle.
        incident_nonbridge[v] = 1;
        incident_nonbridge[u] = 1;
      } else {
        self(self, u, v, false);
        low[v] = std::min(low[v], low[u]);
        if (low[u] > disc[v]) {
          // bridge v-u
        } else {
          incident_nonbridge[v] = 1;
          incident_nonbridge[u] = 1;
        }
      }
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (g.is_active(v) && disc[v] == -1) dfs(dfs, v, v, true);
  return incident_nonbridge[target] != 0;
}

}  // namespace

TEST_CASE("complete graphs have exactly their triangles") {
  Graph g = gen::complete(15);
  Collector c;
  auto st = enumerate_chordless_cycles(g, {}, c.sink());
  CHECK(st.outputs == 455);
  for (const auto& cyc : c.seqs) CHECK(cyc.size() == 3);
  CHECK_FALSE(c.has_duplicates());
}

TEST_CASE("plain cycles and trees") {
  SECTION("C_n has exactly one chordless cycle") {
    for (std::uint32_t n : {3u, 4u, 7u, 12u}) {
      Graph g = gen::cycle(n);
      Collector c;
      auto st = enumerate_chordless_cycles(g, {}, c.sink());
      CHECK(st.outputs == 1);
      REQUIRE(c.seqs.size() == 1);
      CHECK(c.seqs[0].size() == n);
      CHECK(c.seqs[0][0] == 0);
    }
  }
  SECTION("trees have none") {
    Graph g = gen::path(8);
    Collector c;
    auto st = enumerate_chordless_cycles(g, {}, c.sink());
    CHECK(st.outputs == 0);
    CHECK(st.iterations == 0);
    Graph star = gen::star(6);
    Collector c2;
    CHECK(enumerate_chordless_cycles(star, {}, c2.sink()).outputs == 0);
  }
}

TEST_CASE("Petersen graph matches brute force") {
  Graph g = gen::petersen();
  auto expect = oracle::brute_cycles(g);
  auto got = all_cycles(g);
  CHECK(got == expect);
  std::size_t fives = 0, sixes = 0;
  for (const auto& c : got) {
    if (c.size() == 5) ++fives;
    if (c.size() == 6) ++sixes;
  }
  CHECK(fives == 12);
  CHECK(sixes == 10);
  CHECK(got.size() == 22);
}

TEST_CASE("exhaustive oracle equivalence, n <= 8") {
  for (std::uint32_t n = 4; n <= 8; ++n) {
    for (double density : {0.2, 0.4, 0.6, 0.8}) {
      for (int seed = 0; seed < 8; ++seed) {
        Graph g = gen::gnp(n, density, 10000 + seed * 17 + n);
        auto before = g.snapshot();
        auto expect = oracle::brute_cycles(g);
        auto got = all_cycles(g);
        REQUIRE(got == expect);
        REQUIRE(g.snapshot() == before);
      }
    }
  }
}

TEST_CASE("random oracle equivalence, n <= 12, with canonical anchors") {
  for (int iter = 0; iter < 60; ++iter) {
    const std::uint32_t n = 9 + iter % 4;
    Graph g = gen::gnp(n, 0.25 + 0.15 * (iter % 4), 20000 + iter);
    oracle::AdjacencyMatrix m(g);
    auto expect = oracle::brute_cycles(g);
    Collector c;
    auto st = enumerate_chordless_cycles(g, {}, c.sink());
    REQUIRE_FALSE(c.has_duplicates());
    REQUIRE(c.as_set() == expect);
    REQUIRE(st.iterations <= st.outputs * (n + 1));
    for (const auto& cyc : c.seqs) {
      REQUIRE(oracle::is_chordless(m, cyc, /*closed=*/true));
      // Anchor soundness: min id first, smaller neighbor second.
      for (VertexId v : cyc) REQUIRE(cyc[0] <= v);
      REQUIRE(cyc[1] < cyc.back());
    }
  }
}

TEST_CASE("through-vertex mode") {
  SECTION("wheel hub sees only the spokes' triangles") {
    Graph g = gen::wheel(5);
    Collector c;
    auto st = enumerate_chordless_cycles_through(g, 0, {}, c.sink());
    CHECK(st.outputs == 5);
    for (const auto& cyc : c.seqs) {
      CHECK(cyc.size() == 3);
      CHECK(cyc[0] == 0);
    }
  }
  SECTION("K5 through a vertex") {
    Graph g = gen::complete(5);
    Collector c;
    CHECK(enumerate_chordless_cycles_through(g, 0, {}, c.sink()).outputs == 6);
  }
  SECTION("acyclic vertex attached to K4") {
    // Vertex 4 hangs off K4 by a single edge: it lies on no cycle.
    Graph g = make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    Collector c;
    CHECK(enumerate_chordless_cycles_through(g, 4, {}, c.sink()).outputs == 0);
  }
  SECTION("agrees with brute force filtered to the vertex") {
    for (int iter = 0; iter < 40; ++iter) {
      const std::uint32_t n = 10;
      Graph g = gen::gnp(n, 0.3, 30000 + iter);
      VertexId v = static_cast<VertexId>(iter % n);
      std::set<std::vector<VertexId>> expect;
      for (const auto& c : oracle::brute_cycles(g))
        if (std::find(c.begin(), c.end(), v) != c.end()) expect.insert(c);
      Collector got;
      enumerate_chordless_cycles_through(g, v, {}, got.sink());
      std::set<std::vector<VertexId>> canon;
      for (const auto& c : got.seqs) canon.insert(oracle::canonical_cycle(c));
      REQUIRE(canon == expect);
      REQUIRE_FALSE(got.has_duplicates());
    }
  }
}

TEST_CASE("vertex_in_chordless_cycle") {
  Graph c5 = gen::cycle(5);
  for (VertexId v = 0; v < 5; ++v) CHECK(vertex_in_chordless_cycle(c5, v));
  Graph tree = gen::path(6);
  for (VertexId v = 0; v < 6; ++v) CHECK_FALSE(vertex_in_chordless_cycle(tree, v));
  SECTION("agrees with bridge-based membership on random graphs") {
    for (int iter = 0; iter < 50; ++iter) {
      Graph g = gen::gnp(12, 0.18, 40000 + iter);
      for (VertexId v = 0; v < 12; ++v)
        REQUIRE(vertex_in_chordless_cycle(g, v) == on_cycle_by_bridges(g, v));
    }
  }
}

TEST_CASE("max_len bound") {
  SECTION("rejects bounds below 3") {
    Graph g = gen::cycle(4);
    CycleQuery q;
    q.max_len = 2;
    Collector c;
    CHECK_THROWS_AS(enumerate_chordless_cycles(g, q, c.sink()), std::invalid_argument);
  }
  SECTION("bounded outputs equal post-filtered unbounded outputs") {
    for (int iter = 0; iter < 30; ++iter) {
      const std::uint32_t n = 11;
      Graph g = gen::gnp(n, 0.25, 50000 + iter);
      auto unbounded = all_cycles(g);
      for (std::uint32_t bound : {3u, 4u, 5u, 6u}) {
        CycleQuery q;
        q.max_len = bound;
        std::set<std::vector<VertexId>> expect;
        for (const auto& c : unbounded)
          if (c.size() <= bound) expect.insert(c);
        REQUIRE(all_cycles(g, q) == expect);
      }
    }
  }
}

TEST_CASE("cap stops cleanly and restores the graph") {
  Graph g = gen::complete(10);
  auto before = g.snapshot();
  CycleQuery q;
  q.cap = 17;
  Collector c;
  auto st = enumerate_chordless_cycles(g, q, c.sink());
  CHECK(st.outputs == 17);
  CHECK(st.stopped);
  CHECK(g.snapshot() == before);
}

TEST_CASE("interval graphs are chordal: every chordless cycle is a triangle") {
  for (int iter = 0; iter < 25; ++iter) {
    Graph g = gen::interval_random(14, 60000 + iter);
    Collector c;
    enumerate_chordless_cycles(g, {}, c.sink());
    for (const auto& cyc : c.seqs) REQUIRE(cyc.size() == 3);
  }
}
