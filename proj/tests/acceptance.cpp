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

// Acceptance gate: one pass/fail line per criterion. Exit status is nonzero
// if any checked criterion fails; criterion 9 is informational only.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chordless/chordless.hpp"

using namespace chordless;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Instance {
  Graph graph;
  std::uint32_t n;
  double density;
};

// Shared corpus for criteria 2-8: exhaustive-feeling sweep of small random
// graphs. Dense instances above n=10 are rare because the brute-force oracle
// dominates the runtime there, not the enumerator.
std::vector<Instance> build_corpus() {
  std::vector<Instance> corpus;
  for (std::uint32_t n = 4; n <= 12; ++n) {
    for (double density : {0.2, 0.4, 0.6, 0.8}) {
      int seeds = 10;
      if (n >= 11 && density >= 0.6) seeds = 2;
      for (int s = 0; s < seeds; ++s) {
        std::uint64_t seed = 777000 + n * 1000 + static_cast<std::uint64_t>(density * 10) * 100 + s;
        corpus.push_back({gen::gnp(n, density, seed), n, density});
      }
    }
  }
  return corpus;
}

std::set<std::vector<VertexId>> enum_cycles(Graph& g, CycleQuery q, EnumStats* st_out,
                                            bool* dup_out) {
  std::set<std::vector<VertexId>> out;
  bool dup = false;
  EnumStats st = enumerate_chordless_cycles(g, q, [&](std::span<const VertexId> c) {
    if (!out.emplace(c.begin(), c.end()).second) dup = true;
    return true;
  });
  if (st_out) *st_out = st;
  if (dup_out) *dup_out = dup;
  return out;
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n";

  // 1. Complete-graph exactness: K_n has exactly C(n,3) chordless cycles.
  {
    bool ok = true;
    std::ostringstream detail;
    for (auto [n, want] : {std::pair{15u, 455ull}, {20u, 1140ull}, {25u, 2300ull}}) {
      Graph g = gen::complete(n);
      auto t0 = Clock::now();
      std::uint64_t count = 0;
      enumerate_chordless_cycles(g, {}, [&](std::span<const VertexId>) {
        ++count;
        return true;
      });
      double ms = ms_since(t0);
      if (count != want || ms >= 5000.0) ok = false;
      detail << "K" << n << "=" << count << " (" << static_cast<int>(ms) << "ms) ";
    }
    report(1, "complete-graph counts 455/1140/2300, each under 5s", ok, detail.str());
  }

  auto corpus = build_corpus();

  // Bookkeeping shared by criteria 2-8.
  bool any_duplicate = false;
  bool any_chord = false;

  // 2. Cycle oracle equivalence over the corpus, under 60s.
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (auto& inst : corpus) {
      oracle::AdjacencyMatrix m(inst.graph);
      auto expect = oracle::brute_cycles(inst.graph);
      bool dup = false;
      auto got = enum_cycles(inst.graph, {}, nullptr, &dup);
      any_duplicate = any_duplicate || dup;
      for (const auto& c : got)
        if (!oracle::is_chordless(m, c, true)) any_chord = true;
      if (got != expect) ok = false;
    }
    double ms = ms_since(t0);
    std::ostringstream detail;
    detail << corpus.size() << " instances, " << static_cast<int>(ms) << "ms";
    report(2, "cycle sets equal brute force on the corpus, under 60s",
           ok && ms < 60000.0, detail.str());
  }

  // 3. Path oracle equivalence: 5 random (s,t) pairs per instance, both
  // enumerator variants.
  {
    bool ok = true;
    gen::SplitMix64 rng(424242);
    for (auto& inst : corpus) {
      for (int k = 0; k < 5; ++k) {
        VertexId s = static_cast<VertexId>(rng.below(inst.n));
        VertexId t = static_cast<VertexId>(rng.below(inst.n));
        if (s == t) t = (t + 1) % inst.n;
        auto expect = oracle::brute_paths(inst.graph, s, t);
        std::set<std::vector<VertexId>> got_simple, got_opt;
        bool dup = false;
        enumerate_chordless_st_paths_simple(
            inst.graph, s, t, [&](std::span<const VertexId> p) {
              if (!got_simple.emplace(p.begin(), p.end()).second) dup = true;
              return true;
            });
        enumerate_chordless_st_paths(inst.graph, s, t, [&](std::span<const VertexId> p) {
          if (!got_opt.emplace(p.begin(), p.end()).second) dup = true;
          return true;
        });
        any_duplicate = any_duplicate || dup;
        if (got_simple != expect || got_opt != expect) ok = false;
      }
    }
    report(3, "path sets from both variants equal brute force, 5 (s,t) pairs each", ok);
  }

  // 4. Chordless-vs-all gap.
  {
    Graph k5 = gen::complete(5);
    auto all = oracle::count_all_cycles(k5);
    std::uint64_t chordless_k5 = enum_cycles(k5, {}, nullptr, nullptr).size();
    bool ok = (all.count == 37 && chordless_k5 == 10);
    for (auto& inst : corpus) {
      auto a = oracle::count_all_cycles(inst.graph);
      std::uint64_t c = enum_cycles(inst.graph, {}, nullptr, nullptr).size();
      if (a.count < c) ok = false;
      // Strict gap on the dense half of the corpus; acyclic draws (all=0)
      // trivially cannot show one.
      if (inst.density >= 0.4 && inst.n >= 8 && a.count > 0 && !(a.count > c)) ok = false;
    }
    std::ostringstream detail;
    detail << "K5: all=" << all.count << " chordless=" << chordless_k5;
    report(4, "all-cycle count 37 vs chordless 10 on K5; all >= chordless corpus-wide",
           ok, detail.str());
  }

  // 6. Output sensitivity: iteration bound plus sub-second first output on a
  // 10000-vertex sparse instance. (Computed before 5 so that its outputs also
  // feed the global duplicate/soundness tally.)
  bool crit6_ok = true;
  {
    std::ostringstream detail;
    for (auto& inst : corpus) {
      EnumStats st;
      bool dup = false;
      auto got = enum_cycles(inst.graph, {}, &st, &dup);
      any_duplicate = any_duplicate || dup;
      if (st.iterations > st.outputs * (inst.n + 1)) crit6_ok = false;
    }
    Graph big = gen::sparse_cycle_plus_chords(10000, 4, 99);
    auto t0 = Clock::now();
    std::uint64_t seen = 0;
    enumerate_chordless_cycles(big, {}, [&](std::span<const VertexId>) {
      ++seen;
      return false;
    });
    double ms = ms_since(t0);
    if (seen != 1 || ms >= 1000.0) crit6_ok = false;
    detail << "first output on sparse(10000,4) in " << static_cast<int>(ms) << "ms";
    report(5, "zero duplicate outputs and zero chordlessness violations anywhere",
           !any_duplicate && !any_chord);
    report(6, "iterations <= outputs*(n+1); first output under 1s at n=10000",
           crit6_ok, detail.str());
  }

  // 7. Restoration, including capped runs.
  {
    bool ok = true;
    for (auto& inst : corpus) {
      auto before = inst.graph.snapshot();
      enum_cycles(inst.graph, {}, nullptr, nullptr);
      if (inst.graph.snapshot() != before) ok = false;
      CycleQuery q;
      q.cap = 3;
      enum_cycles(inst.graph, q, nullptr, nullptr);
      if (inst.graph.snapshot() != before) ok = false;
    }
    Graph k10 = gen::complete(10);
    auto before = k10.snapshot();
    CycleQuery q;
    q.cap = 17;
    enum_cycles(k10, q, nullptr, nullptr);
    if (k10.snapshot() != before) ok = false;
    report(7, "graph restored after every enumeration, capped runs included", ok);
  }

  // 8. Through-vertex mode and length bounds.
  {
    bool ok = true;
    Graph w = gen::wheel(5);
    std::uint64_t hub = 0;
    enumerate_chordless_cycles_through(w, 0, {}, [&](std::span<const VertexId> c) {
      if (c.size() == 3 && c[0] == 0) ++hub;
      return true;
    });
    if (hub != 5) ok = false;
    for (auto& inst : corpus) {
      auto unbounded = enum_cycles(inst.graph, {}, nullptr, nullptr);
      for (std::uint32_t bound : {3u, 5u}) {
        CycleQuery q;
        q.max_len = bound;
        std::set<std::vector<VertexId>> expect;
        for (const auto& c : unbounded)
          if (c.size() <= bound) expect.insert(c);
        if (enum_cycles(inst.graph, q, nullptr, nullptr) != expect) ok = false;
      }
    }
    report(8, "wheel hub sees 5 triangles; max_len equals post-filtering", ok);
  }

  // 9. Out of scope by design: absolute timings (hardware-bound), counts on
  // other people's single random draws, real-world datasets (not shipped).
  // Nothing to check; the property suites above stand in.
  report(9, "absolute timings and external dataset counts excluded by design", true,
         "informational");

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << "\n";
  return failures == 0 ? 0 : 1;
}
