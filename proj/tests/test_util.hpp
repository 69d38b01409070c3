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

#include <set>
#include <vector>

#include "chordless/graph.hpp"
#include "chordless/path_enum.hpp"

namespace chordless::test {

/// Collects sink outputs in order, optionally stopping after a limit.
struct Collector {
  std::vector<std::vector<VertexId>> seqs;
  std::uint64_t stop_after = UINT64_MAX;

  PathSink sink() {
    return [this](std::span<const VertexId> p) {
      seqs.emplace_back(p.begin(), p.end());
      return seqs.size() < stop_after;
    };
  }

  std::set<std::vector<VertexId>> as_set() const {
    return {seqs.begin(), seqs.end()};
  }

  bool has_duplicates() const { return as_set().size() != seqs.size(); }
};

}  // namespace chordless::test
