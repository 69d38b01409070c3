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

// Command-line front end: enumerate chordless paths and cycles, generate
// instance graphs, and run the benchmark sweep.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chordless/chordless.hpp"

namespace {

using namespace chordless;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCapped = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generator specs look like "gnp:n=100,density=0.3" or "petersen".
Graph build_from_spec(const std::string& spec, std::uint64_t seed) {
  std::string family = spec;
  std::map<std::string, std::string> kv;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    family = spec.substr(0, colon);
    std::stringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("bad generator parameter: " + item);
      kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto num = [&](const std::string& key, double fallback = -1) -> double {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (fallback >= 0) return fallback;
      throw InputError("generator spec " + spec + " needs " + key + "=...");
    }
    return std::stod(it->second);
  };
  try {
    if (family == "gnp")
      return gen::gnp(static_cast<std::uint32_t>(num("n")), num("density"), seed);
    if (family == "sparse")
      return gen::sparse_cycle_plus_chords(static_cast<std::uint32_t>(num("n")),
                                           num("deg", 4), seed);
    if (family == "complete") return gen::complete(static_cast<std::uint32_t>(num("n")));
    if (family == "cycle") return gen::cycle(static_cast<std::uint32_t>(num("n")));
    if (family == "path") return gen::path(static_cast<std::uint32_t>(num("n")));
    if (family == "star") return gen::star(static_cast<std::uint32_t>(num("n")));
    if (family == "wheel") return gen::wheel(static_cast<std::uint32_t>(num("n")));
    if (family == "petersen") return gen::petersen();
    if (family == "interval")
      return gen::interval_random(static_cast<std::uint32_t>(num("n")), seed);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("generator: ") + e.what());
  }
  throw InputError("unknown generator family: " + family);
}

io::LabeledGraph load_graph(const std::string& input, const std::string& genspec,
                            std::uint64_t seed) {
  if (!input.empty() && !genspec.empty())
    throw InputError("give either --input or --gen, not both");
  if (!input.empty()) {
    std::ifstream f(input);
    if (!f) throw InputError("cannot open " + input);
    try {
      return io::parse_edge_list(f);
    } catch (const io::ParseError& e) {
      throw InputError(input + ": " + e.what());
    }
  }
  if (!genspec.empty()) return io::with_numeric_labels(build_from_spec(genspec, seed));
  throw InputError("an input graph is required (--input FILE or --gen SPEC)");
}

struct CommonOpts {
  std::string input, genspec;
  std::uint64_t seed = 1;
  std::uint64_t cap = 1000000;
  std::uint32_t max_len = 0;  // 0 = unbounded
  bool count_only = false;
  bool verify = false;
  bool no_output = false;
  bool strict_cap = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_bounds = true) {
  cmd->add_option("--input", o.input, "edge-list file (two labels per line, '#' comments)");
  cmd->add_option("--gen", o.genspec, "generator spec, e.g. gnp:n=100,density=0.3");
  cmd->add_option("--seed", o.seed, "generator seed");
  if (with_bounds) {
    cmd->add_option("--cap", o.cap, "stop after this many outputs")->check(CLI::PositiveNumber);
    cmd->add_option("--max-len", o.max_len, "maximum cycle length (edges)");
    cmd->add_flag("--count-only", o.count_only, "emit only the summary trailer");
    cmd->add_flag("--verify", o.verify, "re-check every output for chordlessness");
    cmd->add_flag("--no-output", o.no_output, "enumerate without formatting output");
    cmd->add_flag("--strict-cap", o.strict_cap, "exit nonzero when the cap is hit");
  }
}

struct RunResult {
  EnumStats stats;
  std::uint64_t elapsed_ms = 0;
  bool capped = false;
};

// Runs one enumeration with streaming output, timing, and optional
// verification. Timing covers enumeration plus output formatting (that is
// what a per-output cost claim should measure); --no-output drops the
// formatting for a pure-enumeration figure.
template <typename Runner>
RunResult run_streaming(const io::LabeledGraph& lg, const CommonOpts& o, bool closed,
                        Runner&& runner) {
  io::SolutionWriter writer(std::cout, lg.labels, o.count_only);
  std::optional<oracle::AdjacencyMatrix> matrix;
  if (o.verify) matrix.emplace(lg.graph);
  std::set<std::vector<VertexId>> seen;  // duplicate detection under --verify
  std::uint64_t remaining = o.cap;
  RunResult res;

  PathSink sink = [&](std::span<const VertexId> seq) {
    if (o.verify) {
      if (!oracle::is_chordless(*matrix, seq, closed))
        throw std::runtime_error("verification failed: output has a chord");
      std::vector<VertexId> key = closed ? oracle::canonical_cycle(seq)
                                         : std::vector<VertexId>(seq.begin(), seq.end());
      if (!seen.insert(std::move(key)).second)
        throw std::runtime_error("verification failed: duplicate output");
    }
    bool ok = o.no_output || writer.write(seq);
    if (--remaining == 0) {
      res.capped = true;
      return false;
    }
    return ok;
  };

  auto t0 = std::chrono::steady_clock::now();
  EnumStats st = runner(sink);
  auto t1 = std::chrono::steady_clock::now();
  res.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  res.stats = st;
  if (!o.no_output) writer.finish(res.elapsed_ms, res.capped);
  return res;
}

int finish(const CommonOpts& o, const RunResult& r) {
  if (o.no_output)
    std::cout << "# count=" << r.stats.outputs << " elapsed_ms=" << r.elapsed_ms
              << (r.capped ? " capped=true" : "") << "\n";
  return (r.capped && o.strict_cap) ? kExitCapped : 0;
}

CycleQuery make_query(const CommonOpts& o) {
  CycleQuery q;
  if (o.max_len) q.max_len = o.max_len;
  // The cap is enforced by the CLI sink so that verification still sees
  // every delivered output.
  return q;
}

int cmd_paths(const CommonOpts& o, const std::string& s_label, const std::string& t_label) {
  auto lg = load_graph(o.input, o.genspec, o.seed);
  VertexId s = lg.id_of(s_label), t = lg.id_of(t_label);
  EnumOptions opts;
  if (o.max_len) opts.max_edges = o.max_len;
  auto res = run_streaming(lg, o, /*closed=*/false, [&](const PathSink& sink) {
    return enumerate_chordless_st_paths(lg.graph, s, t, sink, opts);
  });
  return finish(o, res);
}

int cmd_cycles(const CommonOpts& o) {
  auto lg = load_graph(o.input, o.genspec, o.seed);
  CycleQuery q = make_query(o);
  auto res = run_streaming(lg, o, /*closed=*/true, [&](const CycleSink& sink) {
    return enumerate_chordless_cycles(lg.graph, q, sink);
  });
  return finish(o, res);
}

int cmd_through(const CommonOpts& o, const std::string& v_label) {
  auto lg = load_graph(o.input, o.genspec, o.seed);
  VertexId v = lg.id_of(v_label);
  CycleQuery q = make_query(o);
  auto res = run_streaming(lg, o, /*closed=*/true, [&](const CycleSink& sink) {
    return enumerate_chordless_cycles_through(lg.graph, v, q, sink);
  });
  return finish(o, res);
}

int cmd_count(const CommonOpts& o, std::uint32_t oracle_limit) {
  auto lg = load_graph(o.input, o.genspec, o.seed);
  std::uint64_t chordless_count = 0;
  CycleQuery q = make_query(o);
  q.cap = o.cap;
  enumerate_chordless_cycles(lg.graph, q, [&](std::span<const VertexId>) {
    ++chordless_count;
    return true;
  });
  auto all = oracle::count_all_cycles(lg.graph, oracle_limit, o.cap);
  std::cout << "chordless=" << chordless_count << " all_cycles=" << all.count
            << (all.saturated ? " saturated=true" : "") << "\n";
  return 0;
}

int cmd_gen(const std::string& genspec, std::uint64_t seed) {
  auto lg = io::with_numeric_labels(build_from_spec(genspec, seed));
  io::emit_edge_list(lg, std::cout);
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  auto lg = load_graph(o.input, o.genspec, o.seed);
  oracle::AdjacencyMatrix matrix(lg.graph);
  std::set<std::vector<VertexId>> seen;
  std::uint64_t violations = 0, outputs = 0, remaining = o.cap;
  CycleQuery q = make_query(o);
  enumerate_chordless_cycles(lg.graph, q, [&](std::span<const VertexId> cyc) {
    ++outputs;
    if (!oracle::is_chordless(matrix, cyc, true)) ++violations;
    if (!seen.insert(oracle::canonical_cycle(cyc)).second) ++violations;
    return --remaining != 0;
  });
  std::cout << "outputs=" << outputs << " violations=" << violations << "\n";
  return violations == 0 ? 0 : 1;
}

struct BenchRow {
  std::string spec;
  std::uint32_t n = 0;
  std::uint64_t m = 0, outputs = 0, elapsed_ms = 0, iterations = 0, peak_journal = 0;
  bool capped = false;
  std::string per10k;  // empty when outputs == 0
};

BenchRow bench_one(const std::string& spec, const CommonOpts& o) {
  Graph g = build_from_spec(spec, o.seed);
  BenchRow row;
  row.spec = spec;
  row.n = g.vertex_count();
  row.m = g.active_edge_count();
  std::uint64_t remaining = o.cap;
  bool capped = false;
  auto t0 = std::chrono::steady_clock::now();
  EnumStats st = enumerate_chordless_cycles(g, {}, [&](std::span<const VertexId>) {
    if (--remaining == 0) {
      capped = true;
      return false;
    }
    return true;
  });
  auto t1 = std::chrono::steady_clock::now();
  row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  row.outputs = st.outputs;
  row.iterations = st.iterations;
  row.peak_journal = g.peak_journal_size();
  row.capped = capped;
  if (st.outputs > 0) {
    std::ostringstream v;
    v << static_cast<double>(row.elapsed_ms) * 10000.0 / static_cast<double>(st.outputs);
    row.per10k = v.str();
  }
  return row;
}

int cmd_bench(const std::vector<std::string>& specs, const CommonOpts& o,
              unsigned jobs) {
  std::vector<BenchRow> rows(specs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) rows[i] = bench_one(specs[i], o);
  } else {
    std::vector<std::thread> workers;
    std::size_t next = 0;
    std::mutex mu;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (true) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= specs.size()) return;
            i = next++;
          }
          rows[i] = bench_one(specs[i], o);
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  std::cout << "spec,n,m,outputs,elapsed_ms,per10k_ms,capped,iterations,peak_journal\n";
  for (const auto& r : rows) {
    // Specs contain commas, so the field is always quoted.
    std::cout << '"' << r.spec << '"' << ',' << r.n << ',' << r.m << ',' << r.outputs << ','
              << r.elapsed_ms << ',' << r.per10k << ',' << (r.capped ? "true" : "false")
              << ',' << r.iterations << ',' << r.peak_journal << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chordless path and cycle enumeration"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string s_label, t_label, v_label;
  std::vector<std::string> bench_specs;
  unsigned jobs = 1;
  std::uint32_t oracle_limit = chordless::oracle::kDefaultOracleLimit;

  auto* paths = app.add_subcommand("paths", "enumerate chordless s-t paths");
  add_common(paths, o);
  paths->add_option("--s", s_label, "source label")->required();
  paths->add_option("--t", t_label, "target label")->required();

  auto* cycles = app.add_subcommand("cycles", "enumerate all chordless cycles");
  add_common(cycles, o);

  auto* through = app.add_subcommand("through", "chordless cycles through a vertex");
  add_common(through, o);
  through->add_option("--v", v_label, "anchor vertex label")->required();

  auto* count = app.add_subcommand("count", "compare chordless vs all-cycle counts");
  add_common(count, o);
  count->add_option("--oracle-limit", oracle_limit, "size limit for the all-cycle counter");

  auto* genc = app.add_subcommand("gen", "emit a generated graph as an edge list");
  genc->add_option("--gen", o.genspec, "generator spec")->required();
  genc->add_option("--seed", o.seed, "generator seed");

  auto* bench = app.add_subcommand("bench", "benchmark sweep over generated instances");
  bench->add_option("--gen", bench_specs, "generator spec (repeatable)")->required();
  bench->add_option("--seed", o.seed, "generator seed");
  bench->add_option("--cap", o.cap, "output cap per instance");
  bench->add_option("--jobs", jobs, "parallel instances (never within one enumeration)");

  auto* verify = app.add_subcommand("verify", "enumerate and re-check every output");
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (paths->parsed()) return cmd_paths(o, s_label, t_label);
    if (cycles->parsed()) return cmd_cycles(o);
    if (through->parsed()) return cmd_through(o, v_label);
    if (count->parsed()) return cmd_count(o, oracle_limit);
    if (genc->parsed()) return cmd_gen(o.genspec, o.seed);
    if (bench->parsed()) return cmd_bench(bench_specs, o, jobs);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
