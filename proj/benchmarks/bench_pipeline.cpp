// Copyright 2026 The Lemma Forge Authors.
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

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <string>

#include "lemma_forge/graph.hpp"
#include "lemma_forge/metrics.hpp"
#include "lemma_forge/select.hpp"
#include "lemma_forge/synthetic.hpp"
#include "lemma_forge/trace_io.hpp"

namespace lf = lemma_forge;

namespace {

// Corpora are generated once per size and shared across benchmarks.
const lf::SyntheticCorpus& corpus(std::size_t lemmas) {
  static std::map<std::size_t, std::unique_ptr<lf::SyntheticCorpus>> cache;
  auto& slot = cache[lemmas];
  if (!slot) {
    lf::SyntheticOptions opts;
    opts.lemmas = lemmas;
    opts.seed = 1;
    slot = std::make_unique<lf::SyntheticCorpus>(
        lf::generate_synthetic_corpus(opts));
  }
  return *slot;
}

const lf::ProofGraph& graph(std::size_t lemmas) {
  static std::map<std::size_t, std::unique_ptr<lf::ProofGraph>> cache;
  auto& slot = cache[lemmas];
  if (!slot) {
    const auto& c = corpus(lemmas);
    slot = std::make_unique<lf::ProofGraph>(
        lf::build_graph(c.trace, c.names, lf::AxiomTags("A")));
  }
  return *slot;
}

void BM_ParseTrace(benchmark::State& state) {
  const std::string text =
      lf::write_trace_string(corpus(static_cast<std::size_t>(state.range(0))).trace);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lf::parse_trace_string(text));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseTrace)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
  const auto& c = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lf::build_graph(c.trace, c.names, lf::AxiomTags("A")));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildGraph)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_DependenciesAndUses(benchmark::State& state) {
  const auto& g = graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lf::compute_D(g));
    benchmark::DoNotOptimize(lf::compute_U(g));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DependenciesAndUses)
    ->Arg(100000)
    ->Arg(1000000)
    ->Unit(benchmark::kMillisecond);

void BM_PageRank(benchmark::State& state) {
  const auto& g = graph(1000000);
  lf::MetricParams p;
  p.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lf::pagerank(g, p, lf::RankDirection::kForward));
  }
}
BENCHMARK(BM_PageRank)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SelectQ2(benchmark::State& state) {
  const auto& g = graph(100000);
  const auto named0 = g.named_indices();
  lf::MetricParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lf::best_lemmas(
        g, lf::Metric::kQ2, p, named0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SelectQ2)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SelectPR1(benchmark::State& state) {
  const auto& g = graph(100000);
  const auto named0 = g.named_indices();
  lf::MetricParams p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lf::best_lemmas(g, lf::Metric::kPR1, p, named0, 1000));
  }
}
BENCHMARK(BM_SelectPR1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
