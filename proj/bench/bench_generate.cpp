// Parallel generation and checking against their serial references.

#include <benchmark/benchmark.h>

#include "crystal/checks.hpp"
#include "crystal/explorer.hpp"
#include "crystal/quiver_model.hpp"

namespace {

using crystal::Element;
using crystal::RootDatum;

const RootDatum& a3() {
  static const RootDatum rd = RootDatum::preset("A3");
  return rd;
}

std::vector<Element> highest(std::int64_t entry) {
  return {Element(crystal::model_highest(std::vector<crystal::Int>{entry, entry, entry}))};
}

void BM_GenerateSerial(benchmark::State& state) {
  const auto gens = highest(state.range(0));
  for (auto _ : state) {
    auto g = crystal::generate_serial(a3(), gens, 1000);
    benchmark::DoNotOptimize(g.nodes.data());
  }
}

void BM_GenerateParallel(benchmark::State& state) {
  const auto gens = highest(state.range(0));
  for (auto _ : state) {
    auto g = crystal::generate(a3(), gens, 1000);
    benchmark::DoNotOptimize(g.nodes.data());
  }
}

void BM_CheckAxiomsSerial(benchmark::State& state) {
  const auto g = crystal::generate(a3(), highest(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(crystal::check_axioms_serial(g).checked);
}

void BM_CheckAxiomsParallel(benchmark::State& state) {
  const auto g = crystal::generate(a3(), highest(state.range(0)), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(crystal::check_axioms(g).checked);
}

}  // namespace

BENCHMARK(BM_GenerateSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAxiomsSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckAxiomsParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
