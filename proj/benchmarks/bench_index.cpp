#include <benchmark/benchmark.h>

#include <vector>

#include "chamber/composer.hpp"
#include "chamber/dsl.hpp"
#include "chamber/index_engine.hpp"

using namespace chamber;

namespace {

// m chambers, each a Whitehead clasp plus n - 2 straight spans with the
// spans shifted by one slot so the strands wind around.
ChamberLink clasp_ring(std::size_t m, std::size_t n) {
  std::vector<ChamberContent> chambers;
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<Piece> pieces{Clasp{ClaspKind::whitehead, SlotPair{0, 1}, SlotPair{0, 1}}};
    for (std::size_t k = 2; k < n; ++k) {
      pieces.push_back(Span{static_cast<Slot>(k), static_cast<Slot>(2 + (k - 1) % (n - 2))});
    }
    chambers.emplace_back(std::move(pieces));
  }
  return ChamberLink(std::move(chambers), "ring");
}

void bm_trace(benchmark::State& state) {
  const auto link = clasp_ring(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(trace_components(link));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK(bm_trace)->Args({8, 8})->Args({64, 64})->Args({256, 256});

void bm_index(benchmark::State& state) {
  const auto link = clasp_ring(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(geometric_index(link));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK(bm_index)->Args({8, 8})->Args({64, 64})->Args({256, 256});

void bm_emit_parse(benchmark::State& state) {
  const auto text = emit(clasp_ring(state.range(0), state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(parse({text, "bench"}));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(bm_emit_parse)->Args({8, 8})->Args({64, 64});

void bm_complicated(benchmark::State& state) {
  const auto patterns = default_complicated_patterns();
  for (auto _ : state) benchmark::DoNotOptimize(geometric_index(generate_complicated(patterns)));
}
BENCHMARK(bm_complicated);

}  // namespace

BENCHMARK_MAIN();
