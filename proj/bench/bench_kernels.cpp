// Serial reference vs OpenMP kernels on random protocols.
#include <benchmark/benchmark.h>

#include "infotrade/generators.hpp"
#include "infotrade/infocost.hpp"

using namespace infotrade;

namespace {

struct Instance {
  ProtocolTree pi;
  Measure mu;
};

Instance make(std::size_t side, std::size_t depth) {
  Rng rng = instance_rng(7, side * 100 + depth);
  return {random_protocol(rng, side, side, 2, depth), random_measure(rng, side, side)};
}

void transcript_serial(benchmark::State& st) {
  const auto in = make(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::transcript_distribution(in.pi, in.mu.rows(), in.mu.cols()));
}

void transcript_parallel(benchmark::State& st) {
  const auto in = make(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(transcript_distribution(in.pi, in.mu.rows(), in.mu.cols()));
}

void costs_serial(benchmark::State& st) {
  const auto in = make(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1)));
  const auto td = transcript_distribution(in.pi, in.mu.rows(), in.mu.cols());
  for (auto _ : st) {
    benchmark::DoNotOptimize(serial::internal_cost(td, in.mu));
    benchmark::DoNotOptimize(serial::external_ic(td, in.mu));
  }
}

void costs_parallel(benchmark::State& st) {
  const auto in = make(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1)));
  const auto td = transcript_distribution(in.pi, in.mu.rows(), in.mu.cols());
  for (auto _ : st) {
    benchmark::DoNotOptimize(internal_cost(td, in.mu));
    benchmark::DoNotOptimize(external_ic(td, in.mu));
  }
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int side : {4, 16, 64})
    for (int depth : {6, 10}) b->Args({side, depth});
}

}  // namespace

BENCHMARK(transcript_serial)->Apply(sizes);
BENCHMARK(transcript_parallel)->Apply(sizes);
BENCHMARK(costs_serial)->Apply(sizes);
BENCHMARK(costs_parallel)->Apply(sizes);

BENCHMARK_MAIN();
