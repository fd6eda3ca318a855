// Serial reference kernels vs the OpenMP versions on random 8-qubit batches.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qfl/kernels.hpp"
#include "qfl/model.hpp"
#include "qfl/qfedinf.hpp"

namespace {

struct Fixture {
  qfl::CircuitSpec spec;
  qfl::ParamVector params;
  qfl::ClassifierHead head{8, 10.0};
  std::vector<qfl::EncodedSample> batch;

  Fixture(int layers, int batch_size) : spec(qfl::CircuitSpec::chain(8, layers)), params(qfl::init_params(spec, 1)) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < batch_size; ++i) batch.push_back({qfl::random_state(8, rng), i % 8});
  }
};

void BM_LossGradSerial(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(qfl::kernels::serial::batch_loss_grad(f.spec, f.params, f.head, f.batch));
  st.SetItemsProcessed(st.iterations() * st.range(1));
}

void BM_LossGradParallel(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(qfl::kernels::batch_loss_grad(f.spec, f.params, f.head, f.batch));
  st.SetItemsProcessed(st.iterations() * st.range(1));
  st.counters["threads"] = omp_get_max_threads();
}

void BM_ProbsSerial(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(qfl::kernels::serial::batch_probs(f.spec, f.params, f.head, f.batch));
  st.SetItemsProcessed(st.iterations() * st.range(1));
}

void BM_ProbsParallel(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(qfl::kernels::batch_probs(f.spec, f.params, f.head, f.batch));
  st.SetItemsProcessed(st.iterations() * st.range(1));
  st.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_LossGradSerial)->Args({12, 16})->Args({12, 128})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LossGradParallel)->Args({12, 16})->Args({12, 128})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProbsSerial)->Args({12, 1024})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProbsParallel)->Args({12, 1024})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
